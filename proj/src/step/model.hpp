#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace ifcwod::step {

class StepError : public std::runtime_error {
public:
    int line;
    StepError(int line, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line) + ": " + msg), line(line) {}
};

struct StepParam;

struct Unset {
    bool operator==(const Unset&) const = default;
};
struct Derived {
    bool operator==(const Derived&) const = default;
};
struct Integer {
    int64_t value = 0;
    bool operator==(const Integer&) const = default;
};
struct Real {
    double value = 0;
    std::string lexical;  // original form, kept for round-tripping
    bool operator==(const Real& o) const { return lexical == o.lexical; }
};
struct String {
    std::string raw;      // between the quotes, escapes intact
    std::string decoded;  // UTF-8
    bool operator==(const String& o) const { return raw == o.raw; }
};
struct Enum {
    std::string name;  // without the dots
    bool operator==(const Enum&) const = default;
};
struct Reference {
    int64_t id = 0;
    bool operator==(const Reference&) const = default;
};
struct Typed {
    std::string keyword;
    std::shared_ptr<StepParam> inner;  // exactly one parameter
    bool operator==(const Typed& o) const;
};
struct List {
    std::vector<StepParam> items;
    bool operator==(const List&) const = default;
};

struct StepParam {
    std::variant<Unset, Derived, Integer, Real, String, Enum, Reference, Typed, List> value;

    bool operator==(const StepParam&) const = default;

    bool isUnset() const { return std::holds_alternative<Unset>(value); }
    const List* asList() const { return std::get_if<List>(&value); }
    const Reference* asRef() const { return std::get_if<Reference>(&value); }
    const Typed* asTyped() const { return std::get_if<Typed>(&value); }
    const String* asString() const { return std::get_if<String>(&value); }
};

struct StepInstance {
    int64_t id = 0;
    std::string keyword;  // uppercase as read
    std::vector<StepParam> params;

    bool operator==(const StepInstance&) const = default;
};

struct StepModel {
    std::vector<std::string> header;  // raw header records, verbatim
    std::string schema_name;          // from FILE_SCHEMA, if present
    std::map<int64_t, StepInstance> instances;
    std::vector<std::string> warnings;  // dangling references etc.

    bool sameInstances(const StepModel& o) const { return instances == o.instances; }
};

// ISO 10303-21 string decoding: '' \\ \X\hh \X2\...\X0\ \X4\...\X0\ \S\c.
std::string decode_string(const std::string& raw);

StepModel parse_spf(const std::string& text);
StepModel parse_spf_file(const std::string& path);

std::string write_spf(const StepModel& model);

}  // namespace ifcwod::step
