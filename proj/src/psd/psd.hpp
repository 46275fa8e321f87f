#pragma once

#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace ifcwod::psd {

class PsdError : public std::runtime_error {
public:
    explicit PsdError(const std::string& msg) : std::runtime_error(msg) {}
};

struct SingleValue {
    std::string datatype;
};
struct EnumeratedValue {
    std::string enum_name;
    std::vector<std::string> items;
};
struct ReferenceValue {
    std::string ref_type;
};
struct ListValue {
    std::string datatype;
};
struct BoundedValue {
    std::string datatype;
};
struct TableValue {
    std::string defining_datatype;
    std::string defined_datatype;
};
struct Unsupported {
    std::string element_name;
};

using PropertyType = std::variant<SingleValue, EnumeratedValue, ReferenceValue, ListValue,
                                  BoundedValue, TableValue, Unsupported>;

struct PsdPropertyDef {
    std::string name;
    std::string ifcguid;
    std::string definition;
    std::vector<std::pair<std::string, std::string>> name_aliases;        // (lang, text)
    std::vector<std::pair<std::string, std::string>> definition_aliases;  // (lang, text)
    PropertyType ptype = Unsupported{};
};

struct PsdDocument {
    std::string name;
    std::string definition;
    std::vector<std::string> applicable_classes;
    std::vector<PsdPropertyDef> properties;
    std::vector<std::string> warnings;  // non-Pset_ name, unsupported property types
};

PsdDocument parse_psd(const std::string& xml_text);
PsdDocument parse_psd_file(const std::string& path);

// All .xml files in a directory, sorted by file name.
std::vector<PsdDocument> parse_psd_dir(const std::string& dir);

}  // namespace ifcwod::psd
