#pragma once

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "rdf/term.hpp"

namespace ifcwod::query {

class QueryError : public std::runtime_error {
public:
    explicit QueryError(const std::string& msg) : std::runtime_error(msg) {}
};

struct Variable {
    std::string name;
    bool operator==(const Variable&) const = default;
};

using PatternSlot = std::variant<Variable, rdf::Term>;

struct TriplePattern {
    PatternSlot subject;
    PatternSlot predicate;
    PatternSlot object;
};

enum class CompareOp { Eq, Ne, Lt, Le, Gt, Ge };

// `FILTER(?var op constant)`; numeric comparison when the constant parses as
// a number, else string equality on the lexical form.
struct Filter {
    std::string variable;
    CompareOp op = CompareOp::Eq;
    rdf::Term constant;
};

struct Query {
    std::map<std::string, std::string> prefixes;
    std::vector<std::string> projection;
    bool distinct = false;
    std::vector<TriplePattern> patterns;
    std::vector<Filter> filters;

    std::size_t patternCount() const { return patterns.size(); }
};

// SPARQL subset: PREFIX, SELECT [DISTINCT], basic graph patterns, FILTER
// comparisons. OPTIONAL / UNION / property paths raise QueryError.
Query parse_query(const std::string& text);

Query parse_query_file(const std::string& path);

}  // namespace ifcwod::query
