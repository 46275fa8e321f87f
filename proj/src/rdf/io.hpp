#pragma once

#include <string>

#include "rdf/graph.hpp"

namespace ifcwod::rdf {

enum class Format { Turtle, NTriples };

struct ParseError : ModelError {
    int line;
    int column;
    ParseError(int line, int column, const std::string& msg)
        : ModelError("line " + std::to_string(line) + ", col " + std::to_string(column) + ": " + msg),
          line(line),
          column(column) {}
};

// Deterministic: triples sorted (subject, predicate, object). N-Triples output
// carries no prefixes and \u-escapes non-ASCII; Turtle keeps UTF-8 verbatim.
std::string serialize(const Graph& g, Format format);

Graph parse(const std::string& text, Format format);

Format formatForPath(const std::string& path);  // .nt -> NTriples, else Turtle

}  // namespace ifcwod::rdf
