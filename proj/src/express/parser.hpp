#pragma once

#include <stdexcept>
#include <string>

#include "express/schema.hpp"

namespace ifcwod::express {

class ExpressParseError : public std::runtime_error {
public:
    int line;
    ExpressParseError(int line, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line) + ": " + msg), line(line) {}
};

// Parses ENTITY and TYPE blocks; WHERE/DERIVE/UNIQUE clauses and anything
// else are skipped and traced into schema.diagnostics.
ExpressSchema parse_schema(const std::string& text);

ExpressSchema parse_schema_file(const std::string& path);

// Byte-sniffing decode: valid UTF-8 passes through, else Latin-1 to UTF-8.
std::string decodeTextBytes(const std::string& bytes);

}  // namespace ifcwod::express
