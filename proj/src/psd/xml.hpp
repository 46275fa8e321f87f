#pragma once

#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace ifcwod::xml {

class XmlError : public std::runtime_error {
public:
    int line;
    XmlError(int line, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line) + ": " + msg), line(line) {}
};

struct Element {
    std::string name;
    std::map<std::string, std::string> attributes;
    std::vector<std::unique_ptr<Element>> children;
    std::string text;  // concatenated character data directly under this element

    const Element* child(const std::string& name) const;
    std::vector<const Element*> childrenNamed(const std::string& name) const;
    std::string attr(const std::string& name) const;
};

// Small non-validating parser: elements, attributes, character data, the five
// predefined entities plus numeric references, comments, CDATA. Input bytes
// may be UTF-8 or UTF-16 (detected by BOM / declaration).
std::unique_ptr<Element> parse_document(const std::string& bytes);

}  // namespace ifcwod::xml
