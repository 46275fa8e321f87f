#pragma once

#include <compare>
#include <stdexcept>
#include <string>

namespace ifcwod::rdf {

enum class TermKind { Iri, Blank, Literal };

// One RDF term. For literals, `value` is the lexical form and at most one of
// `datatype` / `lang` is set.
struct Term {
    TermKind kind = TermKind::Iri;
    std::string value;
    std::string datatype;
    std::string lang;

    static Term iri(std::string v);
    static Term blank(std::string label);
    static Term literal(std::string lexical, std::string datatype = "");
    static Term langLiteral(std::string lexical, std::string lang);

    bool isIri() const { return kind == TermKind::Iri; }
    bool isBlank() const { return kind == TermKind::Blank; }
    bool isLiteral() const { return kind == TermKind::Literal; }

    auto operator<=>(const Term&) const = default;
};

struct Triple {
    Term subject;
    Term predicate;
    Term object;

    auto operator<=>(const Triple&) const = default;
};

class ModelError : public std::runtime_error {
public:
    explicit ModelError(const std::string& what) : std::runtime_error(what) {}
};

// True if the string starts with `scheme:` per RFC 3986.
bool isAbsoluteIri(const std::string& s);

}  // namespace ifcwod::rdf
