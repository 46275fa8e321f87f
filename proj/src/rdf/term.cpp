#include "rdf/term.hpp"

#include <cctype>

namespace ifcwod::rdf {

bool isAbsoluteIri(const std::string& s) {
    if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) return false;
    for (std::size_t i = 1; i < s.size(); ++i) {
        char c = s[i];
        if (c == ':') return true;
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '+' && c != '-' && c != '.')
            return false;
    }
    return false;
}

Term Term::iri(std::string v) {
    if (!isAbsoluteIri(v)) throw ModelError("IRI is not absolute: <" + v + ">");
    Term t;
    t.kind = TermKind::Iri;
    t.value = std::move(v);
    return t;
}

Term Term::blank(std::string label) {
    if (label.empty()) throw ModelError("blank node label must not be empty");
    Term t;
    t.kind = TermKind::Blank;
    t.value = std::move(label);
    return t;
}

Term Term::literal(std::string lexical, std::string datatype) {
    Term t;
    t.kind = TermKind::Literal;
    t.value = std::move(lexical);
    t.datatype = std::move(datatype);
    return t;
}

Term Term::langLiteral(std::string lexical, std::string lang) {
    if (lang.empty()) throw ModelError("language tag must not be empty");
    Term t;
    t.kind = TermKind::Literal;
    t.value = std::move(lexical);
    t.lang = std::move(lang);
    return t;
}

}  // namespace ifcwod::rdf
