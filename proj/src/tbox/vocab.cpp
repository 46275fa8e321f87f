#include "tbox/vocab.hpp"

#include <cctype>
#include <cstdio>

namespace ifcwod::vocab {

using rdf::Term;

Term rdfType() { return Term::iri(kRdf + "type"); }
Term rdfsLabel() { return Term::iri(kRdfs + "label"); }
Term rdfsComment() { return Term::iri(kRdfs + "comment"); }
Term rdfsDomain() { return Term::iri(kRdfs + "domain"); }
Term rdfsRange() { return Term::iri(kRdfs + "range"); }
Term rdfsSubPropertyOf() { return Term::iri(kRdfs + "subPropertyOf"); }
Term rdfsSubClassOf() { return Term::iri(kRdfs + "subClassOf"); }
Term owlObjectProperty() { return Term::iri(kOwl + "ObjectProperty"); }
Term owlIrreflexiveProperty() { return Term::iri(kOwl + "IrreflexiveProperty"); }
Term owlTopObjectProperty() { return Term::iri(kOwl + "topObjectProperty"); }
Term xsdString() { return Term::iri(kXsd + "string"); }

Term ifcwod(const std::string& local) { return Term::iri(kIfcwod + local); }

Term stringLiteral(const std::string& lexical) { return Term::literal(lexical, kXsd + "string"); }

std::string psetNamespace(const std::string& pset_name) {
    return kIfcwodBase + encodeLocal(pset_name) + "#";
}

std::string encodeLocal(const std::string& s) {
    std::string out;
    for (unsigned char c : s) {
        if (std::isalnum(c) || c == '_' || c == '-' || c == '.') {
            out += static_cast<char>(c);
        } else {
            char buf[4];
            std::snprintf(buf, sizeof buf, "%%%02X", c);
            out += buf;
        }
    }
    return out;
}

}  // namespace ifcwod::vocab
