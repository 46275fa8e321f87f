#pragma once

#include <string>

#include "rdf/term.hpp"

namespace ifcwod::vocab {

inline const std::string kRdf = "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
inline const std::string kRdfs = "http://www.w3.org/2000/01/rdf-schema#";
inline const std::string kOwl = "http://www.w3.org/2002/07/owl#";
inline const std::string kXsd = "http://www.w3.org/2001/XMLSchema#";

inline const std::string kIfcwod = "http://buildingsmart.org/ontology/ifcwod#";
inline const std::string kIfcwodBase = "http://buildingsmart.org/ontology/ifcwod/";
inline const std::string kIfcowlDefault = "https://w3id.org/ifc/IFC4_ADD1#";

rdf::Term rdfType();
rdf::Term rdfsLabel();
rdf::Term rdfsComment();
rdf::Term rdfsDomain();
rdf::Term rdfsRange();
rdf::Term rdfsSubPropertyOf();
rdf::Term rdfsSubClassOf();
rdf::Term owlObjectProperty();
rdf::Term owlIrreflexiveProperty();
rdf::Term owlTopObjectProperty();
rdf::Term xsdString();

rdf::Term ifcwod(const std::string& local);
rdf::Term stringLiteral(const std::string& lexical);

// `http://buildingsmart.org/ontology/ifcwod/{PsetName}#`
std::string psetNamespace(const std::string& pset_name);

// Percent-encodes characters not allowed in an IRI local part.
std::string encodeLocal(const std::string& s);

}  // namespace ifcwod::vocab
