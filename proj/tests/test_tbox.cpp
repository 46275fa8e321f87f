#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "express/parser.hpp"
#include "helpers.hpp"
#include "psd/psd.hpp"
#include "tbox/forge.hpp"
#include "tbox/vocab.hpp"

using namespace ifcwod;
using rdf::Graph;
using rdf::Term;
namespace v = vocab;

namespace {

const express::ExpressSchema& fixtureSchema() {
    static express::ExpressSchema s =
        express::parse_schema_file(testutil::fixture("ifc4_subset.exp"));
    return s;
}

Term ifcowl(const std::string& local) { return Term::iri(v::kIfcowlDefault + local); }

}  // namespace

TEST_CASE("core tbox carries the fixed property table") {
    Graph g = tbox::core_tbox();

    Term simple = v::ifcwod("hasSimpleProperty");
    CHECK(g.contains({simple, v::rdfType(), v::owlObjectProperty()}));
    CHECK(g.contains({simple, v::rdfsSubPropertyOf(), v::owlTopObjectProperty()}));
    CHECK(g.contains({simple, v::rdfsDomain(), ifcowl("IfcPropertySet")}));
    CHECK(g.contains({simple, v::rdfsDomain(), ifcowl("IfcComplexProperty")}));
    CHECK(g.contains({simple, v::rdfsRange(), ifcowl("IfcValue")}));
    CHECK(g.contains({simple, v::rdfsRange(), ifcowl("ENUMERATION")}));

    Term complex = v::ifcwod("hasComplexProperty");
    CHECK(g.contains({complex, v::rdfType(), v::owlIrreflexiveProperty()}));
    CHECK(g.contains({complex, v::rdfsRange(), ifcowl("IfcComplexProperty")}));

    // The six value kinds are sub-properties of hasSimpleProperty.
    for (const char* p : {"hasSingleValue", "hasEnumeratedValue", "hasBoundedValue",
                          "hasTableValue", "hasReferenceValue", "hasListValue"})
        CHECK(g.contains({v::ifcwod(p), v::rdfsSubPropertyOf(), simple}));
    CHECK(g.contains({v::ifcwod("hasEnumeratedValue"), v::rdfsRange(), ifcowl("ENUMERATION")}));
    CHECK(g.contains({v::ifcwod("hasReferenceValue"), v::rdfsRange(),
                      ifcowl("IfcObjectReferenceSelect")}));

    Term hasUnit = v::ifcwod("hasUnit");
    CHECK(g.contains({hasUnit, v::rdfsDomain(), ifcowl("IfcValue")}));
    CHECK(g.contains({hasUnit, v::rdfsRange(), ifcowl("IfcUnit")}));
}

TEST_CASE("core tbox honours a custom ifcowl namespace") {
    tbox::ForgeOptions opts;
    opts.ifcowl_ns = "http://example.org/ifc#";
    Graph g = tbox::core_tbox(opts);
    CHECK(g.contains({v::ifcwod("hasSingleValue"), v::rdfsRange(),
                      Term::iri("http://example.org/ifc#IfcValue")}));
}

TEST_CASE("relationship properties are minted per declaring entity") {
    std::vector<std::string> warnings;
    Graph g = tbox::derive_relationship_properties(fixtureSchema(), {}, &warnings);

    Term pred = v::ifcwod("isPredecessorTo_IfcProcess");
    CHECK(g.contains({pred, v::rdfType(), v::owlObjectProperty()}));
    CHECK(g.contains({pred, v::rdfsDomain(), ifcowl("IfcProcess")}));
    CHECK(g.contains({pred, v::rdfsRange(), ifcowl("IfcProcess")}));
    CHECK(g.contains({pred, v::rdfsLabel(), v::stringLiteral("isPredecessorTo")}));

    Term defined = v::ifcwod("isDefinedBy_IfcObject");
    CHECK(g.contains({defined, v::rdfsDomain(), ifcowl("IfcObject")}));
    CHECK(g.contains({defined, v::rdfsRange(), ifcowl("IfcPropertySetDefinition")}));

    // Select-typed Relating attribute keeps the select as range.
    CHECK(g.contains({v::ifcwod("operatesOn_IfcProcess"), v::rdfsRange(),
                      ifcowl("IfcProcessSelect")}));

    // No property is minted for subtypes that merely inherit the inverse.
    Term none = v::ifcwod("isDefinedBy_IfcTask");
    CHECK(g.match(&none, nullptr, nullptr).empty());
    Term nonePred = v::ifcwod("isPredecessorTo_IfcTask");
    CHECK(g.match(&nonePred, nullptr, nullptr).empty());
}

TEST_CASE("unknown ranges are kept as external classes with a warning") {
    express::ExpressSchema s = express::parse_schema(
        "SCHEMA T;\n"
        "ENTITY IfcRelationship;\n"
        "END_ENTITY;\n"
        "ENTITY A;\n"
        "INVERSE\n"
        "  Uses : SET [0:?] OF R FOR RelatedThing;\n"
        "END_ENTITY;\n"
        "ENTITY R SUBTYPE OF (IfcRelationship);\n"
        "  RelatingWidget : Widget;\n"
        "  RelatedThing : A;\n"
        "END_ENTITY;\n"
        "END_SCHEMA;\n");
    std::vector<std::string> warnings;
    Graph g = tbox::derive_relationship_properties(s, {}, &warnings);
    CHECK(g.contains({v::ifcwod("uses_A"), v::rdfsRange(), ifcowl("Widget")}));
    REQUIRE(warnings.size() == 1);
    CHECK(warnings[0].find("kept as external class") != std::string::npos);
}

TEST_CASE("relationships not reaching IfcRelationship are skipped") {
    express::ExpressSchema s = express::parse_schema(
        "SCHEMA T;\n"
        "ENTITY A;\n"
        "INVERSE\n"
        "  Uses : SET [0:?] OF R FOR RelatedThing;\n"
        "END_ENTITY;\n"
        "ENTITY R;\n"
        "  RelatingThing : A;\n"
        "  RelatedThing : A;\n"
        "END_ENTITY;\n"
        "END_SCHEMA;\n");
    Graph g = tbox::derive_relationship_properties(s);
    Term prop = v::ifcwod("uses_A");
    CHECK(g.match(&prop, nullptr, nullptr).empty());
}

TEST_CASE("map_psd applies R1 through R6 to the stack terminal fixture") {
    psd::PsdDocument doc =
        psd::parse_psd_file(testutil::fixture("psd/Pset_StackTerminalTypeCommon.xml"));
    std::vector<std::string> warnings;
    Graph g = tbox::map_psd(doc, {}, &warnings);
    CHECK(warnings.empty());

    std::string ns = v::psetNamespace("Pset_StackTerminalTypeCommon");
    CHECK(ns == "http://buildingsmart.org/ontology/ifcwod/Pset_StackTerminalTypeCommon#");

    Term ref = Term::iri(ns + "reference");
    CHECK(g.contains({ref, v::rdfType(), v::owlObjectProperty()}));                      // R1
    CHECK(g.contains({ref, v::rdfsLabel(), v::stringLiteral("Reference")}));             // R2
    REQUIRE_FALSE(g.match(&ref, nullptr, nullptr).empty());
    Term comment = v::rdfsComment();
    CHECK(g.match(&ref, &comment, nullptr).size() == 1);                                 // R3
    CHECK(g.contains({ref, v::rdfsLabel(), Term::langLiteral("Reference", "en")}));      // R4
    CHECK(g.contains({ref, v::rdfsLabel(),
                      Term::langLiteral("\xE5\x8F\x82\xE7\x85\xA7\xE8\xA8\x98\xE5\x8F\xB7",
                                        "ja-JP")}));
    CHECK(g.contains({ref, v::rdfsSubPropertyOf(), v::ifcwod("hasSingleValue")}));       // R6
    CHECK(g.contains({ref, v::rdfsRange(), ifcowl("IfcIdentifier")}));

    // Enumerated property: its own enum class with one individual per item.
    Term status = Term::iri(ns + "status");
    Term enumCls = Term::iri(ns + "PEnum_ElementStatus");
    CHECK(g.contains({status, v::rdfsSubPropertyOf(), v::ifcwod("hasEnumeratedValue")}));
    CHECK(g.contains({status, v::rdfsRange(), enumCls}));
    CHECK(g.contains({enumCls, v::rdfsSubClassOf(), ifcowl("ENUMERATION")}));
    Term type = v::rdfType();
    CHECK(g.match(nullptr, &type, &enumCls).size() == 4);
    for (const char* item : {"NEW", "EXISTING", "DEMOLISH", "TEMPORARY"})
        CHECK(g.contains({Term::iri(ns + item), v::rdfType(), enumCls}));
}

TEST_CASE("duplicate property names within a pset get a numeric suffix") {
    psd::PsdDocument doc;
    doc.name = "Pset_Dup";
    psd::PsdPropertyDef a;
    a.name = "Reference";
    a.ptype = psd::SingleValue{"IfcIdentifier"};
    doc.properties = {a, a};
    std::vector<std::string> warnings;
    Graph g = tbox::map_psd(doc, {}, &warnings);
    std::string ns = v::psetNamespace("Pset_Dup");
    CHECK(g.contains({Term::iri(ns + "reference"), v::rdfType(), v::owlObjectProperty()}));
    CHECK(g.contains({Term::iri(ns + "reference_2"), v::rdfType(), v::owlObjectProperty()}));
    REQUIRE(warnings.size() == 1);
    CHECK(warnings[0].find("renamed to reference_2") != std::string::npos);
}

TEST_CASE("unsupported property types are left without a sub-property edge") {
    psd::PsdDocument doc;
    doc.name = "Pset_Odd";
    psd::PsdPropertyDef p;
    p.name = "Weird";
    p.ptype = psd::Unsupported{"TypePropertyFancyValue"};
    doc.properties = {p};
    std::vector<std::string> warnings;
    Graph g = tbox::map_psd(doc, {}, &warnings);
    Term prop = Term::iri(v::psetNamespace("Pset_Odd") + "weird");
    Term sub = v::rdfsSubPropertyOf();
    CHECK(g.contains({prop, v::rdfType(), v::owlObjectProperty()}));
    CHECK(g.match(&prop, &sub, nullptr).empty());
    REQUIRE(warnings.size() == 1);
    CHECK(warnings[0].find("unsupported type") != std::string::npos);
}

TEST_CASE("pset namespaces percent-encode awkward characters") {
    CHECK(v::encodeLocal("A B") == "A%20B");
    CHECK(v::psetNamespace("PSet_Revit_Type_Construction") ==
          "http://buildingsmart.org/ontology/ifcwod/PSet_Revit_Type_Construction#");
}
