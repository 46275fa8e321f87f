#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <string>

#include "abox/convert.hpp"
#include "express/parser.hpp"
#include "helpers.hpp"
#include "step/model.hpp"
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

const Graph& coreTbox() {
    static Graph g = [] {
        Graph t = tbox::core_tbox();
        t.merge(tbox::derive_relationship_properties(fixtureSchema()));
        return t;
    }();
    return g;
}

std::string spf(const std::string& data) {
    return "ISO-10303-21;\nHEADER;\nFILE_DESCRIPTION((''),'2;1');\n"
           "FILE_NAME('','',(''),(''),'','','');\nFILE_SCHEMA(('IFC4'));\nENDSEC;\n"
           "DATA;\n" + data + "ENDSEC;\nEND-ISO-10303-21;\n";
}

Term inst(const std::string& entity, int64_t id) {
    return Term::iri("http://example.org/model#" + entity + "_" + std::to_string(id));
}

Term ifcowl(const std::string& local) { return Term::iri(v::kIfcowlDefault + local); }

Term xsd(const std::string& lex, const std::string& t) {
    return Term::literal(lex, v::kXsd + t);
}

}  // namespace

TEST_CASE("figure fixture converts: baseline typing and attributes") {
    step::StepModel m = step::parse_spf_file(testutil::fixture("figure1.ifc"));
    auto res = abox::convert(m, fixtureSchema(), coreTbox(), {});
    const Graph& g = res.graph;
    CHECK(res.violations.empty());

    Term wall = inst("IfcWallStandardCase", 3060);
    CHECK(g.contains({wall, v::rdfType(), ifcowl("IfcWallStandardCase")}));
    CHECK(g.contains({wall, ifcowl("GlobalId_of_IfcRoot"),
                      xsd("1iSKq$8HT2UvXyfHrxgRuh", "string")}));
    CHECK(g.contains({wall, ifcowl("Tag_of_IfcElement"), xsd("193133", "string")}));
    CHECK(g.contains({wall, ifcowl("ObjectPlacement_of_IfcProduct"),
                      inst("IfcLocalPlacement", 3036)}));

    // Enum attribute resolves to an ifcowl individual IRI.
    Term usage = inst("IfcMaterialLayerSetUsage", 3085);
    CHECK(g.contains({usage, ifcowl("LayerSetDirection_of_IfcMaterialLayerSetUsage"),
                      ifcowl("IfcLayerSetDirectionEnum_AXIS2")}));
    CHECK(g.contains({usage, ifcowl("DirectionSense_of_IfcMaterialLayerSetUsage"),
                      ifcowl("IfcDirectionSenseEnum_NEGATIVE")}));
    CHECK(g.contains({usage, ifcowl("OffsetFromReferenceLine_of_IfcMaterialLayerSetUsage"),
                      xsd("0.16", "decimal")}));
}

TEST_CASE("figure fixture converts: enrichment relationships and pset values") {
    step::StepModel m = step::parse_spf_file(testutil::fixture("figure1.ifc"));
    auto res = abox::convert(m, fixtureSchema(), coreTbox(), {});
    const Graph& g = res.graph;

    // #14997 relates 8 walls to property set #2950.
    Term pred = v::ifcwod("isDefinedBy_IfcObject");
    Term pset = inst("IfcPropertySet", 2950);
    CHECK(g.match(nullptr, &pred, &pset).size() == 8);
    CHECK(g.contains({inst("IfcWallStandardCase", 3060), pred, pset}));

    // Vendor pset is not forged in the TBox: predicate minted dynamically with
    // one sub-property edge back into the core hierarchy.
    Term largeur =
        Term::iri("http://example.org/model#psd/PSet_Revit_Type_Construction#largeur");
    CHECK(g.contains({pset, largeur, xsd("0.32", "decimal")}));
    CHECK(g.contains({largeur, v::rdfsSubPropertyOf(), v::ifcwod("hasSingleValue")}));
}

TEST_CASE("conversion modes are isolated") {
    step::StepModel m = step::parse_spf_file(testutil::fixture("figure1.ifc"));

    abox::ConversionConfig owlOnly;
    owlOnly.mode = abox::Mode::IfcOwl;
    auto baseline = abox::convert(m, fixtureSchema(), coreTbox(), owlOnly);
    for (const auto& t : baseline.graph.triples())
        CHECK(t.predicate.value.compare(0, v::kIfcwod.size(), v::kIfcwod) != 0);

    abox::ConversionConfig wodOnly;
    wodOnly.mode = abox::Mode::IfcWod;
    auto enriched = abox::convert(m, fixtureSchema(), coreTbox(), wodOnly);
    CHECK(enriched.graph.size() > 0);
    for (const auto& t : enriched.graph.triples())
        CHECK(t.predicate.value.find("_of_") == std::string::npos);

    abox::ConversionConfig bothCfg;
    auto both = abox::convert(m, fixtureSchema(), coreTbox(), bothCfg);
    CHECK(both.graph.size() == baseline.graph.size() + enriched.graph.size());
}

TEST_CASE("forged pset predicates are preferred over dynamic minting") {
    Graph t = coreTbox();
    t.merge(tbox::map_psd(psd::parse_psd_file(testutil::fixture("psd/Pset_WallCommon.xml"))));
    step::StepModel m = step::parse_spf(spf(
        "#1=IFCWALLSTANDARDCASE('aaaaaaaaaaaaaaaaaaaaaa',$,$,$,$,$,$,$);\n"
        "#2=IFCPROPERTYSINGLEVALUE('IsExternal',$,IFCBOOLEAN(.T.),$);\n"
        "#3=IFCPROPERTYSET('bbbbbbbbbbbbbbbbbbbbbb',$,'Pset_WallCommon',$,(#2));\n"
        "#4=IFCRELDEFINESBYPROPERTIES('cccccccccccccccccccccc',$,$,$,(#1),#3);\n"));
    auto res = abox::convert(m, fixtureSchema(), t, {});
    Term forged =
        Term::iri("http://buildingsmart.org/ontology/ifcwod/Pset_WallCommon#isExternal");
    CHECK(res.graph.contains({inst("IfcPropertySet", 3), forged, xsd("true", "boolean")}));
    // No dynamic namespace appears anywhere.
    for (const auto& tr : res.graph.triples())
        CHECK(tr.predicate.value.find("/model#psd/") == std::string::npos);
}

TEST_CASE("single values with a unit get a value node") {
    step::StepModel m = step::parse_spf(spf(
        "#1=IFCSIUNIT(*,.LENGTHUNIT.,$,.METRE.);\n"
        "#2=IFCPROPERTYSINGLEVALUE('NominalHeight',$,IFCLENGTHMEASURE(2.7),#1);\n"
        "#3=IFCPROPERTYSET('dddddddddddddddddddddd',$,'Pset_Custom',$,(#2));\n"));
    auto res = abox::convert(m, fixtureSchema(), coreTbox(), {});
    const Graph& g = res.graph;

    Term node = Term::blank("val2");
    Term pred = Term::iri("http://example.org/model#psd/Pset_Custom#nominalHeight");
    CHECK(g.contains({inst("IfcPropertySet", 3), pred, node}));
    CHECK(g.contains({node, v::rdfType(), ifcowl("IfcLengthMeasure")}));
    CHECK(g.contains({node, v::ifcwod("value"), xsd("2.7", "decimal")}));
    CHECK(g.contains({node, v::ifcwod("hasUnit"), inst("IfcSIUnit", 1)}));
}

TEST_CASE("AlwaysNode policy creates value nodes even without a unit") {
    step::StepModel m = step::parse_spf(spf(
        "#2=IFCPROPERTYSINGLEVALUE('Reference',$,IFCIDENTIFIER('D-1'),$);\n"
        "#3=IFCPROPERTYSET('eeeeeeeeeeeeeeeeeeeeee',$,'Pset_Custom',$,(#2));\n"));
    abox::ConversionConfig cfg;
    cfg.value_node_policy = abox::ValueNodePolicy::AlwaysNode;
    auto res = abox::convert(m, fixtureSchema(), coreTbox(), cfg);
    Term node = Term::blank("val2");
    CHECK(res.graph.contains({node, v::ifcwod("value"), xsd("D-1", "string")}));
    CHECK(res.graph.contains({node, v::rdfType(), ifcowl("IfcIdentifier")}));
}

TEST_CASE("cartesian points flatten to coordinateX/Y/Z and keep indexed baseline") {
    step::StepModel m = step::parse_spf(spf("#1=IFCCARTESIANPOINT((1.5,2.,3.));\n"));
    auto res = abox::convert(m, fixtureSchema(), coreTbox(), {});
    const Graph& g = res.graph;
    Term pt = inst("IfcCartesianPoint", 1);
    // Bare trailing dots are normalized to valid xsd:decimal lexicals.
    CHECK(g.contains({pt, ifcowl("Coordinates_1_of_IfcCartesianPoint"), xsd("1.5", "decimal")}));
    CHECK(g.contains({pt, ifcowl("Coordinates_3_of_IfcCartesianPoint"), xsd("3.0", "decimal")}));
    CHECK(g.contains({pt, v::ifcwod("coordinateX"), xsd("1.5", "decimal")}));
    CHECK(g.contains({pt, v::ifcwod("coordinateY"), xsd("2.0", "decimal")}));
    CHECK(g.contains({pt, v::ifcwod("coordinateZ"), xsd("3.0", "decimal")}));
}

TEST_CASE("complex property self-reference is a reported violation") {
    step::StepModel m = step::parse_spf(spf(
        "#2=IFCCOMPLEXPROPERTY('C',$,'usage',(#2));\n"
        "#3=IFCPROPERTYSET('ffffffffffffffffffffff',$,'Pset_Custom',$,(#2));\n"));
    auto res = abox::convert(m, fixtureSchema(), coreTbox(), {});
    CHECK(res.graph.contains({inst("IfcPropertySet", 3), v::ifcwod("hasComplexProperty"),
                              inst("IfcComplexProperty", 2)}));
    // The irreflexivity-violating self-loop triple is suppressed and reported.
    Term self = inst("IfcComplexProperty", 2);
    Term hcp = v::ifcwod("hasComplexProperty");
    CHECK_FALSE(res.graph.contains({self, hcp, self}));
    REQUIRE_FALSE(res.violations.empty());
    CHECK(res.violations[0].find("references itself") != std::string::npos);
}

TEST_CASE("complex property two-cycles are detected") {
    step::StepModel m = step::parse_spf(spf(
        "#2=IFCCOMPLEXPROPERTY('A',$,'u',(#4));\n"
        "#4=IFCCOMPLEXPROPERTY('B',$,'u',(#2));\n"
        "#3=IFCPROPERTYSET('gggggggggggggggggggggg',$,'Pset_Custom',$,(#2));\n"));
    auto res = abox::convert(m, fixtureSchema(), coreTbox(), {});
    bool flagged = std::any_of(res.violations.begin(), res.violations.end(),
                               [](const std::string& s) {
                                   return s.find("cycle") != std::string::npos;
                               });
    CHECK(res.graph.contains({inst("IfcComplexProperty", 2), v::ifcwod("hasComplexProperty"),
                              inst("IfcComplexProperty", 4)}));
    CHECK(flagged);
}

TEST_CASE("arity mismatches skip attributes with a warning, typing still emitted") {
    step::StepModel m = step::parse_spf(spf("#1=IFCWALLSTANDARDCASE('x',$);\n"));
    auto res = abox::convert(m, fixtureSchema(), coreTbox(), {});
    CHECK(res.graph.contains({inst("IfcWallStandardCase", 1), v::rdfType(),
                              ifcowl("IfcWallStandardCase")}));
    Term glob = ifcowl("GlobalId_of_IfcRoot");
    CHECK(res.graph.match(nullptr, &glob, nullptr).empty());
    REQUIRE_FALSE(res.warnings.empty());
    CHECK(res.warnings[0].find("expected 8 parameters, got 2") != std::string::npos);
}

TEST_CASE("map_value handles leaves, wrappers, and mismatches") {
    const auto& s = fixtureSchema();
    std::vector<std::string> diags;
    Term out;

    step::StepParam boolean;
    boolean.value = step::Enum{"T"};
    REQUIRE(abox::map_value(boolean, "IfcBoolean", s, v::kIfcowlDefault, out, &diags));
    CHECK(out == xsd("true", "boolean"));

    step::StepParam enumVal;
    enumVal.value = step::Enum{"FINISH_START"};
    REQUIRE(abox::map_value(enumVal, "IfcSequenceEnum", s, v::kIfcowlDefault, out, &diags));
    CHECK(out == ifcowl("IfcSequenceEnum_FINISH_START"));

    step::StepParam sci;
    sci.value = step::Real{1e-5, "1.0E-5"};
    REQUIRE(abox::map_value(sci, "IfcReal", s, v::kIfcowlDefault, out, &diags));
    CHECK(out == xsd("1.0E-5", "double"));

    step::StepParam integer;
    integer.value = step::Integer{42};
    REQUIRE(abox::map_value(integer, "IfcInteger", s, v::kIfcowlDefault, out, &diags));
    CHECK(out == xsd("42", "integer"));

    step::StepParam unset;
    unset.value = step::Unset{};
    CHECK_FALSE(abox::map_value(unset, "IfcLabel", s, v::kIfcowlDefault, out, &diags));
    CHECK(diags.empty());

    // Typed wrapper that contradicts the declared type: mapped, but flagged.
    step::StepParam typed;
    step::Typed t;
    t.keyword = "IFCBOOLEAN";
    auto innerParam = std::make_shared<step::StepParam>();
    innerParam->value = step::Enum{"F"};
    t.inner = innerParam;
    typed.value = t;
    REQUIRE(abox::map_value(typed, "IfcLengthMeasure", s, v::kIfcowlDefault, out, &diags));
    CHECK(out == xsd("false", "boolean"));
    REQUIRE_FALSE(diags.empty());
    CHECK(diags.back().find("IFCBOOLEAN") != std::string::npos);
}
