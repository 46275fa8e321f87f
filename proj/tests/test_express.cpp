#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "express/parser.hpp"
#include "express/schema.hpp"
#include "helpers.hpp"

using namespace ifcwod::express;

namespace {
const ExpressSchema& fixtureSchema() {
    static ExpressSchema s = parse_schema_file(testutil::fixture("ifc4_subset.exp"));
    return s;
}
}

TEST_CASE("name helpers") {
    CHECK(lowerFirst("IsDefinedBy") == "isDefinedBy");
    CHECK(lowerFirst("") == "");
    CHECK(toLower("IfcWall") == "ifcwall");
}

TEST_CASE("fixture schema parses with case-insensitive lookup") {
    const auto& s = fixtureSchema();
    REQUIRE(s.entity("IfcWallStandardCase") != nullptr);
    CHECK(s.entity("IFCWALLSTANDARDCASE") == s.entity("ifcwallstandardcase"));
    CHECK(s.originalName("IFCWALLSTANDARDCASE") == "IfcWallStandardCase");
    CHECK(s.entity("NoSuchEntity") == nullptr);
    CHECK(s.originalName("NoSuchEntity").empty());
}

TEST_CASE("flattened attributes follow the supertype chain in SPF order") {
    const auto& s = fixtureSchema();
    auto attrs = s.flattenedAttributesWithOwner("IfcWallStandardCase");
    REQUIRE(attrs.size() == 8);
    CHECK(attrs[0].first.name == "GlobalId");
    CHECK(attrs[0].second == "IfcRoot");
    CHECK(attrs[4].first.name == "ObjectType");
    CHECK(attrs[7].first.name == "Tag");
    CHECK(attrs[7].second == "IfcElement");
    CHECK(s.flattenedAttributes("IfcDoor").size() == 10);
    CHECK(s.flattenedAttributes("IfcSpace").size() == 11);
    CHECK(s.flattenedAttributes("IfcTask").size() == 11);
    CHECK(s.flattenedAttributes("IfcRelSequence").size() == 9);
}

TEST_CASE("aggregates record aggregation kind, bounds, and element type") {
    const auto& s = fixtureSchema();
    auto attrs = s.flattenedAttributes("IfcRelDefinesByProperties");
    auto it = std::find_if(attrs.begin(), attrs.end(),
                           [](const AttributeDef& a) { return a.name == "RelatedObjects"; });
    REQUIRE(it != attrs.end());
    CHECK(it->aggregation == Aggregation::Set);
    CHECK(it->type_name == "IfcObject");

    auto point = s.flattenedAttributes("IfcCartesianPoint");
    REQUIRE(point.size() == 1);
    CHECK(point[0].aggregation == Aggregation::List);
    REQUIRE(point[0].bounds.has_value());
    CHECK(point[0].bounds->low == 1);
    CHECK(point[0].bounds->high == 3);
    CHECK(point[0].type_name == "IfcLengthMeasure");
}

TEST_CASE("isKindOf walks SUBTYPE chains") {
    const auto& s = fixtureSchema();
    CHECK(s.isKindOf("IfcWallStandardCase", "IfcRoot"));
    CHECK(s.isKindOf("IfcTask", "IfcProcess"));
    CHECK(s.isKindOf("IfcRelSequence", "IfcRelationship"));
    CHECK_FALSE(s.isKindOf("IfcWall", "IfcProcess"));
    CHECK(s.isKindOf("IfcWall", "ifcwall"));  // reflexive, case-insensitive
}

TEST_CASE("selects and enumerations") {
    const auto& s = fixtureSchema();
    REQUIRE(s.isSelect("IfcProcessSelect"));
    CHECK(*s.selectMembers("IfcProcessSelect") == std::vector<std::string>{"IfcProcess"});
    REQUIRE(s.isEnumeration("IfcSequenceEnum"));
    auto items = *s.enumerationItems("IfcSequenceEnum");
    CHECK(std::find(items.begin(), items.end(), "FINISH_START") != items.end());
    CHECK_FALSE(s.isSelect("IfcWall"));
}

TEST_CASE("inverse range comes from the Relating-side attribute of the relationship") {
    const auto& s = fixtureSchema();
    const EntityDef* process = s.entity("IfcProcess");
    REQUIRE(process != nullptr);
    REQUIRE(process->inverses.size() == 3);

    std::vector<std::string> skipped;
    // FOR a Relating* attribute: range is that attribute's own type.
    auto pred = resolve_inverse(s, "IfcProcess", process->inverses[0], &skipped);
    REQUIRE(pred.has_value());
    CHECK(pred->property == "isPredecessorTo");
    CHECK(pred->range_entity == "IfcProcess");
    CHECK(pred->relationship_entity == "IfcRelSequence");
    CHECK(pred->for_attribute == "RelatingProcess");
    CHECK(pred->counterpart_attribute == "RelatedProcess");

    // FOR a Related* attribute: range is still the Relating side's type.
    auto succ = resolve_inverse(s, "IfcProcess", process->inverses[1], &skipped);
    REQUIRE(succ.has_value());
    CHECK(succ->property == "isSuccessorFrom");
    CHECK(succ->range_entity == "IfcProcess");
    CHECK(succ->for_attribute == "RelatedProcess");

    auto oper = resolve_inverse(s, "IfcProcess", process->inverses[2], &skipped);
    REQUIRE(oper.has_value());
    CHECK(oper->property == "operatesOn");
    CHECK(oper->range_entity == "IfcProcessSelect");
    CHECK(skipped.empty());
}

TEST_CASE("collect_inverse_tuples includes inherited inverses, sorted, deduplicated") {
    const auto& s = fixtureSchema();
    std::vector<std::string> skipped;
    auto tuples = collect_inverse_tuples(s, "IfcTask", &skipped);
    std::vector<std::pair<std::string, std::string>> got;
    for (const auto& t : tuples) got.emplace_back(t.property, t.range_entity);
    // isDefinedBy inherited from IfcObject; the three IfcProcess inverses; the
    // unresolvable HasAssociations inverse is skipped with a report.
    std::vector<std::pair<std::string, std::string>> want = {
        {"isDefinedBy", "IfcPropertySetDefinition"},
        {"isPredecessorTo", "IfcProcess"},
        {"isSuccessorFrom", "IfcProcess"},
        {"operatesOn", "IfcProcessSelect"},
    };
    CHECK(got == want);
    REQUIRE(skipped.size() == 1);
    CHECK(skipped[0].find("HasAssociations") != std::string::npos);
    CHECK(skipped[0].find("no Relating/Related pair") != std::string::npos);
}

TEST_CASE("resolve_inverse reports unresolvable cases instead of guessing") {
    ExpressSchema s = parse_schema(
        "SCHEMA T;\n"
        "ENTITY A;\n"
        "INVERSE\n"
        "  Bad : SET [0:?] OF Missing FOR X;\n"
        "  AlsoBad : SET [0:?] OF R FOR Nope;\n"
        "  NoPair : SET [0:?] OF P FOR Items;\n"
        "END_ENTITY;\n"
        "ENTITY R;\n"
        "  RelatingThing : A;\n"
        "  RelatedThings : SET [1:?] OF A;\n"
        "END_ENTITY;\n"
        "ENTITY P;\n"
        "  Items : SET [1:?] OF A;\n"
        "END_ENTITY;\n"
        "END_SCHEMA;\n");
    std::vector<std::string> skipped;
    auto tuples = collect_inverse_tuples(s, "A", &skipped);
    CHECK(tuples.empty());
    REQUIRE(skipped.size() == 3);
    CHECK(skipped[0].find("unknown relationship entity") != std::string::npos);
    CHECK(skipped[1].find("not found") != std::string::npos);
    CHECK(skipped[2].find("no Relating/Related pair") != std::string::npos);
}

TEST_CASE("where, derive, and unique clauses are skipped with diagnostics") {
    ExpressSchema s = parse_schema(
        "SCHEMA T;\n"
        "ENTITY A;\n"
        "  Name : STRING;\n"
        " WHERE\n"
        "  WR1 : SELF.Name <> '';\n"
        "END_ENTITY;\n"
        "END_SCHEMA;\n");
    REQUIRE(s.entity("A") != nullptr);
    CHECK(s.entity("A")->attributes.size() == 1);
    REQUIRE_FALSE(s.diagnostics.empty());
    CHECK(s.diagnostics[0].find("skipped where") != std::string::npos);
}

TEST_CASE("validate flags duplicate flattened attributes and bad FOR targets") {
    ExpressSchema s = parse_schema(
        "SCHEMA T;\n"
        "ENTITY Base;\n"
        "  Name : STRING;\n"
        "END_ENTITY;\n"
        "ENTITY Sub SUBTYPE OF (Base);\n"
        "  Name : STRING;\n"
        "INVERSE\n"
        "  Uses : SET [0:?] OF Base FOR Ghost;\n"
        "END_ENTITY;\n"
        "END_SCHEMA;\n");
    auto hasDiag = [&](const std::string& needle) {
        return std::any_of(s.diagnostics.begin(), s.diagnostics.end(), [&](const std::string& d) {
            return d.find(needle) != std::string::npos;
        });
    };
    CHECK(hasDiag("duplicate attribute name Name"));
    CHECK(hasDiag("does not name an attribute of Base"));
}

TEST_CASE("optional attributes and abstract entities") {
    const auto& s = fixtureSchema();
    const EntityDef* process = s.entity("IfcProcess");
    REQUIRE(process != nullptr);
    CHECK(process->is_abstract);
    auto attrs = s.flattenedAttributes("IfcRoot");
    REQUIRE(attrs.size() == 4);
    CHECK_FALSE(attrs[0].is_optional);  // GlobalId
    CHECK(attrs[2].is_optional);        // Name
}

TEST_CASE("parse errors carry line numbers") {
    try {
        parse_schema("SCHEMA T;\nENTITY Broken;\n  Name : STRING;\n");
        FAIL("expected ExpressParseError");
    } catch (const ExpressParseError& e) {
        CHECK(e.line >= 2);
        CHECK(std::string(e.what()).find("Broken") != std::string::npos);
    }
}

TEST_CASE("decodeTextBytes passes UTF-8 through and lifts Latin-1") {
    CHECK(decodeTextBytes("caf\xC3\xA9") == "caf\xC3\xA9");
    CHECK(decodeTextBytes("caf\xE9") == "caf\xC3\xA9");
}
