#include "tbox/forge.hpp"

#include <set>

#include "tbox/vocab.hpp"

namespace ifcwod::tbox {

using express::lowerFirst;
using rdf::Graph;
using rdf::Term;
namespace v = vocab;

namespace {

void registerCommonPrefixes(Graph& g, const ForgeOptions& opts) {
    g.registerPrefix("rdf", v::kRdf);
    g.registerPrefix("rdfs", v::kRdfs);
    g.registerPrefix("owl", v::kOwl);
    g.registerPrefix("xsd", v::kXsd);
    g.registerPrefix("ifcwod", v::kIfcwod);
    g.registerPrefix("ifcowl", opts.ifcowl_ns);
}

struct CoreRow {
    const char* name;
    std::vector<const char*> domains;
    std::vector<const char*> ranges;
    bool subOfSimple;  // else owl:topObjectProperty
};

const std::vector<CoreRow>& coreRows() {
    static const std::vector<CoreRow> rows = {
        {"hasSimpleProperty", {"IfcPropertySet", "IfcComplexProperty"},
         {"IfcValue", "ENUMERATION", "IfcObjectReferenceSelect"}, false},
        {"hasComplexProperty", {"IfcPropertySet", "IfcComplexProperty"}, {"IfcComplexProperty"}, false},
        {"hasReferenceValue", {}, {"IfcObjectReferenceSelect"}, true},
        {"hasSingleValue", {}, {"IfcValue"}, true},
        {"hasListValue", {}, {"IfcValue"}, true},
        {"hasEnumeratedValue", {}, {"ENUMERATION"}, true},
        {"hasTableValue", {}, {"IfcValue"}, true},
        {"hasBoundedValue", {}, {"IfcValue"}, true},
    };
    return rows;
}

}  // namespace

Graph core_tbox(const ForgeOptions& opts) {
    Graph g;
    registerCommonPrefixes(g, opts);
    auto ifcowl = [&](const std::string& local) { return Term::iri(opts.ifcowl_ns + local); };
    for (const auto& row : coreRows()) {
        Term prop = v::ifcwod(row.name);
        g.insert(prop, v::rdfType(), v::owlObjectProperty());
        g.insert(prop, v::rdfsSubPropertyOf(),
                 row.subOfSimple ? v::ifcwod("hasSimpleProperty") : v::owlTopObjectProperty());
        for (const char* d : row.domains) g.insert(prop, v::rdfsDomain(), ifcowl(d));
        for (const char* r : row.ranges) g.insert(prop, v::rdfsRange(), ifcowl(r));
    }
    g.insert(v::ifcwod("hasComplexProperty"), v::rdfType(), v::owlIrreflexiveProperty());
    Term hasUnit = v::ifcwod("hasUnit");
    g.insert(hasUnit, v::rdfType(), v::owlObjectProperty());
    g.insert(hasUnit, v::rdfsDomain(), ifcowl("IfcValue"));
    g.insert(hasUnit, v::rdfsRange(), ifcowl("IfcUnit"));
    return g;
}

Graph derive_relationship_properties(const express::ExpressSchema& schema, const ForgeOptions& opts,
                                     std::vector<std::string>* warnings) {
    Graph g;
    registerCommonPrefixes(g, opts);
    auto ifcowl = [&](const std::string& local) { return Term::iri(opts.ifcowl_ns + local); };
    for (const auto& entityName : schema.entityNames()) {
        const express::EntityDef* def = schema.entity(entityName);
        // Properties are minted for the declaring entity only; subtypes use
        // the declared property through inheritance of meaning, not new IRIs.
        for (const auto& inv : def->inverses) {
            auto tuple = express::resolve_inverse(schema, entityName, inv, warnings);
            if (!tuple) continue;
            if (!schema.isKindOf(tuple->relationship_entity, "IfcRelationship")) continue;
            std::string range = schema.originalName(tuple->range_entity);
            if (range.empty()) {
                range = tuple->range_entity;
                if (warnings)
                    warnings->push_back("property " + tuple->property + "_" + entityName +
                                        ": range " + range + " unknown in schema, kept as external class");
            }
            Term prop = v::ifcwod(tuple->property + "_" + entityName);
            g.insert(prop, v::rdfType(), v::owlObjectProperty());
            g.insert(prop, v::rdfsDomain(), ifcowl(entityName));
            g.insert(prop, v::rdfsRange(), ifcowl(range));
            g.insert(prop, v::rdfsLabel(), v::stringLiteral(tuple->property));
        }
    }
    return g;
}

Graph map_psd(const psd::PsdDocument& doc, const ForgeOptions& opts,
              std::vector<std::string>* warnings) {
    Graph g;
    registerCommonPrefixes(g, opts);
    std::string ns = v::psetNamespace(doc.name);
    g.registerPrefix(lowerFirst(doc.name), ns);
    auto ifcowl = [&](const std::string& local) { return Term::iri(opts.ifcowl_ns + local); };

    // the pset's own annotation node
    Term psetNode = Term::iri(v::kIfcwodBase + v::encodeLocal(doc.name));
    g.insert(psetNode, v::rdfsLabel(), v::stringLiteral(doc.name));
    if (!doc.definition.empty()) g.insert(psetNode, v::rdfsComment(), v::stringLiteral(doc.definition));

    std::set<std::string> usedLocals;
    for (const auto& propDef : doc.properties) {
        std::string local = lowerFirst(propDef.name);
        if (!usedLocals.insert(local).second) {
            int n = 2;
            while (!usedLocals.insert(local + "_" + std::to_string(n)).second) ++n;
            local += "_" + std::to_string(n);
            if (warnings)
                warnings->push_back("pset " + doc.name + ": duplicate property name " +
                                    propDef.name + ", renamed to " + local);
        }
        Term prop = Term::iri(ns + v::encodeLocal(local));
        g.insert(prop, v::rdfType(), v::owlObjectProperty());                     // R1
        g.insert(prop, v::rdfsLabel(), v::stringLiteral(propDef.name));           // R2
        if (!propDef.definition.empty())
            g.insert(prop, v::rdfsComment(), v::stringLiteral(propDef.definition));  // R3
        for (const auto& [lang, text] : propDef.name_aliases)                     // R4
            g.insert(prop, v::rdfsLabel(), Term::langLiteral(text, lang));
        for (const auto& [lang, text] : propDef.definition_aliases)               // R5
            g.insert(prop, v::rdfsComment(), Term::langLiteral(text, lang));

        // R6: sub-property edge into the core hierarchy plus the range
        struct R6 {
            Graph& g;
            Term prop;
            const ForgeOptions& opts;
            const std::string& ns;
            const psd::PsdDocument& doc;
            std::vector<std::string>* warnings;
            Term cls(const std::string& local) const { return Term::iri(opts.ifcowl_ns + local); }
            void operator()(const psd::SingleValue& t) {
                g.insert(prop, v::rdfsSubPropertyOf(), v::ifcwod("hasSingleValue"));
                if (!t.datatype.empty()) g.insert(prop, v::rdfsRange(), cls(t.datatype));
            }
            void operator()(const psd::EnumeratedValue& t) {
                g.insert(prop, v::rdfsSubPropertyOf(), v::ifcwod("hasEnumeratedValue"));
                Term enumCls = Term::iri(ns + v::encodeLocal(t.enum_name));
                g.insert(enumCls, v::rdfsSubClassOf(), cls("ENUMERATION"));
                g.insert(prop, v::rdfsRange(), enumCls);
                for (const auto& item : t.items)
                    g.insert(Term::iri(ns + v::encodeLocal(item)), v::rdfType(), enumCls);
            }
            void operator()(const psd::ReferenceValue& t) {
                g.insert(prop, v::rdfsSubPropertyOf(), v::ifcwod("hasReferenceValue"));
                if (!t.ref_type.empty()) g.insert(prop, v::rdfsRange(), cls(t.ref_type));
            }
            void operator()(const psd::ListValue& t) {
                g.insert(prop, v::rdfsSubPropertyOf(), v::ifcwod("hasListValue"));
                if (!t.datatype.empty()) g.insert(prop, v::rdfsRange(), cls(t.datatype));
            }
            void operator()(const psd::BoundedValue& t) {
                g.insert(prop, v::rdfsSubPropertyOf(), v::ifcwod("hasBoundedValue"));
                if (!t.datatype.empty()) g.insert(prop, v::rdfsRange(), cls(t.datatype));
            }
            void operator()(const psd::TableValue& t) {
                g.insert(prop, v::rdfsSubPropertyOf(), v::ifcwod("hasTableValue"));
                // columns are not modelled; the value datatype is the range
                if (!t.defined_datatype.empty()) g.insert(prop, v::rdfsRange(), cls(t.defined_datatype));
            }
            void operator()(const psd::Unsupported& t) {
                if (warnings)
                    warnings->push_back("pset " + doc.name + ": property with unsupported type <" +
                                        t.element_name + "> left without sub-property edge");
            }
        };
        std::visit(R6{g, prop, opts, ns, doc, warnings}, propDef.ptype);
    }
    return g;
}

}  // namespace ifcwod::tbox
