#include "abox/convert.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

#include "tbox/vocab.hpp"

namespace ifcwod::abox {

using express::ExpressSchema;
using express::lowerFirst;
using rdf::Graph;
using rdf::Term;
using step::StepInstance;
using step::StepModel;
using step::StepParam;
namespace v = vocab;

namespace {

bool ciEquals(const std::string& a, const std::string& b) {
    return express::toLower(a) == express::toLower(b);
}

std::string normalizeRealLexical(std::string s) {
    // SPF reals may end (or start) with a bare '.', which XSD rejects
    auto dot = s.find('.');
    if (dot != std::string::npos) {
        if (dot == 0 || !std::isdigit(static_cast<unsigned char>(s[dot - 1]))) s.insert(dot, "0");
        dot = s.find('.');
        if (dot + 1 == s.size() || !std::isdigit(static_cast<unsigned char>(s[dot + 1])))
            s.insert(dot + 1, "0");
    }
    return s;
}

bool isDoubleLexical(const std::string& s) {
    return s.find('E') != std::string::npos || s.find('e') != std::string::npos;
}

// Per-conversion state shared by the baseline and enrichment passes.
class Converter {
public:
    Converter(const StepModel& model, const ExpressSchema& schema, const Graph& tbox,
              const ConversionConfig& cfg)
        : model_(model), schema_(schema), tbox_(tbox), cfg_(cfg) {}

    ConversionResult run() {
        buildIriTable();
        if (cfg_.mode == Mode::IfcOwl || cfg_.mode == Mode::Both) baselinePass();
        if (cfg_.mode == Mode::IfcWod || cfg_.mode == Mode::Both) enrichmentPass();
        registerPrefixes();
        ConversionResult res;
        res.graph = std::move(out_);
        res.warnings = std::move(warnings_);
        res.violations = std::move(violations_);
        return res;
    }

private:
    const StepModel& model_;
    const ExpressSchema& schema_;
    const Graph& tbox_;
    const ConversionConfig& cfg_;
    Graph out_;
    std::map<int64_t, Term> iris_;
    std::map<int64_t, std::string> entity_names_;  // proper-cased entity name per instance
    std::vector<std::string> warnings_;
    std::vector<std::string> violations_;
    std::set<std::string> used_pset_prefixes_;
    bool used_dyn_ns_ = false;

    void warn(const std::string& msg) { warnings_.push_back(msg); }

    std::string entityName(const StepInstance& inst) const {
        std::string n = schema_.originalName(inst.keyword);
        return n.empty() ? inst.keyword : n;
    }

    void buildIriTable() {
        for (const auto& [id, inst] : model_.instances) {
            std::string name = entityName(inst);
            entity_names_[id] = name;
            iris_[id] = Term::iri(cfg_.base + v::encodeLocal(name) + "_" + std::to_string(id));
        }
    }

    Term ifcowl(const std::string& local) const { return Term::iri(cfg_.ifcowl_ns + local); }

    Term attrPredicate(const std::string& attr, const std::string& owner) const {
        return ifcowl(attr + "_of_" + owner);
    }

    Term indexedPredicate(const std::string& attr, std::size_t i, const std::string& owner) const {
        return ifcowl(attr + "_" + std::to_string(i) + "_of_" + owner);
    }

    const Term* instanceIri(int64_t id) {
        auto it = iris_.find(id);
        return it == iris_.end() ? nullptr : &it->second;
    }

    bool paramTerm(const StepParam& p, const std::string& expected, Term& out) {
        if (const auto* r = p.asRef()) {
            const Term* t = instanceIri(r->id);
            if (!t) {
                warn("reference to dangling #" + std::to_string(r->id) + " skipped");
                return false;
            }
            out = *t;
            return true;
        }
        return map_value(p, expected, schema_, cfg_.ifcowl_ns, out, &warnings_);
    }

    // --- baseline (relationship-as-instance, ifcOWL shape) ---

    void baselinePass() {
        for (const auto& [id, inst] : model_.instances) {
            const Term& subj = iris_.at(id);
            out_.insert(subj, v::rdfType(), ifcowl(entity_names_.at(id)));
            const express::EntityDef* def = schema_.entity(inst.keyword);
            if (!def) {
                warn("#" + std::to_string(id) + " " + inst.keyword +
                     ": unknown entity, attributes skipped");
                continue;
            }
            auto attrs = schema_.flattenedAttributesWithOwner(inst.keyword);
            if (attrs.size() != inst.params.size()) {
                warn("#" + std::to_string(id) + " " + inst.keyword + ": expected " +
                     std::to_string(attrs.size()) + " parameters, got " +
                     std::to_string(inst.params.size()) + "; attributes skipped");
                continue;
            }
            for (std::size_t i = 0; i < attrs.size(); ++i)
                emitAttribute(subj, attrs[i].first, attrs[i].second, inst.params[i]);
        }
    }

    void emitAttribute(const Term& subj, const express::AttributeDef& attr,
                       const std::string& owner, const StepParam& param) {
        if (param.isUnset() || std::holds_alternative<step::Derived>(param.value)) return;
        if (attr.aggregation == express::Aggregation::None) {
            Term obj;
            if (paramTerm(param, attr.type_name, obj))
                out_.insert(subj, attrPredicate(attr.name, owner), obj);
            return;
        }
        const auto* list = param.asList();
        if (!list) {
            warn("aggregate attribute " + attr.name + " of " + owner + " is not a list; skipped");
            return;
        }
        if (attr.aggregation == express::Aggregation::Set) {
            Term pred = attrPredicate(attr.name, owner);
            for (const auto& item : list->items) {
                Term obj;
                if (paramTerm(item, attr.type_name, obj)) out_.insert(subj, pred, obj);
            }
        } else {  // ordered list: index-suffixed, 1-based
            for (std::size_t i = 0; i < list->items.size(); ++i) {
                Term obj;
                if (paramTerm(list->items[i], attr.type_name, obj))
                    out_.insert(subj, indexedPredicate(attr.name, i + 1, owner), obj);
            }
        }
    }

    // --- enrichment (direct properties, IfcWoD shape) ---

    void enrichmentPass() {
        auto derived = derivedTuples();
        for (const auto& [id, inst] : model_.instances) {
            for (const auto& tuple : derived)
                if (schema_.isKindOf(inst.keyword, tuple.relationship_entity))
                    emitRelationship(inst, tuple);
            if (schema_.isKindOf(inst.keyword, "IfcPropertySet")) emitPsetProperties(inst);
            if (schema_.isKindOf(inst.keyword, "IfcComplexProperty")) emitComplexMembers(inst);
            if (cfg_.flatten_fixed_lists && schema_.isKindOf(inst.keyword, "IfcCartesianPoint"))
                emitCoordinates(inst);
        }
        checkComplexCycles();
    }

    std::vector<express::InverseTuple> derivedTuples() {
        std::vector<express::InverseTuple> out;
        for (const auto& name : schema_.entityNames()) {
            for (const auto& inv : schema_.entity(name)->inverses) {
                auto t = express::resolve_inverse(schema_, name, inv, nullptr);
                if (t && schema_.isKindOf(t->relationship_entity, "IfcRelationship"))
                    out.push_back(std::move(*t));
            }
        }
        return out;
    }

    std::vector<Term> roleValues(const StepInstance& inst, const std::string& attrName, bool& present) {
        present = false;
        auto attrs = schema_.flattenedAttributesWithOwner(inst.keyword);
        if (attrs.size() != inst.params.size()) return {};
        for (std::size_t i = 0; i < attrs.size(); ++i) {
            if (!ciEquals(attrs[i].first.name, attrName)) continue;
            const StepParam& p = inst.params[i];
            if (p.isUnset()) return {};
            present = true;
            std::vector<Term> vals;
            auto add = [&](const StepParam& item) {
                if (const auto* r = item.asRef()) {
                    if (const Term* t = instanceIri(r->id)) vals.push_back(*t);
                }
            };
            if (const auto* list = p.asList())
                for (const auto& item : list->items) add(item);
            else
                add(p);
            return vals;
        }
        return {};
    }

    void emitRelationship(const StepInstance& inst, const express::InverseTuple& tuple) {
        bool forPresent = false, cpPresent = false;
        auto xs = roleValues(inst, tuple.for_attribute, forPresent);
        auto ys = roleValues(inst, tuple.counterpart_attribute, cpPresent);
        if (!forPresent || !cpPresent) {
            warn("#" + std::to_string(inst.id) + " " + inst.keyword +
                 ": unset relationship role, no " + tuple.property + " enrichment");
            return;
        }
        Term pred = v::ifcwod(tuple.property + "_" + tuple.declaring_entity);
        for (const auto& x : xs)
            for (const auto& y : ys) out_.insert(x, pred, y);
    }

    const StepParam* namedParam(const StepInstance& inst, const std::string& attrName) {
        auto attrs = schema_.flattenedAttributesWithOwner(inst.keyword);
        if (attrs.size() != inst.params.size()) return nullptr;
        for (std::size_t i = 0; i < attrs.size(); ++i)
            if (ciEquals(attrs[i].first.name, attrName)) return &inst.params[i];
        return nullptr;
    }

    void emitPsetProperties(const StepInstance& pset) {
        const StepParam* nameParam = namedParam(pset, "Name");
        const StepParam* members = namedParam(pset, "HasProperties");
        if (!nameParam || !nameParam->asString() || !members || !members->asList()) {
            warn("#" + std::to_string(pset.id) + ": property set without name or members");
            return;
        }
        const std::string psetName = nameParam->asString()->decoded;
        const Term& subj = iris_.at(pset.id);
        for (const auto& memberRef : members->asList()->items) {
            const auto* r = memberRef.asRef();
            if (!r) continue;
            auto it = model_.instances.find(r->id);
            if (it == model_.instances.end()) continue;
            const StepInstance& prop = it->second;
            if (schema_.isKindOf(prop.keyword, "IfcComplexProperty")) {
                if (r->id == pset.id) {
                    violations_.push_back("#" + std::to_string(pset.id) +
                                          " hasComplexProperty references itself; triple suppressed");
                    continue;
                }
                out_.insert(subj, v::ifcwod("hasComplexProperty"), iris_.at(r->id));
                continue;
            }
            if (!schema_.isKindOf(prop.keyword, "IfcPropertySingleValue")) {
                warn("#" + std::to_string(prop.id) + " " + prop.keyword +
                     ": only single-value properties are enriched; skipped");
                continue;
            }
            emitSingleValue(subj, psetName, prop);
        }
    }

    // Members of a complex property hang off the complex node itself through
    // the core hasComplexProperty / hasSingleValue properties.
    void emitComplexMembers(const StepInstance& cp) {
        const StepParam* members = namedParam(cp, "HasProperties");
        if (!members || !members->asList()) return;
        const Term& subj = iris_.at(cp.id);
        for (const auto& memberRef : members->asList()->items) {
            const auto* r = memberRef.asRef();
            if (!r) continue;
            auto it = model_.instances.find(r->id);
            if (it == model_.instances.end()) continue;
            const StepInstance& prop = it->second;
            if (schema_.isKindOf(prop.keyword, "IfcComplexProperty")) {
                if (r->id == cp.id) {
                    violations_.push_back("#" + std::to_string(cp.id) +
                                          " hasComplexProperty references itself; triple suppressed");
                    continue;
                }
                out_.insert(subj, v::ifcwod("hasComplexProperty"), iris_.at(r->id));
                continue;
            }
            if (!schema_.isKindOf(prop.keyword, "IfcPropertySingleValue")) continue;
            const StepParam* valueParam = namedParam(prop, "NominalValue");
            if (!valueParam || valueParam->isUnset()) continue;
            Term val;
            if (map_value(*valueParam, "", schema_, cfg_.ifcowl_ns, val, &warnings_))
                out_.insert(subj, v::ifcwod("hasSingleValue"), val);
        }
    }

    Term psetPredicate(const std::string& psetName, const std::string& propName) {
        std::string local = lowerFirst(propName);
        std::string forgedNs = v::psetNamespace(psetName);
        Term forged = Term::iri(forgedNs + v::encodeLocal(local));
        Term typeP = v::rdfType();
        Term objProp = v::owlObjectProperty();
        if (tbox_.contains({forged, typeP, objProp})) {
            used_pset_prefixes_.insert(psetName);
            return forged;
        }
        // vendor pset: mint under the dynamic namespace
        std::string dynNs = cfg_.base + "psd/" + v::encodeLocal(psetName) + "#";
        Term minted = Term::iri(dynNs + v::encodeLocal(local));
        out_.insert(minted, v::rdfsSubPropertyOf(), v::ifcwod("hasSingleValue"));
        used_dyn_ns_ = true;
        return minted;
    }

    void emitSingleValue(const Term& psetIri, const std::string& psetName, const StepInstance& prop) {
        const StepParam* nameParam = namedParam(prop, "Name");
        const StepParam* valueParam = namedParam(prop, "NominalValue");
        const StepParam* unitParam = namedParam(prop, "Unit");
        if (!nameParam || !nameParam->asString() || !valueParam || valueParam->isUnset()) {
            warn("#" + std::to_string(prop.id) + ": single-value property without name or value");
            return;
        }
        const std::string propName = nameParam->asString()->decoded;
        Term pred = psetPredicate(psetName, propName);

        Term literal;
        if (!map_value(*valueParam, "", schema_, cfg_.ifcowl_ns, literal, &warnings_)) return;

        bool hasUnit = unitParam && !unitParam->isUnset();
        if (!hasUnit && cfg_.value_node_policy == ValueNodePolicy::LiteralUnlessUnit) {
            out_.insert(psetIri, pred, literal);
            return;
        }
        // value node carrying the typed value and its unit
        Term node = Term::blank("val" + std::to_string(prop.id));
        if (const auto* typed = valueParam->asTyped()) {
            std::string typeName = schema_.originalName(typed->keyword);
            out_.insert(node, v::rdfType(), ifcowl(typeName.empty() ? typed->keyword : typeName));
        }
        out_.insert(node, v::ifcwod("value"), literal);
        if (hasUnit) {
            Term unitTerm;
            if (paramTerm(*unitParam, "IfcUnit", unitTerm))
                out_.insert(node, v::ifcwod("hasUnit"), unitTerm);
        }
        out_.insert(psetIri, pred, node);
    }

    void emitCoordinates(const StepInstance& inst) {
        const StepParam* coords = namedParam(inst, "Coordinates");
        if (!coords || !coords->asList()) return;
        const auto& items = coords->asList()->items;
        if (items.size() > 3) return;  // fixed-arity rule only
        static const char* names[] = {"coordinateX", "coordinateY", "coordinateZ"};
        const Term& subj = iris_.at(inst.id);
        for (std::size_t i = 0; i < items.size(); ++i) {
            Term val;
            if (map_value(items[i], "IfcLengthMeasure", schema_, cfg_.ifcowl_ns, val, &warnings_))
                out_.insert(subj, v::ifcwod(names[i]), val);
        }
    }

    void checkComplexCycles() {
        // DFS over the emitted hasComplexProperty edges
        Term pred = v::ifcwod("hasComplexProperty");
        std::map<Term, std::vector<Term>> edges;
        for (const auto& t : out_.triples())
            if (t.predicate == pred) edges[t.subject].push_back(t.object);
        for (const auto& [start, _] : edges) {
            std::set<Term> seen;
            std::vector<Term> stack{start};
            bool first = true;
            while (!stack.empty()) {
                Term cur = stack.back();
                stack.pop_back();
                if (!first && cur == start) {
                    violations_.push_back("complex property cycle through " + start.value);
                    break;
                }
                first = false;
                if (!seen.insert(cur).second) continue;
                auto it = edges.find(cur);
                if (it != edges.end())
                    for (const auto& next : it->second) stack.push_back(next);
            }
        }
    }

    void registerPrefixes() {
        out_.registerPrefix("rdf", v::kRdf);
        out_.registerPrefix("rdfs", v::kRdfs);
        out_.registerPrefix("xsd", v::kXsd);
        out_.registerPrefix("owl", v::kOwl);
        out_.registerPrefix("ifcowl", cfg_.ifcowl_ns);
        out_.registerPrefix("ifcwod", v::kIfcwod);
        out_.registerPrefix("", cfg_.base);
        for (const auto& name : used_pset_prefixes_) {
            try {
                out_.registerPrefix(lowerFirst(name), v::psetNamespace(name));
            } catch (const rdf::ModelError&) {
                // pset names with characters outside the prefix grammar stay unprefixed
            }
        }
    }
};

}  // namespace

bool map_value(const StepParam& param, const std::string& expected_type,
               const ExpressSchema& schema, const std::string& ifcowl_ns, Term& out,
               std::vector<std::string>* diagnostics) {
    auto diag = [&](const std::string& msg) {
        if (diagnostics) diagnostics->push_back(msg);
    };
    if (param.isUnset() || std::holds_alternative<step::Derived>(param.value)) return false;

    if (const auto* typed = param.asTyped()) {
        std::string inner_expected = schema.originalName(typed->keyword);
        if (inner_expected.empty()) inner_expected = typed->keyword;
        if (!expected_type.empty() && !ciEquals(inner_expected, expected_type) &&
            !schema.isSelect(expected_type))
            diag("typed value " + typed->keyword + " where " + expected_type + " was declared");
        return map_value(*typed->inner, inner_expected, schema, ifcowl_ns, out, diagnostics);
    }
    if (const auto* i = std::get_if<step::Integer>(&param.value)) {
        if (ciEquals(expected_type, "IfcBoolean")) diag("integer where IfcBoolean was declared");
        out = Term::literal(std::to_string(i->value), v::kXsd + "integer");
        return true;
    }
    if (const auto* r = std::get_if<step::Real>(&param.value)) {
        std::string lex = normalizeRealLexical(r->lexical);
        out = Term::literal(lex, v::kXsd + (isDoubleLexical(lex) ? "double" : "decimal"));
        return true;
    }
    if (const auto* s = param.asString()) {
        out = Term::literal(s->decoded, v::kXsd + "string");
        return true;
    }
    if (const auto* e = std::get_if<step::Enum>(&param.value)) {
        if (e->name == "T" || e->name == "F") {
            out = Term::literal(e->name == "T" ? "true" : "false", v::kXsd + "boolean");
            return true;
        }
        if (const auto* items = schema.enumerationItems(expected_type)) {
            for (const auto& item : *items) {
                if (ciEquals(item, e->name)) {
                    std::string typeName = schema.originalName(expected_type);
                    out = Term::iri(ifcowl_ns + typeName + "_" + item);
                    return true;
                }
            }
        }
        diag("enumeration value ." + e->name + ". not resolvable against " +
             (expected_type.empty() ? std::string("<none>") : expected_type) + ", kept as string");
        out = Term::literal(e->name, v::kXsd + "string");
        return true;
    }
    diag("unexpected aggregate or reference where a leaf value was declared");
    return false;
}

ConversionResult convert(const StepModel& model, const ExpressSchema& schema, const Graph& tbox,
                         const ConversionConfig& cfg) {
    return Converter(model, schema, tbox, cfg).run();
}

}  // namespace ifcwod::abox
