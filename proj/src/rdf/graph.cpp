#include "rdf/graph.hpp"

#include <algorithm>
#include <cctype>

namespace ifcwod::rdf {

bool Graph::insert(Triple t) {
    if (t.subject.isLiteral()) throw ModelError("triple subject must not be a literal");
    if (!t.predicate.isIri()) throw ModelError("triple predicate must be an IRI");
    if (t.object.isLiteral() && !t.object.datatype.empty() && !t.object.lang.empty())
        throw ModelError("literal carries both a datatype and a language tag");
    return triples_.insert(std::move(t)).second;
}

static bool validPrefix(const std::string& p) {
    if (p.empty()) return true;  // default namespace
    if (!std::isalpha(static_cast<unsigned char>(p[0]))) return false;
    return std::all_of(p.begin() + 1, p.end(), [](unsigned char c) {
        return std::isalnum(c) || c == '_';
    });
}

void Graph::registerPrefix(const std::string& prefix, const std::string& ns) {
    if (!validPrefix(prefix)) throw ModelError("malformed prefix: '" + prefix + "'");
    if (!isAbsoluteIri(ns)) throw ModelError("namespace IRI is not absolute: <" + ns + ">");
    prefixes_[prefix] = ns;
}

void Graph::merge(const Graph& other) {
    for (const auto& [p, ns] : other.prefixes_) prefixes_[p] = ns;
    triples_.insert(other.triples_.begin(), other.triples_.end());
}

std::vector<Triple> Graph::match(const Term* s, const Term* p, const Term* o) const {
    std::vector<Triple> out;
    for (const auto& t : triples_) {
        if (s && t.subject != *s) continue;
        if (p && t.predicate != *p) continue;
        if (o && t.object != *o) continue;
        out.push_back(t);
    }
    return out;
}

namespace {

std::vector<std::string> blankLabels(const Graph& g) {
    std::set<std::string> labels;
    for (const auto& t : g.triples()) {
        if (t.subject.isBlank()) labels.insert(t.subject.value);
        if (t.object.isBlank()) labels.insert(t.object.value);
    }
    return {labels.begin(), labels.end()};
}

Term rename(const Term& t, const std::map<std::string, std::string>& m) {
    if (!t.isBlank()) return t;
    auto it = m.find(t.value);
    return Term::blank(it == m.end() ? t.value : it->second);
}

bool tryMapping(const Graph& a, const Graph& b, const std::vector<std::string>& la,
                const std::vector<std::string>& lb, std::size_t depth,
                std::map<std::string, std::string>& mapping, std::vector<bool>& used) {
    if (depth == la.size()) {
        for (const auto& t : a.triples()) {
            Triple r{rename(t.subject, mapping), t.predicate, rename(t.object, mapping)};
            if (!b.contains(r)) return false;
        }
        return true;
    }
    for (std::size_t i = 0; i < lb.size(); ++i) {
        if (used[i]) continue;
        used[i] = true;
        mapping[la[depth]] = lb[i];
        if (tryMapping(a, b, la, lb, depth + 1, mapping, used)) return true;
        mapping.erase(la[depth]);
        used[i] = false;
    }
    return false;
}

}  // namespace

bool isomorphic(const Graph& a, const Graph& b) {
    if (a.size() != b.size()) return false;
    auto la = blankLabels(a);
    auto lb = blankLabels(b);
    if (la.size() != lb.size()) return false;
    std::map<std::string, std::string> mapping;
    std::vector<bool> used(lb.size(), false);
    return tryMapping(a, b, la, lb, 0, mapping, used);
}

}  // namespace ifcwod::rdf
