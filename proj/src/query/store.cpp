#include "query/store.hpp"

#include <algorithm>
#include <set>

namespace ifcwod::query {

namespace {

struct SpoLess {
    bool operator()(const EncodedTriple& a, const EncodedTriple& b) const { return a < b; }
};
struct PosLess {
    bool operator()(const EncodedTriple& a, const EncodedTriple& b) const {
        return std::array{a[1], a[2], a[0]} < std::array{b[1], b[2], b[0]};
    }
};
struct OspLess {
    bool operator()(const EncodedTriple& a, const EncodedTriple& b) const {
        return std::array{a[2], a[0], a[1]} < std::array{b[2], b[0], b[1]};
    }
};

template <typename Less>
void sortUnique(std::vector<EncodedTriple>& v, Less less) {
    std::sort(v.begin(), v.end(), less);
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

TermId Store::intern(const rdf::Term& t) {
    auto it = ids_.find(t);
    if (it != ids_.end()) return it->second;
    TermId id = static_cast<TermId>(terms_.size());
    terms_.push_back(t);
    ids_.emplace(t, id);
    return id;
}

std::optional<TermId> Store::lookup(const rdf::Term& t) const {
    auto it = ids_.find(t);
    if (it == ids_.end()) return std::nullopt;
    return it->second;
}

void Store::load(const rdf::Graph& g) {
    for (const auto& t : g.triples())
        pending_.push_back({intern(t.subject), intern(t.predicate), intern(t.object)});
    flushPending();
}

bool Store::insert(const rdf::Triple& t) {
    return insertEncoded({intern(t.subject), intern(t.predicate), intern(t.object)});
}

bool Store::insertEncoded(EncodedTriple t) {
    if (std::binary_search(spo_.begin(), spo_.end(), t, SpoLess{})) return false;
    pending_.push_back(t);
    flushPending();
    return true;
}

void Store::flushPending() {
    if (pending_.empty()) return;
    spo_.insert(spo_.end(), pending_.begin(), pending_.end());
    pos_.insert(pos_.end(), pending_.begin(), pending_.end());
    osp_.insert(osp_.end(), pending_.begin(), pending_.end());
    pending_.clear();
    sortUnique(spo_, SpoLess{});
    sortUnique(pos_, PosLess{});
    sortUnique(osp_, OspLess{});
}

namespace {

// Binary-search range scan over one permutation-sorted index.
template <typename Less>
std::pair<std::size_t, std::size_t> boundRange(const std::vector<EncodedTriple>& index,
                                               EncodedTriple lo, EncodedTriple hi, Less less) {
    auto begin = std::lower_bound(index.begin(), index.end(), lo, less);
    auto end = std::upper_bound(index.begin(), index.end(), hi, less);
    return {static_cast<std::size_t>(begin - index.begin()),
            static_cast<std::size_t>(end - index.begin())};
}

constexpr TermId kMax = ~TermId{0};

}  // namespace

std::vector<EncodedTriple> Store::scan(std::optional<TermId> s, std::optional<TermId> p,
                                       std::optional<TermId> o) const {
    std::vector<EncodedTriple> out;
    auto emit = [&](const EncodedTriple& t) {
        if (s && t[0] != *s) return;
        if (p && t[1] != *p) return;
        if (o && t[2] != *o) return;
        out.push_back(t);
    };
    std::size_t lo = 0, hi = 0;
    const std::vector<EncodedTriple>* index = &spo_;
    if (s) {
        std::tie(lo, hi) = boundRange(spo_, {*s, p ? *p : 0, (p && o) ? *o : 0},
                                      {*s, p ? *p : kMax, (p && o) ? *o : kMax}, SpoLess{});
    } else if (p) {
        index = &pos_;
        std::tie(lo, hi) = boundRange(pos_, {0, *p, o ? *o : 0}, {kMax, *p, o ? *o : kMax}, PosLess{});
    } else if (o) {
        index = &osp_;
        std::tie(lo, hi) = boundRange(osp_, {0, 0, *o}, {kMax, kMax, *o}, OspLess{});
    } else {
        hi = spo_.size();
    }
    for (std::size_t i = lo; i < hi; ++i) emit((*index)[i]);
    return out;
}

std::size_t Store::count(std::optional<TermId> s, std::optional<TermId> p,
                         std::optional<TermId> o) const {
    // Fully-indexed shapes are pure range widths; mixed shapes fall back to scan.
    if (s && p && o)
        return std::binary_search(spo_.begin(), spo_.end(), EncodedTriple{*s, *p, *o}, SpoLess{}) ? 1 : 0;
    if (s && p && !o) {
        auto [lo, hi] = boundRange(spo_, {*s, *p, 0}, {*s, *p, kMax}, SpoLess{});
        return hi - lo;
    }
    if (s && !p && !o) {
        auto [lo, hi] = boundRange(spo_, {*s, 0, 0}, {*s, kMax, kMax}, SpoLess{});
        return hi - lo;
    }
    if (!s && p && o) {
        auto [lo, hi] = boundRange(pos_, {0, *p, *o}, {kMax, *p, *o}, PosLess{});
        return hi - lo;
    }
    if (!s && p && !o) {
        auto [lo, hi] = boundRange(pos_, {0, *p, 0}, {kMax, *p, kMax}, PosLess{});
        return hi - lo;
    }
    if (!s && !p && o) {
        auto [lo, hi] = boundRange(osp_, {0, 0, *o}, {kMax, kMax, *o}, OspLess{});
        return hi - lo;
    }
    if (s && !p && o) return scan(s, p, o).size();
    return spo_.size();
}

void Store::materialize(const Rules& rules) {
    flushPending();
    auto iriId = [&](const std::string& iri) { return intern(rdf::Term::iri(iri)); };

    std::vector<TermId> transitive, symmetric;
    std::vector<std::pair<TermId, TermId>> inverse;
    for (const auto& p : rules.transitive) transitive.push_back(iriId(p));
    for (const auto& p : rules.symmetric) symmetric.push_back(iriId(p));
    for (const auto& [p, q] : rules.inverse) inverse.emplace_back(iriId(p), iriId(q));
    TermId subPropId = iriId("http://www.w3.org/2000/01/rdf-schema#subPropertyOf");

    std::vector<EncodedTriple> delta(spo_);
    while (!delta.empty()) {
        std::set<EncodedTriple> derived;
        auto propose = [&](EncodedTriple t) {
            if (terms_[t[0]].isLiteral()) return;  // symmetric/inverse over literal objects
            if (!std::binary_search(spo_.begin(), spo_.end(), t, SpoLess{})) derived.insert(t);
        };
        for (const auto& t : delta) {
            for (TermId p : transitive) {
                if (t[1] != p) continue;
                for (const auto& next : scan(t[2], p, std::nullopt)) propose({t[0], p, next[2]});
                for (const auto& prev : scan(std::nullopt, p, t[0])) propose({prev[0], p, t[2]});
            }
            for (TermId p : symmetric)
                if (t[1] == p) propose({t[2], p, t[0]});
            for (const auto& [p, q] : inverse) {
                if (t[1] == p) propose({t[2], q, t[0]});
                if (t[1] == q) propose({t[2], p, t[0]});
            }
            if (rules.subproperty) {
                for (const auto& sup : scan(t[1], subPropId, std::nullopt))
                    propose({t[0], sup[2], t[2]});
                if (t[1] == subPropId) {
                    // new sub-property edge activates existing assertions
                    for (const auto& use : scan(std::nullopt, t[0], std::nullopt))
                        propose({use[0], t[2], use[2]});
                }
            }
        }
        delta.assign(derived.begin(), derived.end());
        if (spo_.size() + delta.size() > rules.triple_budget) {
            pending_.insert(pending_.end(), delta.begin(), delta.end());
            flushPending();
            throw StoreError("materialization aborted: triple budget of " +
                             std::to_string(rules.triple_budget) + " exceeded (partial closure kept)");
        }
        pending_.insert(pending_.end(), delta.begin(), delta.end());
        flushPending();
    }
}

rdf::Graph Store::toGraph() const {
    rdf::Graph g;
    for (const auto& t : spo_) g.insert(terms_[t[0]], terms_[t[1]], terms_[t[2]]);
    return g;
}

}  // namespace ifcwod::query
