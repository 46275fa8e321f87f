#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rdf/graph.hpp"

namespace ifcwod::query {

using TermId = uint32_t;
using EncodedTriple = std::array<TermId, 3>;  // always (s, p, o)

class StoreError : public std::runtime_error {
public:
    explicit StoreError(const std::string& msg) : std::runtime_error(msg) {}
};

// Inference rules for forward-chaining materialization. Sub-property closure
// follows the rdfs:subPropertyOf edges already present in the store.
struct Rules {
    std::vector<std::string> transitive;             // property IRIs
    std::vector<std::string> symmetric;              // property IRIs
    std::vector<std::pair<std::string, std::string>> inverse;  // (p, q) IRI pairs
    bool subproperty = false;
    std::size_t triple_budget = 10'000'000;
};

// Dictionary-encoded triple store with SPO, POS, and OSP sorted indices.
// Concurrent readers / exclusive writer.
class Store {
public:
    TermId intern(const rdf::Term& t);
    std::optional<TermId> lookup(const rdf::Term& t) const;
    const rdf::Term& term(TermId id) const { return terms_.at(id); }

    void load(const rdf::Graph& g);
    bool insert(const rdf::Triple& t);
    bool insertEncoded(EncodedTriple t);

    std::size_t size() const { return spo_.size(); }

    // Matching triples in (s,p,o) layout; nullopt positions are wildcards.
    std::vector<EncodedTriple> scan(std::optional<TermId> s, std::optional<TermId> p,
                                    std::optional<TermId> o) const;
    std::size_t count(std::optional<TermId> s, std::optional<TermId> p,
                      std::optional<TermId> o) const;

    // Semi-naive closure; idempotent. Throws StoreError with partial closure
    // applied when the triple budget is exceeded.
    void materialize(const Rules& rules);

    rdf::Graph toGraph() const;

    const std::vector<EncodedTriple>& spoIndex() const { return spo_; }
    const std::vector<EncodedTriple>& posIndex() const { return pos_; }
    const std::vector<EncodedTriple>& ospIndex() const { return osp_; }

private:
    std::vector<rdf::Term> terms_;
    std::map<rdf::Term, TermId> ids_;
    std::vector<EncodedTriple> spo_;  // sorted (s,p,o)
    std::vector<EncodedTriple> pos_;  // sorted (p,o,s)
    std::vector<EncodedTriple> osp_;  // sorted (o,s,p)
    std::vector<EncodedTriple> pending_;

    void flushPending();
};

}  // namespace ifcwod::query
