#pragma once

#include <chrono>

#include "query/query.hpp"
#include "query/store.hpp"

namespace ifcwod::query {

// One solution row: terms in projection order.
using BindingRow = std::vector<rdf::Term>;

struct EvalReport {
    std::vector<std::string> variables;  // projection order
    std::vector<BindingRow> solutions;   // multiset
    std::size_t intermediate_rows = 0;   // rows produced across all join stages
    double wall_seconds = 0;
    std::vector<std::size_t> join_order;  // pattern indices as evaluated
    std::vector<std::string> warnings;

    // Canonical multiset form for comparisons.
    std::vector<BindingRow> sortedSolutions() const;
};

// Index-backed left-deep join; join order by ascending constant-only index
// counts. Evaluation is read-only.
EvalReport evaluate(const Store& store, const Query& query);

}  // namespace ifcwod::query
