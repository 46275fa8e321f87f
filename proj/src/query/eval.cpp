#include "query/eval.hpp"

#include <algorithm>
#include <cstdlib>

namespace ifcwod::query {

namespace {

constexpr TermId kUnbound = ~TermId{0};

bool parseNumber(const rdf::Term& t, double& out) {
    if (!t.isLiteral()) return false;
    if (t.value == "true") { out = 1; return true; }
    if (t.value == "false") { out = 0; return true; }
    const char* s = t.value.c_str();
    char* end = nullptr;
    out = std::strtod(s, &end);
    return end != s && *end == '\0';
}

bool applyCompare(CompareOp op, const rdf::Term& bound, const rdf::Term& constant) {
    double a = 0, b = 0;
    if (parseNumber(constant, b) && parseNumber(bound, a)) {
        switch (op) {
            case CompareOp::Eq: return a == b;
            case CompareOp::Ne: return a != b;
            case CompareOp::Lt: return a < b;
            case CompareOp::Le: return a <= b;
            case CompareOp::Gt: return a > b;
            case CompareOp::Ge: return a >= b;
        }
    }
    bool equal = constant.isLiteral() && bound.isLiteral() ? bound.value == constant.value
                                                          : bound == constant;
    if (op == CompareOp::Eq) return equal;
    if (op == CompareOp::Ne) return !equal;
    return false;  // ordering undefined for non-numeric values
}

}  // namespace

std::vector<BindingRow> EvalReport::sortedSolutions() const {
    auto sorted = solutions;
    std::sort(sorted.begin(), sorted.end());
    return sorted;
}

EvalReport evaluate(const Store& store, const Query& query) {
    auto t0 = std::chrono::steady_clock::now();
    EvalReport report;
    report.variables = query.projection;

    // variable slots
    std::vector<std::string> varNames;
    auto slotOf = [&](const std::string& name) -> std::size_t {
        auto it = std::find(varNames.begin(), varNames.end(), name);
        if (it != varNames.end()) return static_cast<std::size_t>(it - varNames.begin());
        varNames.push_back(name);
        return varNames.size() - 1;
    };

    struct EncodedPattern {
        std::array<std::optional<TermId>, 3> constants;  // bound positions
        std::array<std::optional<std::size_t>, 3> vars;  // variable slots
        bool impossible = false;
        std::size_t estimate = 0;
    };
    std::vector<EncodedPattern> encoded(query.patterns.size());
    for (std::size_t i = 0; i < query.patterns.size(); ++i) {
        const auto& p = query.patterns[i];
        const PatternSlot* slots[3] = {&p.subject, &p.predicate, &p.object};
        for (int k = 0; k < 3; ++k) {
            if (const auto* var = std::get_if<Variable>(slots[k])) {
                encoded[i].vars[k] = slotOf(var->name);
            } else {
                auto id = store.lookup(std::get<rdf::Term>(*slots[k]));
                if (!id) encoded[i].impossible = true;  // constant absent from the store
                else encoded[i].constants[k] = *id;
            }
        }
        encoded[i].estimate =
            encoded[i].impossible
                ? 0
                : store.count(encoded[i].constants[0], encoded[i].constants[1], encoded[i].constants[2]);
    }

    // Greedy order: cheapest pattern first, then cheapest among those sharing
    // a variable with the patterns already joined (avoids cross products).
    std::vector<std::size_t> order;
    std::vector<bool> taken(encoded.size(), false);
    std::vector<bool> varBound(varNames.size(), false);
    while (order.size() < encoded.size()) {
        std::size_t best = encoded.size();
        bool bestConnected = false;
        for (std::size_t i = 0; i < encoded.size(); ++i) {
            if (taken[i]) continue;
            bool connected = order.empty();
            for (int k = 0; k < 3 && !connected; ++k)
                if (encoded[i].vars[k] && varBound[*encoded[i].vars[k]]) connected = true;
            if (best == encoded.size() || (connected && !bestConnected) ||
                (connected == bestConnected && encoded[i].estimate < encoded[best].estimate)) {
                best = i;
                bestConnected = connected;
            }
        }
        taken[best] = true;
        for (int k = 0; k < 3; ++k)
            if (encoded[best].vars[k]) varBound[*encoded[best].vars[k]] = true;
        order.push_back(best);
    }
    report.join_order = order;

    std::vector<std::vector<TermId>> rows{std::vector<TermId>(varNames.size(), kUnbound)};
    std::vector<bool> filterApplied(query.filters.size(), false);
    bool warnedUnbound = false;

    auto applyFilters = [&](std::vector<std::vector<TermId>>& current, bool final) {
        for (std::size_t fi = 0; fi < query.filters.size(); ++fi) {
            if (filterApplied[fi]) continue;
            const Filter& f = query.filters[fi];
            auto it = std::find(varNames.begin(), varNames.end(), f.variable);
            if (it == varNames.end()) {
                // variable appears in no pattern: filter is false for every row
                if (final) {
                    if (!warnedUnbound) {
                        report.warnings.push_back("filter variable ?" + f.variable +
                                                  " is unbound; filter evaluates false");
                        warnedUnbound = true;
                    }
                    current.clear();
                    filterApplied[fi] = true;
                }
                continue;
            }
            std::size_t slot = static_cast<std::size_t>(it - varNames.begin());
            if (current.empty()) {
                filterApplied[fi] = true;
                continue;
            }
            if (current.front()[slot] == kUnbound) {
                if (final) {
                    current.clear();
                    filterApplied[fi] = true;
                }
                continue;
            }
            std::vector<std::vector<TermId>> kept;
            for (auto& row : current)
                if (applyCompare(f.op, store.term(row[slot]), f.constant)) kept.push_back(std::move(row));
            current = std::move(kept);
            filterApplied[fi] = true;
        }
    };

    for (std::size_t stage = 0; stage < order.size() && !rows.empty(); ++stage) {
        const EncodedPattern& p = encoded[order[stage]];
        std::vector<std::vector<TermId>> next;
        if (!p.impossible) {
            for (const auto& row : rows) {
                std::array<std::optional<TermId>, 3> probe = p.constants;
                for (int k = 0; k < 3; ++k)
                    if (p.vars[k] && row[*p.vars[k]] != kUnbound) probe[k] = row[*p.vars[k]];
                for (const auto& match : store.scan(probe[0], probe[1], probe[2])) {
                    std::vector<TermId> extended = row;
                    bool consistent = true;
                    for (int k = 0; k < 3 && consistent; ++k) {
                        if (!p.vars[k]) continue;
                        TermId& cell = extended[*p.vars[k]];
                        if (cell == kUnbound) cell = match[static_cast<std::size_t>(k)];
                        else if (cell != match[static_cast<std::size_t>(k)]) consistent = false;
                    }
                    if (consistent) next.push_back(std::move(extended));
                }
            }
        }
        report.intermediate_rows += next.size();
        rows = std::move(next);
        applyFilters(rows, false);
    }
    applyFilters(rows, true);

    for (const auto& row : rows) {
        BindingRow solution;
        solution.reserve(query.projection.size());
        for (const auto& v : query.projection) {
            auto it = std::find(varNames.begin(), varNames.end(), v);
            TermId id = row[static_cast<std::size_t>(it - varNames.begin())];
            solution.push_back(store.term(id));
        }
        report.solutions.push_back(std::move(solution));
    }
    if (query.distinct) {
        std::sort(report.solutions.begin(), report.solutions.end());
        report.solutions.erase(std::unique(report.solutions.begin(), report.solutions.end()),
                               report.solutions.end());
    }
    report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return report;
}

}  // namespace ifcwod::query
