#pragma once

#include <random>
#include <string>

#include "rdf/graph.hpp"

namespace testutil {

inline std::string fixture(const std::string& name) {
    return std::string(IFCWOD_FIXTURE_DIR) + "/" + name;
}

// Deterministic random graph: small IRI pool, blanks, plain/typed/lang literals.
inline ifcwod::rdf::Graph randomGraph(std::mt19937& rng, std::size_t maxTriples = 40) {
    using ifcwod::rdf::Term;
    ifcwod::rdf::Graph g;
    auto iri = [&](int i) { return Term::iri("http://example.org/r" + std::to_string(i)); };
    auto node = [&](bool allowLiteral) -> Term {
        switch (rng() % (allowLiteral ? 4 : 2)) {
            case 0: return iri(static_cast<int>(rng() % 12));
            case 1: return Term::blank("b" + std::to_string(rng() % 6));
            case 2: {
                std::string v = "v" + std::to_string(rng() % 9);
                if (rng() % 3 == 0) return Term::literal(v, "http://www.w3.org/2001/XMLSchema#string");
                if (rng() % 3 == 1) return Term::langLiteral(v, rng() % 2 ? "en" : "ja-JP");
                return Term::literal(v);
            }
            default: return Term::literal("caf\xC3\xA9 " + std::to_string(rng() % 9));
        }
    };
    std::size_t n = 1 + rng() % maxTriples;
    for (std::size_t i = 0; i < n; ++i)
        g.insert(node(false), iri(static_cast<int>(rng() % 8)), node(true));
    return g;
}

}  // namespace testutil
