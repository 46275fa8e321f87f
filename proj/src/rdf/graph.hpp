#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "rdf/term.hpp"

namespace ifcwod::rdf {

// In-memory triple set with a prefix table. Set semantics: duplicate inserts
// are no-ops. Immutable once handed to readers; construction is single-writer.
class Graph {
public:
    bool insert(Triple t);
    bool insert(Term s, Term p, Term o) { return insert(Triple{std::move(s), std::move(p), std::move(o)}); }

    // Re-registering a prefix replaces its namespace. Empty prefix is the
    // default namespace. Malformed prefix or relative namespace throws.
    void registerPrefix(const std::string& prefix, const std::string& ns);

    void merge(const Graph& other);

    bool contains(const Triple& t) const { return triples_.count(t) != 0; }
    std::size_t size() const { return triples_.size(); }
    const std::set<Triple>& triples() const { return triples_; }
    const std::map<std::string, std::string>& prefixes() const { return prefixes_; }

    // All triples with the given subject / predicate (nullptr = wildcard).
    std::vector<Triple> match(const Term* s, const Term* p, const Term* o) const;

private:
    std::set<Triple> triples_;
    std::map<std::string, std::string> prefixes_;
};

// Graph equality up to blank-node renaming.
bool isomorphic(const Graph& a, const Graph& b);

}  // namespace ifcwod::rdf
