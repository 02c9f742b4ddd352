#pragma once

#include <optional>

#include "isolate/graph.hpp"
#include "isolate/patterns.hpp"

namespace isolate {

struct ExactResult {
    int value;
    Certificate certificate;
};

struct SetResult {
    int value;
    VertexSet set;
};

// Minimum F-isolating set.  Witness is the lexicographically smallest one of
// minimum size (smallest bitset as integer).  Always solvable: a dominating
// set empties the remainder.
ExactResult exact_isolation(const Graph &g, const PatternFamily &family);

// Search limited to sizes 0..max_size; empty when no isolating set that small
// exists.  Lets callers with a certificate of size u prove optimality by
// searching only below u.
std::optional<ExactResult> exact_isolation_capped(const Graph &g, const PatternFamily &family, int max_size);

// Minimum dominating set, lexicographically smallest witness.
SetResult exact_domination(const Graph &g);

// Maximum subset whose induced subgraph is F-free, lexicographically smallest
// witness among maximum ones.
SetResult max_f_free_subset(const Graph &g, const PatternFamily &family);

// Maximum A with max degree of g[A] at most k; equals the star(k)-free
// maximum subset.
SetResult exact_k_independence(const Graph &g, int k);

// Exact domination on forests by leaf-up dynamic programming.
SetResult tree_domination(const Graph &g);

// Dominating set of size at most floor(n/2) on isolate-free graphs: per
// component, the smaller level-parity class of a spanning BFS tree.
VertexSet half_dominating_set(const Graph &g);

// Vertex set of one forbidden-pattern occurrence inside g[region], or empty
// optional when the region is F-free.  Deterministic.
std::optional<VertexSet> find_violation(const Graph &g, const VertexSet &region, const PatternFamily &family);

} // namespace isolate
