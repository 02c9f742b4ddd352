#pragma once

#include "isolate/graph.hpp"
#include "isolate/patterns.hpp"
#include "isolate/rational.hpp"
#include "isolate/rng.hpp"

namespace isolate {

// Constructive isolating-set algorithms.  Every routine returns a Certificate
// that check_certificate accepts on its input graph; promised_bound is the
// size guarantee the construction meets deterministically (absent when the
// guarantee holds only in expectation).

// Connected graph, n >= 3, not the 5-cycle: isolating set of size at most
// floor(n/3).  Family star:0.
Certificate isolating_third(const Graph &g);

// Every component on at least 3 vertices: per-component isolating set.  Bound
// is 2n/5 when some component is a 5-cycle, otherwise the sum of the
// per-component floor(n_i/3).  Family star:0.
Certificate isolating_components(const Graph &g);

// Remove copies of h greedily, adding the image of h_dominating for each;
// h_dominating must dominate h.  Bound |h_dominating| * floor(n/n(h)).
// Family is the single pattern h.
Certificate greedy_pattern_removal(const Graph &g, const Graph &h, const VertexSet &h_dominating);

// Random vertex sample at rate ln(delta+1)/(delta+1) plus a half dominating
// set of the non-isolated rest; needs min degree >= 1.  Always valid; size is
// (ln(delta+1)+1/2)/(delta+1)*n only in expectation, so no promised bound.
Certificate randomized_isolating(const Graph &g, Rng &rng);

// Bipartite variant: sample within the smaller side, then adopt the vertices
// of the other side missed entirely.  Needs a bipartite graph with min degree
// >= 1.  Expected size (ln(delta)+1)/(2*delta)*n for delta >= 2.
Certificate randomized_bipartite_isolating(const Graph &g, Rng &rng);

// Tree, not K_{1,k+1}: set of size at most floor(n/(k+3)) whose removal
// leaves maximum degree at most k.  Family star:k.
Certificate tree_k_isolating(const Graph &t, int k);

// Tree with at least two inner vertices, all of degree exactly r >= k+3:
// dominating set of the inner subtree, size at most (n-2)/(2(r-1)).
// Family star:k.
Certificate equal_degree_tree_isolating(const Graph &t, int k, int r);

enum class GridKind { grid, cylinder, torus };

// s rows by t columns, vertex (i,j) at index i*t+j.  Rows are cyclic only for
// torus, columns are cyclic for torus and cylinder.  Cyclic dimensions need
// length >= 3, path dimensions >= 2.
Graph grid_graph(GridKind kind, int s, int t);

// Two interleaved sublattices of spacing 4 plus boundary patches.  The
// promised bound is the exact piece tally; family star:0.
Certificate grid_isolating(GridKind kind, int s, int t);

struct GridBounds {
    Rational lower;
    Rational upper;
};

// Closed-form bounds on the exact isolation number of grid_graph(kind, s, t):
//   torus     st/8            ... st/8 + 3(s+t+3)/8
//   cylinder  st/8 - t/16     ... st/8 + (3s+t+3)/8
//   grid      st/8 - (s+t)/16 ... st/8 + (s+t+1)/8
GridBounds grid_printed_bounds(GridKind kind, int s, int t);

enum class SeedMode { half, two_fifths, third };

// Extend a caller-chosen seed by isolating G' = G - N[seed].  With
// w = |N(seed) \ seed| the bounds are (n-w+|seed|)/2 for half (always
// applicable), (2n-2w+3|seed|)/5 for two_fifths (G' needs min degree >= 2)
// and (n-w+2|seed|)/3 for third (G' components on >= 3 vertices, none a
// 5-cycle).  Family star:0.
Certificate isolating_with_seed_set(const Graph &g, const VertexSet &seed, SeedMode mode);

// Smallest max-degree vertex plus per-component treatment of what it misses:
// size at most (n - maxdeg + 2)/3, remainder max degree <= 1.  Needs
// max degree >= 1.  Family star:1.
Certificate one_isolation_via_partition(const Graph &g);

} // namespace isolate
