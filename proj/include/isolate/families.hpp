#pragma once

#include "isolate/graph.hpp"
#include "isolate/rng.hpp"

namespace isolate {

// Named graphs.  Vertex orders are fixed and documented per generator so
// regression tests can pin witnesses.

Graph path_graph(int n);          // 0-1-...-(n-1)
Graph cycle_graph(int n);         // n >= 3, edges (i, i+1 mod n)
Graph complete_graph(int n);
Graph empty_graph(int n);
Graph complete_bipartite(int p, int q); // sides 0..p-1 and p..p+q-1
Graph star_graph(int leaves);     // center 0
Graph petersen();                 // outer 0..4, inner 5+i ~ 5+((i+2) mod 5), spokes i ~ 5+i
Graph hypercube(int d);           // vertices are bit masks, edges differ in one bit
Graph random_tree(int n, Rng &rng);            // uniform via Pruefer sequence
Graph random_regular(int n, int degree, Rng &rng); // pairing model, rejects loops and doubles

// Every vertex i of h gets a private K_2 {a_i, b_i} with a_i = n(h)+2i,
// b_i = a_i+1; one_edge joins i to a_i, two_edges joins i to both.
enum class CoronaMode { one_edge, two_edges };
Graph corona_k2(const Graph &h, CoronaMode mode);

// r K_3 then s P_3 then t C_6, disjoint, r+s+t >= 1.
Graph f_rst(int r, int s, int t);

// K_r minus a Hamiltonian cycle, r >= 4; (r-3)-regular.
Graph kr_minus_hamiltonian(int r);

// n(gstar) copies of h, hook of copy i joined to vertex i of gstar.  Copy i
// occupies [i*n(h), (i+1)*n(h)); gstar follows.  delta1 needs a leaf of h
// besides the hook; delta_ge2 needs min degree of h above that of gstar.
enum class ComposeMode { delta1, delta_ge2 };
Graph compose_general(const Graph &h, int hook, const Graph &gstar, ComposeMode mode);

// Spine path 0..t-1; copy i of K_{1,k+1} (center first) follows, its first
// leaf joined to spine vertex i.  n = t(k+3).
Graph path_of_stars(int t, int k);

// Path x_1..x_t (indices 0..t-1); inner x_i gets a pendant v_i; v_i is
// filled to degree r with leaves, x_i likewise.  All inner degrees equal r.
Graph equal_degree_caterpillar(int t, int r);

// Fan: outer cycle 0..n-1 plus chords from 0.
Graph fan_triangulation(int n);
// Uniform-ish recursive polygon triangulation; outer cycle 0..n-1.
Graph random_polygon_triangulation(int n, Rng &rng);
// Base maximal outerplanar on 2p vertices with outer cycle 0..2p-1 (fan if
// omitted); outer vertex i gains a new neighbor w_i = 2p+i, and each pair
// w_{2j}, w_{2j+1} is tied into a triangle with outer vertex 2j.  n = 4p,
// isolation number exactly p.
Graph outerplanar_sharp(int p, const Graph *base = nullptr);

// Bipartite equality family for the average-degree lower bound: t hub
// vertices s_i, each seeing a private block of delta_cap A-vertices; blocks
// are filled to make the graph delta_cap-regular.  a(i,j) = i*delta+j,
// s_i = t*delta+i, fillers follow.  n = 2*t*delta_cap.
Graph lb_equality_bipartite(int t, int delta_cap);

// Hub 0 joined to one vertex of each of delta_cap cliques K_{k+1}.
Graph star_lower_sharp(int delta_cap, int k);

} // namespace isolate
