#include "isolate/constructive.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <utility>
#include <vector>

#include "isolate/errors.hpp"
#include "isolate/solvers.hpp"

namespace isolate {

namespace {

std::vector<int> identity_map(int n) {
    std::vector<int> m(n);
    std::iota(m.begin(), m.end(), 0);
    return m;
}

// outer maps current indices to original ones, inner maps shrunken indices to
// current ones; the result maps shrunken indices to original ones.
std::vector<int> compose_map(const std::vector<int> &outer, const std::vector<int> &inner) {
    std::vector<int> out(inner.size());
    for (std::size_t i = 0; i < inner.size(); ++i) out[i] = outer[inner[i]];
    return out;
}

// Index of old_vertex in the ascending induced-subgraph map.
int position_in(const std::vector<int> &sub, int old_vertex) {
    auto it = std::lower_bound(sub.begin(), sub.end(), old_vertex);
    return static_cast<int>(it - sub.begin());
}

// The five vertices of a 5-cycle in cyclic order, starting at x1 and turning
// toward the smaller-indexed neighbor.
std::array<int, 5> five_cycle_order(const Graph &c, int x1) {
    std::array<int, 5> x{};
    x[0] = x1;
    std::vector<int> nb = c.neighbors(x1).to_vector();
    x[1] = std::min(nb[0], nb[1]);
    int prev = x1, cur = x[1];
    for (int i = 2; i < 5; ++i) {
        std::vector<int> nn = c.neighbors(cur).to_vector();
        int nxt = (nn[0] == prev) ? nn[1] : nn[0];
        x[i] = nxt;
        prev = cur;
        cur = nxt;
    }
    return x;
}

} // namespace

Certificate isolating_third(const Graph &g) {
    if (g.n() < 3) throw precondition_error("isolating_third needs at least 3 vertices");
    if (!g.is_connected()) throw precondition_error("isolating_third needs a connected graph");
    if (g.is_cycle_of_length(5)) throw precondition_error("isolating_third rejects the 5-cycle");

    VertexSet s(g.n());
    Graph h = g;
    std::vector<int> old_of = identity_map(g.n());

    // Invariant: h connected, n(h) >= 3, h not a 5-cycle.  Each pass either
    // finishes or removes >= 3 vertices per chosen one, keeping the invariant.
    while (true) {
        int n = h.n();
        if (n <= 5) {
            // one vertex suffices on any connected non-5-cycle with 3..5
            // vertices; take the exact witness
            ExactResult r = exact_isolation(h, PatternFamily::star(0));
            for (int v : r.certificate.set) s.add(old_of[v]);
            break;
        }
        Graph::BfsTree bt = h.bfs_tree(0);
        int ell = 0;
        for (int v = 0; v < n; ++v) ell = std::max(ell, bt.level[v]);
        if (ell <= 1) { // vertex 0 dominates h
            s.add(old_of[0]);
            break;
        }
        std::vector<std::vector<int>> children(n);
        for (int v = 0; v < n; ++v)
            if (bt.parent[v] >= 0) children[bt.parent[v]].push_back(v);

        // First rule: smallest u with >= 2 tree children, all of them tree
        // leaves.  {u} + children is exactly the subtree under u, so the rest
        // stays connected; u is not the root (that would force ell <= 1).
        int ua = -1;
        for (int u = 0; u < n && ua < 0; ++u) {
            if (children[u].size() < 2) continue;
            bool all_leaves = true;
            for (int c : children[u])
                if (!children[c].empty()) { all_leaves = false; break; }
            if (all_leaves) ua = u;
        }
        if (ua >= 0) {
            VertexSet drop(n);
            drop.add(ua);
            for (int c : children[ua]) drop.add(c);
            if (drop.count() == n) { // unreachable with ell >= 2; kept for safety
                s.add(old_of[ua]);
                break;
            }
            std::vector<int> sub;
            Graph gs = h.induced(drop.complement(), &sub);
            if (gs.n() <= 2) {
                // the father of u is one of the <= 2 leftovers and u covers it
                s.add(old_of[ua]);
                break;
            }
            if (gs.is_cycle_of_length(5)) {
                // 8 vertices total: u plus the third cycle vertex from u's
                // father cover everything but two nonadjacent cycle vertices
                std::array<int, 5> x = five_cycle_order(gs, position_in(sub, bt.parent[ua]));
                s.add(old_of[ua]);
                s.add(old_of[sub[x[2]]]);
                break;
            }
            s.add(old_of[ua]);
            old_of = compose_map(old_of, sub);
            h = std::move(gs);
            continue;
        }

        // Deep rule: u = smallest vertex two levels above the bottom with a
        // grandchild; its children each keep at most one child, else the
        // first rule would have fired on them.
        int u = -1;
        for (int v = 0; v < n && u < 0; ++v) {
            if (bt.level[v] != ell - 2) continue;
            for (int c : children[v])
                if (!children[c].empty()) { u = v; break; }
        }
        const std::vector<int> &A = children[u];

        if (A.size() == 1) {
            // chain u - v - w hangs below u; v covers all three
            int v = A[0];
            int w = children[v][0];
            VertexSet drop(n);
            drop.add(u);
            drop.add(v);
            drop.add(w);
            std::vector<int> sub;
            Graph gs = h.induced(drop.complement(), &sub);
            if (gs.is_cycle_of_length(5)) {
                // 8 vertices; u is not the root (that would force n == 3).
                // Walk the cycle from u's father and pick the pair whose
                // leftovers are nonadjacent.
                std::array<int, 5> x = five_cycle_order(gs, position_in(sub, bt.parent[u]));
                int x2 = sub[x[1]], x3 = sub[x[2]], x4 = sub[x[3]], x5 = sub[x[4]];
                if (!h.has_edge(w, x5)) {
                    s.add(old_of[u]);
                    s.add(old_of[x3]);
                } else if (!h.has_edge(w, x2)) {
                    s.add(old_of[u]);
                    s.add(old_of[x4]);
                } else if (!h.has_edge(u, x4)) {
                    s.add(old_of[w]);
                    s.add(old_of[x2]);
                } else {
                    s.add(old_of[u]);
                    s.add(old_of[x2]);
                }
                break;
            }
            s.add(old_of[v]);
            old_of = compose_map(old_of, sub);
            h = std::move(gs);
            continue;
        }

        // |A| >= 2.  B = grandchildren of u; split B by whether its piece of
        // h[B] reaches outside {u} + A + B.
        VertexSet aset(n), bset(n);
        for (int a : A) {
            aset.add(a);
            for (int c : children[a]) bset.add(c);
        }
        VertexSet uset = aset | bset;
        uset.add(u);
        VertexSet outside = uset.complement();
        VertexSet b2(n);
        for (int v : bset)
            if (h.neighbors(v).intersects(outside)) b2.add(v);
        while (true) { // close b2 under adjacency inside B
            VertexSet grown = b2;
            for (int v : bset)
                if (!b2.contains(v) && h.neighbors(v).intersects(b2)) grown.add(v);
            if (grown == b2) break;
            b2 = grown;
        }
        VertexSet b1 = bset - b2;

        int y = -1, z = -1;
        for (int v : b1) {
            VertexSet inb1 = h.neighbors(v) & b1;
            if (!inb1.empty()) {
                y = v;
                z = inb1.first();
                break;
            }
        }

        if (y < 0) {
            // b1 is independent and sees only A, so u alone covers every
            // leftover neighborhood; drop {u} + A + b1.  Each b2 piece
            // reaches the outside, which spans the rest of the tree, so the
            // residue is connected (or empty).
            VertexSet drop = uset - b2;
            std::vector<int> sub;
            Graph gs = h.induced(drop.complement(), &sub);
            if (gs.n() <= 2) {
                s.add(old_of[u]);
                break;
            }
            if (gs.is_cycle_of_length(5)) {
                // u is not the root here (a root u makes the residue empty)
                std::array<int, 5> x = five_cycle_order(gs, position_in(sub, bt.parent[u]));
                s.add(old_of[u]);
                s.add(old_of[sub[x[2]]]);
                break;
            }
            s.add(old_of[u]);
            old_of = compose_map(old_of, sub);
            h = std::move(gs);
            continue;
        }

        // An edge yz inside b1; x = father(y) has y as its only child, so
        // {x, y, z} peels off three tree leaves and y covers all three.
        int xf = bt.parent[y];
        VertexSet drop(n);
        drop.add(xf);
        drop.add(y);
        drop.add(z);
        std::vector<int> sub;
        Graph gs = h.induced(drop.complement(), &sub);
        if (gs.is_cycle_of_length(5)) {
            // 8 vertices and u lies on the cycle; orient it so that the
            // father of z comes right after u
            int u1 = bt.parent[z];
            int ug = position_in(sub, u);
            int u1g = position_in(sub, u1);
            std::vector<int> nbu = gs.neighbors(ug).to_vector();
            int u4g = (nbu[0] == u1g) ? nbu[1] : nbu[0];
            std::vector<int> nbu1 = gs.neighbors(u1g).to_vector();
            int u2g = (nbu1[0] == ug) ? nbu1[1] : nbu1[0];
            std::vector<int> nbu2 = gs.neighbors(u2g).to_vector();
            int u3g = (nbu2[0] == u1g) ? nbu2[1] : nbu2[0];
            int u2 = sub[u2g], u3 = sub[u3g];
            (void)u4g;
            if (h.has_edge(y, u2) || h.has_edge(y, u3)) {
                s.add(old_of[u]);
                s.add(old_of[y]);
            } else {
                s.add(old_of[u]);
                s.add(old_of[u1]);
            }
            break;
        }
        s.add(old_of[y]);
        old_of = compose_map(old_of, sub);
        h = std::move(gs);
    }

    return Certificate{s, PatternFamily::star(0), "third", Rational(g.n() / 3)};
}

Certificate isolating_components(const Graph &g) {
    std::vector<VertexSet> comps = g.components();
    for (const VertexSet &c : comps)
        if (c.count() < 3)
            throw precondition_error("isolating_components needs every component on at least 3 vertices");
    VertexSet s(g.n());
    bool any_c5 = false;
    std::int64_t floor_sum = 0;
    for (const VertexSet &c : comps) {
        std::vector<int> old;
        Graph sub = g.induced(c, &old);
        if (sub.is_cycle_of_length(5)) {
            any_c5 = true;
            // three consecutive cycle vertices a-b-c: a and c cover all five
            int a = 0;
            int b = sub.neighbors(a).first();
            std::vector<int> nb = sub.neighbors(b).to_vector();
            int cc = (nb[0] == a) ? nb[1] : nb[0];
            s.add(old[a]);
            s.add(old[cc]);
        } else {
            floor_sum += sub.n() / 3;
            Certificate part = isolating_third(sub);
            for (int v : part.set) s.add(old[v]);
        }
    }
    Rational bound = any_c5 ? Rational(2 * static_cast<std::int64_t>(g.n()), 5) : Rational(floor_sum);
    return Certificate{s, PatternFamily::star(0), "components", bound};
}

Certificate greedy_pattern_removal(const Graph &g, const Graph &h, const VertexSet &h_dominating) {
    if (h.n() < 1) throw parameter_error("pattern needs at least one vertex");
    if (h_dominating.width() != h.n()) throw parameter_error("dominating-set width differs from pattern order");
    if (h.closed_neighborhood(h_dominating) != h.vertices())
        throw precondition_error("the given set does not dominate the pattern");
    VertexSet avail = VertexSet::full(g.n());
    VertexSet s(g.n());
    while (auto m = find_subgraph(g, avail, h)) {
        // the embedded image of a pattern-dominating set dominates the copy
        for (int p = 0; p < h.n(); ++p) avail.remove((*m)[p]);
        for (int d : h_dominating) s.add((*m)[d]);
    }
    Rational bound(static_cast<std::int64_t>(h_dominating.count()) * (g.n() / h.n()));
    return Certificate{s, PatternFamily::explicit_list({h}), "greedy", bound};
}

Certificate randomized_isolating(const Graph &g, Rng &rng) {
    if (g.n() == 0 || g.min_degree() < 1)
        throw precondition_error("randomized_isolating needs min degree >= 1");
    int delta = g.min_degree();
    double p = std::log(delta + 1.0) / (delta + 1);
    VertexSet a(g.n());
    for (int v = 0; v < g.n(); ++v)
        if (rng.coin(p)) a.add(v);
    VertexSet region = g.remainder(a);
    // vertices missed by N[a] that still have a missed neighbor; the rest of
    // the region ends up isolated and can stay
    VertexSet b(g.n());
    for (int v : region)
        if (g.neighbors(v).intersects(region)) b.add(v);
    VertexSet s = a;
    if (!b.empty()) {
        std::vector<int> old;
        Graph gb = g.induced(b, &old);
        for (int v : half_dominating_set(gb)) s.add(old[v]);
    }
    return Certificate{s, PatternFamily::star(0), "random", std::nullopt};
}

Certificate randomized_bipartite_isolating(const Graph &g, Rng &rng) {
    std::vector<int> side;
    if (!g.is_bipartite(&side))
        throw precondition_error("randomized_bipartite_isolating needs a bipartite graph");
    if (g.n() == 0 || g.min_degree() < 1)
        throw precondition_error("randomized_bipartite_isolating needs min degree >= 1");
    int n1 = 0;
    for (int v = 0; v < g.n(); ++v)
        if (side[v] == 1) ++n1;
    int pick = (n1 < g.n() - n1) ? 1 : 0; // smaller side, ties to side 0
    int delta = g.min_degree();
    double p = (delta == 1) ? 0.5 : 1.0 - std::pow(1.0 / delta, 1.0 / (delta - 1));
    VertexSet a(g.n());
    for (int v = 0; v < g.n(); ++v)
        if (side[v] == pick && rng.coin(p)) a.add(v);
    VertexSet s = a;
    // other-side vertices with no sampled neighbor join the set themselves
    for (int v = 0; v < g.n(); ++v)
        if (side[v] != pick && !g.neighbors(v).intersects(a)) s.add(v);
    return Certificate{s, PatternFamily::star(0), "random-bipartite", std::nullopt};
}

Certificate tree_k_isolating(const Graph &t, int k) {
    if (k < 0) throw parameter_error("tree_k_isolating needs k >= 0");
    if (!t.is_tree()) throw precondition_error("tree_k_isolating needs a tree");
    if (t.n() == k + 2 && t.max_degree() >= k + 1)
        throw precondition_error("tree_k_isolating rejects the forbidden star itself");
    if (k == 0) {
        if (t.n() == 1)
            return Certificate{VertexSet(1), PatternFamily::star(0), "tree", Rational(0)};
        // n == 2 is the forbidden star; n >= 3 trees are never the 5-cycle
        Certificate c = isolating_third(t);
        return Certificate{c.set, PatternFamily::star(0), "tree", Rational(t.n() / 3)};
    }

    VertexSet s(t.n());
    Graph cur = t;
    std::vector<int> old_of = identity_map(t.n());

    // Each pass removes a whole subtree of >= k+3 vertices per chosen vertex.
    // After the first removal the residue always contains the old parent of
    // the removed subtree root, which is covered; a leftover forbidden star
    // therefore loses one vertex to the neighborhood of the chosen set.
    while (cur.n() > 0) {
        int n = cur.n();
        if (n <= k + 2 || cur.max_degree() <= k) break;
        int root = -1;
        for (int v = 0; v < n; ++v)
            if (cur.degree(v) <= 1) { root = v; break; }
        Graph::BfsTree bt = cur.bfs_tree(root);
        std::vector<std::vector<int>> children(n);
        for (int v = 0; v < n; ++v)
            if (bt.parent[v] >= 0) children[bt.parent[v]].push_back(v);
        // deepest level carrying degree >= k+1; the leaf root keeps level 0 low
        int dmax = 0;
        for (int v = 0; v < n; ++v)
            if (cur.degree(v) >= k + 1) dmax = std::max(dmax, bt.level[v]);
        // maximum degree first, then smallest index: every vertex at this
        // level then has degree at most deg(w)
        int w = -1;
        for (int v = 0; v < n; ++v) {
            if (bt.level[v] != dmax || cur.degree(v) < k + 1) continue;
            if (w < 0 || cur.degree(v) > cur.degree(w)) w = v;
        }
        int p = bt.parent[w];
        int high_children = 0;
        for (int c : children[p])
            if (cur.degree(c) >= k + 1) ++high_children;
        int target;
        if (cur.degree(w) >= k + 2 || high_children >= 2) {
            // p covers all its level-(dmax) children; everything deeper has
            // degree <= k
            target = p;
        } else {
            // deg(w) == k+1 caps the whole level, and each level-dmax vertex
            // inside the dropped subtree loses its parent to N[target]
            target = (bt.parent[p] >= 0) ? bt.parent[p] : p;
        }
        s.add(old_of[target]);
        VertexSet drop(n);
        std::vector<int> stack = {target};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            drop.add(v);
            for (int c : children[v]) stack.push_back(c);
        }
        if (drop.count() == n) break;
        std::vector<int> sub;
        Graph next = cur.induced(drop.complement(), &sub);
        old_of = compose_map(old_of, sub);
        cur = std::move(next);
    }
    return Certificate{s, PatternFamily::star(k), "tree", Rational(t.n() / (k + 3))};
}

Certificate equal_degree_tree_isolating(const Graph &t, int k, int r) {
    if (k < 0) throw parameter_error("equal_degree_tree_isolating needs k >= 0");
    if (!t.is_tree()) throw precondition_error("equal_degree_tree_isolating needs a tree");
    if (r < k + 3) throw precondition_error("equal_degree_tree_isolating needs r >= k+3");
    VertexSet inner(t.n());
    for (int v = 0; v < t.n(); ++v)
        if (t.degree(v) >= 2) inner.add(v);
    if (inner.count() < 2)
        throw precondition_error("equal_degree_tree_isolating needs at least two inner vertices");
    for (int v : inner)
        if (t.degree(v) != r)
            throw precondition_error("equal_degree_tree_isolating needs every inner degree equal to r");
    // the inner vertices induce a subtree; dominating it leaves only leaves,
    // which are pairwise nonadjacent.  |inner| (r-1) == n-2 ties the size of
    // a half-sized dominating set to (n-2)/(2(r-1)).
    std::vector<int> old;
    Graph ti = t.induced(inner, &old);
    SetResult d = tree_domination(ti);
    VertexSet s(t.n());
    for (int v : d.set) s.add(old[v]);
    return Certificate{s, PatternFamily::star(k), "equal-degree",
                       Rational(t.n() - 2, 2LL * (r - 1))};
}

Graph grid_graph(GridKind kind, int s, int t) {
    bool rows_cyclic = (kind == GridKind::torus);
    bool cols_cyclic = (kind != GridKind::grid);
    if (s < (rows_cyclic ? 3 : 2))
        throw parameter_error("grid rows: need s >= " + std::string(rows_cyclic ? "3" : "2"));
    if (t < (cols_cyclic ? 3 : 2))
        throw parameter_error("grid columns: need t >= " + std::string(cols_cyclic ? "3" : "2"));
    std::vector<std::pair<int, int>> edges;
    auto id = [t](int i, int j) { return i * t + j; };
    for (int i = 0; i < s; ++i)
        for (int j = 0; j < t; ++j) {
            if (i + 1 < s)
                edges.emplace_back(id(i, j), id(i + 1, j));
            else if (rows_cyclic)
                edges.emplace_back(id(i, j), id(0, j));
            if (j + 1 < t)
                edges.emplace_back(id(i, j), id(i, j + 1));
            else if (cols_cyclic)
                edges.emplace_back(id(i, j), id(i, 0));
        }
    return Graph(s * t, edges);
}

Certificate grid_isolating(GridKind kind, int s, int t) {
    Graph g = grid_graph(kind, s, t); // validates the dimensions
    bool rows_cyclic = (kind == GridKind::torus);
    bool cols_cyclic = (kind != GridKind::grid);
    VertexSet set(s * t);
    auto id = [t](int i, int j) { return i * t + j; };
    for (int i = 0; i < s; ++i)
        for (int j = 0; j < t; ++j)
            if ((i % 4 == 0 && j % 4 == 0) || (i % 4 == 2 && j % 4 == 2)) set.add(id(i, j));
    // boundary patches; a patched line never meets a lattice point of the
    // same parity class, so the pieces are disjoint and the tally is exact.
    // Path dimensions miss the lattice line beyond the last index (residues
    // 0 and 2); cyclic dimensions of length 1 mod 4 repeat residue 0 across
    // the seam, leaving adjacent survivors in the residue-2 columns.
    if (!rows_cyclic && s % 4 == 0)
        for (int j = 0; j < t; j += 4) set.add(id(s - 1, j));
    if (s % 4 == 2 || (rows_cyclic && s % 4 == 1))
        for (int j = 2; j < t; j += 4) set.add(id(s - 1, j));
    if (!cols_cyclic && t % 4 == 0)
        for (int i = 0; i < s; i += 4) set.add(id(i, t - 1));
    if (t % 4 == 2 || (cols_cyclic && t % 4 == 1))
        for (int i = 2; i < s; i += 4) set.add(id(i, t - 1));
    auto ceil4 = [](int x) { return (x + 3) / 4; };
    std::int64_t tally = static_cast<std::int64_t>(ceil4(s)) * ceil4(t) +
                         static_cast<std::int64_t>(ceil4(s - 2)) * ceil4(t - 2);
    if (!rows_cyclic && s % 4 == 0)
        tally += ceil4(t);
    else if (s % 4 == 2 || (rows_cyclic && s % 4 == 1))
        tally += ceil4(t - 2);
    if (!cols_cyclic && t % 4 == 0)
        tally += ceil4(s);
    else if (t % 4 == 2 || (cols_cyclic && t % 4 == 1))
        tally += ceil4(s - 2);
    (void)g;
    return Certificate{set, PatternFamily::star(0), "grid", Rational(tally)};
}

GridBounds grid_printed_bounds(GridKind kind, int s, int t) {
    Rational st(static_cast<std::int64_t>(s) * t, 8);
    switch (kind) {
    case GridKind::torus:
        return GridBounds{st, st + Rational(3LL * (s + t + 3), 8)};
    case GridKind::cylinder:
        return GridBounds{st - Rational(t, 16), st + Rational(3LL * s + t + 3, 8)};
    case GridKind::grid:
    default:
        return GridBounds{st - Rational(s + t, 16), st + Rational(static_cast<std::int64_t>(s) + t + 1, 8)};
    }
}

Certificate isolating_with_seed_set(const Graph &g, const VertexSet &seed, SeedMode mode) {
    if (seed.width() != g.n()) throw parameter_error("seed width differs from graph order");
    VertexSet covered = g.closed_neighborhood(seed);
    std::int64_t w = (covered - seed).count();
    VertexSet region = covered.complement();
    VertexSet s = seed;
    std::int64_t n = g.n(), sz = seed.count();
    Rational bound;
    if (mode == SeedMode::half) {
        bound = Rational(n - w + sz, 2);
        VertexSet b(g.n());
        for (int v : region)
            if (g.neighbors(v).intersects(region)) b.add(v);
        if (!b.empty()) {
            std::vector<int> old;
            Graph gb = g.induced(b, &old);
            for (int v : half_dominating_set(gb)) s.add(old[v]);
        }
    } else {
        std::vector<int> old;
        Graph gp = g.induced(region, &old);
        if (mode == SeedMode::two_fifths) {
            bound = Rational(2 * n - 2 * w + 3 * sz, 5);
            if (gp.n() > 0) {
                if (gp.min_degree() < 2)
                    throw precondition_error("seed mode two_fifths needs min degree >= 2 outside the seed's neighborhood");
                Certificate part = isolating_components(gp);
                for (int v : part.set) s.add(old[v]);
            }
        } else {
            bound = Rational(n - w + 2 * sz, 3);
            if (gp.n() > 0) {
                for (const VertexSet &comp : gp.components()) {
                    if (comp.count() < 3)
                        throw precondition_error("seed mode third needs components on >= 3 vertices outside the seed's neighborhood");
                    std::vector<int> co;
                    Graph cg = gp.induced(comp, &co);
                    if (cg.is_cycle_of_length(5))
                        throw precondition_error("seed mode third rejects 5-cycle components outside the seed's neighborhood");
                }
                Certificate part = isolating_components(gp);
                for (int v : part.set) s.add(old[v]);
            }
        }
    }
    return Certificate{s, PatternFamily::star(0), "seed-set", bound};
}

Certificate one_isolation_via_partition(const Graph &g) {
    if (g.n() == 0 || g.max_degree() < 1)
        throw precondition_error("one_isolation_via_partition needs max degree >= 1");
    int big = g.max_degree();
    int v0 = -1;
    for (int v = 0; v < g.n(); ++v)
        if (g.degree(v) == big) { v0 = v; break; }
    VertexSet s(g.n());
    s.add(v0);
    VertexSet region = g.remainder(s);
    std::vector<int> old;
    Graph gp = g.induced(region, &old);
    for (const VertexSet &comp : gp.components()) {
        // pieces of <= 2 vertices have max degree <= 1 and may stay whole
        if (comp.count() <= 2) continue;
        std::vector<int> co;
        Graph cg = gp.induced(comp, &co);
        if (cg.is_cycle_of_length(5)) {
            // one vertex knocks a 5-cycle down to two adjacent leftovers
            s.add(old[co[0]]);
        } else {
            Certificate part = isolating_third(cg);
            for (int x : part.set) s.add(old[co[x]]);
        }
    }
    return Certificate{s, PatternFamily::star(1), "max-degree",
                       Rational(static_cast<std::int64_t>(g.n()) - big + 2, 3)};
}

} // namespace isolate
