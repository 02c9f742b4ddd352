#include "doctest.h"

#include <algorithm>
#include <cstdint>
#include <vector>

#include "isolate/errors.hpp"
#include "isolate/families.hpp"
#include "isolate/graph.hpp"
#include "isolate/patterns.hpp"
#include "isolate/rng.hpp"
#include "isolate/solvers.hpp"

using namespace isolate;

namespace {

// Independent brute force over plain arrays; deliberately shares no code
// with the solvers under test.
std::vector<char> naive_alive_after(const Graph &g, std::uint64_t set_mask) {
    int n = g.n();
    std::vector<char> alive(n, 1);
    for (int v = 0; v < n; ++v)
        if (set_mask >> v & 1) {
            alive[v] = 0;
            for (int u = 0; u < n; ++u)
                if (g.has_edge(u, v)) alive[u] = 0;
        }
    return alive;
}

bool naive_star_free(const Graph &g, const std::vector<char> &alive, int k) {
    for (int v = 0; v < g.n(); ++v) {
        if (!alive[v]) continue;
        int d = 0;
        for (int u = 0; u < g.n(); ++u)
            if (alive[u] && g.has_edge(u, v)) ++d;
        if (d >= k + 1) return false;
    }
    return true;
}

int naive_iota_k(const Graph &g, int k) {
    int n = g.n();
    for (int size = 0; size <= n; ++size)
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
            if (__builtin_popcountll(mask) != size) continue;
            if (naive_star_free(g, naive_alive_after(g, mask), k)) return size;
        }
    return n;
}

int naive_gamma(const Graph &g) {
    int n = g.n();
    for (int size = 0; size <= n; ++size)
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
            if (__builtin_popcountll(mask) != size) continue;
            std::vector<char> alive = naive_alive_after(g, mask);
            bool covered = true;
            for (int v = 0; v < n; ++v) covered = covered && !alive[v];
            if (covered) return size;
        }
    return n;
}

Graph graph_from_mask(int n, std::uint64_t mask) {
    std::vector<std::pair<int, int>> edges;
    int b = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++b)
            if (mask >> b & 1) edges.emplace_back(i, j);
    return Graph(n, edges);
}

int ceil_div(int a, int b) { return (a + b - 1) / b; }

} // namespace

TEST_CASE("isolation numbers of cycles and paths") {
    for (int n = 3; n <= 10; ++n) {
        CHECK(exact_isolation(cycle_graph(n), PatternFamily::star(0)).value == ceil_div(n, 4));
        CHECK(exact_isolation(path_graph(n), PatternFamily::star(0)).value == ceil_div(n - 1, 4));
        CHECK(exact_isolation(cycle_graph(n), PatternFamily::star(1)).value == ceil_div(n, 5));
        CHECK(exact_isolation(path_graph(n), PatternFamily::star(1)).value ==
              ceil_div(std::max(0, n - 2), 5));
    }
}

TEST_CASE("petersen and the non-monotonic triple") {
    Graph pet = petersen();
    CHECK(exact_isolation(pet, PatternFamily::star(0)).value == 3);
    CHECK(exact_isolation(pet, PatternFamily::star(1)).value == 2);
    CHECK(exact_isolation(pet, PatternFamily::star(2)).value == 1);
    CHECK(exact_isolation(complete_graph(5), PatternFamily::star(0)).value == 1);
    CHECK(exact_isolation(cycle_graph(5), PatternFamily::star(0)).value == 2);
    CHECK(exact_isolation(path_graph(5), PatternFamily::star(0)).value == 1);
}

TEST_CASE("solver matches the naive brute force on all small graphs") {
    for (int n = 1; n <= 5; ++n) {
        int bits = n * (n - 1) / 2;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << bits); ++mask) {
            Graph g = graph_from_mask(n, mask);
            for (int k = 0; k <= 1; ++k) {
                ExactResult r = exact_isolation(g, PatternFamily::star(k));
                CHECK(r.value == naive_iota_k(g, k));
                CHECK(check_certificate(g, r.certificate));
                CHECK(static_cast<int>(r.certificate.set.count()) == r.value);
            }
            SetResult d = exact_domination(g);
            CHECK(d.value == naive_gamma(g));
            CHECK(g.remainder(d.set).empty());
        }
    }
}

TEST_CASE("witnesses are the smallest bitset of minimum size") {
    ExactResult r = exact_isolation(cycle_graph(5), PatternFamily::star(0));
    CHECK(r.value == 2);
    CHECK(r.certificate.set.str() == "{0,1}");
    SetResult d = exact_domination(cycle_graph(6));
    CHECK(d.value == 2);
    CHECK(d.set.str() == "{0,3}");
}

TEST_CASE("isolation with other families") {
    // removing one clique center kills every triangle of two joined triangles
    Graph two_tri(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {2, 3}});
    CHECK(exact_isolation(two_tri, PatternFamily::clique(3)).value == 1);
    CHECK(exact_isolation(cycle_graph(6), PatternFamily::all_cycles()).value == 1);
    // one closed neighborhood leaves P_3, still a tree on 3 vertices
    CHECK(exact_isolation(cycle_graph(6), PatternFamily::all_trees(3)).value == 2);
    CHECK(exact_isolation(complete_graph(6), PatternFamily::star(0)).value == 1);
    // K_{1,k+1} has more vertices than the host: nothing to remove
    CHECK(exact_isolation(complete_graph(4), PatternFamily::star(3)).value == 0);
    CHECK(exact_isolation(empty_graph(5), PatternFamily::star(0)).value == 0);
}

TEST_CASE("capped search") {
    Graph c8 = cycle_graph(8);
    CHECK(!exact_isolation_capped(c8, PatternFamily::star(0), 1).has_value());
    auto r = exact_isolation_capped(c8, PatternFamily::star(0), 2);
    REQUIRE(r.has_value());
    CHECK(r->value == 2);
    auto r2 = exact_isolation_capped(c8, PatternFamily::star(0), 8);
    REQUIRE(r2.has_value());
    CHECK(r2->value == 2);
}

TEST_CASE("domination pins") {
    for (int n = 3; n <= 9; ++n) {
        CHECK(exact_domination(cycle_graph(n)).value == ceil_div(n, 3));
        CHECK(exact_domination(path_graph(n)).value == ceil_div(n, 3));
    }
    CHECK(exact_domination(complete_graph(7)).value == 1);
    CHECK(exact_domination(petersen()).value == 3);
}

TEST_CASE("max f-free subsets and k-independence") {
    CHECK(max_f_free_subset(cycle_graph(5), PatternFamily::star(0)).value == 2);
    CHECK(exact_k_independence(cycle_graph(5), 0).value == 2);
    CHECK(exact_k_independence(cycle_graph(5), 1).value == 3);
    CHECK(exact_k_independence(empty_graph(6), 0).value == 6);
    for (int n = 1; n <= 5; ++n) {
        int bits = n * (n - 1) / 2;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << bits); ++mask) {
            Graph g = graph_from_mask(n, mask);
            for (int k = 0; k <= 2; ++k) {
                SetResult a = exact_k_independence(g, k);
                SetResult b = max_f_free_subset(g, PatternFamily::star(k));
                CHECK(a.value == b.value);
                CHECK(is_f_free(g, a.set, PatternFamily::star(k)));
            }
            // triangle-free subsets are at least as large as star(1)-free ones
            CHECK(max_f_free_subset(g, PatternFamily::clique(3)).value >=
                  max_f_free_subset(g, PatternFamily::star(1)).value);
        }
    }
}

TEST_CASE("tree domination equals the generic solver") {
    Rng rng(501);
    for (int rep = 0; rep < 120; ++rep) {
        int n = 1 + static_cast<int>(rng.below(12));
        Graph t = random_tree(n, rng);
        SetResult a = tree_domination(t);
        SetResult b = exact_domination(t);
        CHECK(a.value == b.value);
        CHECK(t.remainder(a.set).empty());
    }
    // forests too
    Graph f = Graph::disjoint_union(path_graph(4), path_graph(7));
    CHECK(tree_domination(f).value == exact_domination(f).value);
    CHECK_THROWS_AS(tree_domination(cycle_graph(4)), precondition_error);
    CHECK(tree_domination(path_graph(4)).value == 2);
    CHECK(tree_domination(star_graph(5)).value == 1);
    CHECK(tree_domination(path_graph(7)).value == 3);
}

TEST_CASE("half dominating set") {
    for (int n = 2; n <= 6; ++n) {
        int bits = n * (n - 1) / 2;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << bits); ++mask) {
            Graph g = graph_from_mask(n, mask);
            if (g.min_degree() < 1) continue;
            VertexSet d = half_dominating_set(g);
            CHECK(g.remainder(d).empty());
            CHECK(2 * static_cast<int>(d.count()) <= n);
        }
    }
    CHECK_THROWS_AS(half_dominating_set(empty_graph(3)), precondition_error);
    CHECK(half_dominating_set(path_graph(2)).count() == 1);
}

TEST_CASE("find_violation reports a real occurrence") {
    Graph c5 = cycle_graph(5);
    auto v = find_violation(c5, VertexSet::full(5), PatternFamily::star(0));
    REQUIRE(v.has_value());
    CHECK(!is_f_free(c5, *v, PatternFamily::star(0)));
    CHECK(!find_violation(c5, VertexSet(5, {0, 2}), PatternFamily::star(0)).has_value());
    auto w = find_violation(petersen(), VertexSet::full(10), PatternFamily::star(2));
    REQUIRE(w.has_value());
    CHECK(w->count() == 4);
    CHECK(!is_f_free(petersen(), *w, PatternFamily::star(2)));
}
