#include "doctest.h"

#include <algorithm>
#include <vector>

#include "isolate/constructive.hpp"
#include "isolate/errors.hpp"
#include "isolate/families.hpp"
#include "isolate/graph.hpp"
#include "isolate/rng.hpp"
#include "isolate/solvers.hpp"

using namespace isolate;

namespace {

std::vector<int> component_sizes(const Graph &g) {
    std::vector<VertexSet> comps = g.components();
    std::vector<int> sizes;
    for (const auto &c : comps) sizes.push_back(c.count());
    std::sort(sizes.begin(), sizes.end());
    return sizes;
}

} // namespace

TEST_CASE("corona attaches a private K_2 per vertex") {
    Graph p3 = corona_k2(complete_graph(1), CoronaMode::one_edge);
    CHECK(p3.n() == 3);
    CHECK(p3.m() == 2);
    CHECK(p3.is_tree());

    Graph k3 = corona_k2(complete_graph(1), CoronaMode::two_edges);
    CHECK(k3.n() == 3);
    CHECK(k3.m() == 3);

    for (CoronaMode mode : {CoronaMode::one_edge, CoronaMode::two_edges}) {
        Graph g = corona_k2(cycle_graph(4), mode);
        CHECK(g.n() == 12);
        CHECK(g.is_connected());
        // host vertex i keeps its host degree plus one or two pendant edges
        int extra = mode == CoronaMode::two_edges ? 2 : 1;
        for (int i = 0; i < 4; ++i) CHECK(g.degree(i) == 2 + extra);
        // every host vertex must be deleted: iota = n(h)
        CHECK(exact_isolation(g, PatternFamily::star(0)).value == 4);
    }
}

TEST_CASE("f_rst builds r K_3, s P_3, t C_6 and its star(1) isolation") {
    Graph g = f_rst(1, 1, 1);
    CHECK(g.n() == 12);
    CHECK(component_sizes(g) == std::vector<int>{3, 3, 6});
    CHECK(exact_isolation(g, PatternFamily::star(1)).value == 1 + 1 + 2);

    CHECK(exact_isolation(f_rst(2, 1, 0), PatternFamily::star(1)).value == 3);
    CHECK(exact_isolation(f_rst(0, 0, 2), PatternFamily::star(1)).value == 4);
    CHECK_THROWS_AS(f_rst(0, 0, 0), parameter_error);
    CHECK_THROWS_AS(f_rst(-1, 1, 0), parameter_error);
}

TEST_CASE("complete graph minus a hamiltonian cycle") {
    Graph g4 = kr_minus_hamiltonian(4);
    CHECK(g4.n() == 4);
    CHECK(g4.m() == 2);
    CHECK(component_sizes(g4) == std::vector<int>{2, 2});

    Graph g5 = kr_minus_hamiltonian(5);
    int r5 = 0;
    CHECK(g5.is_regular(&r5));
    CHECK(r5 == 2);
    CHECK(g5.is_connected());

    Graph g7 = kr_minus_hamiltonian(7);
    int r7 = 0;
    CHECK(g7.is_regular(&r7));
    CHECK(r7 == 4);
    CHECK(exact_isolation(g7, PatternFamily::star(0)).value == 2);
    CHECK_THROWS_AS(kr_minus_hamiltonian(3), parameter_error);
}

TEST_CASE("composition hooks a copy of h onto each vertex of gstar") {
    Graph g = compose_general(path_graph(3), 0, complete_graph(3), ComposeMode::delta1);
    CHECK(g.n() == 12);
    CHECK(g.is_connected());
    // hook of copy i is i*3; it gains the join to gstar vertex 9+i
    for (int i = 0; i < 3; ++i) CHECK(g.has_edge(3 * i, 9 + i));

    Graph h = compose_general(cycle_graph(4), 1, path_graph(2), ComposeMode::delta_ge2);
    CHECK(h.n() == 10);
    CHECK(h.is_connected());

    // delta1 needs a leaf of h besides the hook
    CHECK_THROWS_AS(compose_general(complete_graph(3), 0, complete_graph(3), ComposeMode::delta1),
                    precondition_error);
    // delta_ge2 needs min degree of h above that of gstar
    CHECK_THROWS_AS(compose_general(path_graph(3), 0, complete_graph(3), ComposeMode::delta_ge2),
                    precondition_error);
}

TEST_CASE("path of stars is a tree with isolation number t") {
    Graph p = path_of_stars(1, 0);
    CHECK(p.n() == 3);
    CHECK(p.is_tree());

    for (auto [t, k] : std::vector<std::pair<int, int>>{{2, 0}, {3, 1}, {4, 2}}) {
        Graph g = path_of_stars(t, k);
        CHECK(g.n() == t * (k + 3));
        CHECK(g.is_tree());
        CHECK(exact_isolation(g, PatternFamily::star(k)).value == t);
    }
    CHECK_THROWS_AS(path_of_stars(0, 0), parameter_error);
    CHECK_THROWS_AS(path_of_stars(1, -1), parameter_error);
}

TEST_CASE("equal degree caterpillar shape") {
    Graph g33 = equal_degree_caterpillar(3, 3);
    CHECK(g33.n() == 6);
    CHECK(g33.is_tree());

    Graph g44 = equal_degree_caterpillar(4, 4);
    CHECK(g44.n() == 14);
    CHECK(g44.is_tree());
    // spine is 0..t-1; inner spine vertices and their pendant twins all reach r
    CHECK(g44.degree(1) == 4);
    CHECK(g44.degree(2) == 4);
    CHECK(g44.max_degree() == 4);

    CHECK(equal_degree_caterpillar(5, 5).n() == 26);
    CHECK_THROWS_AS(equal_degree_caterpillar(2, 4), parameter_error);
    CHECK_THROWS_AS(equal_degree_caterpillar(4, 2), parameter_error);
}

TEST_CASE("triangulations of a polygon") {
    Graph fan = fan_triangulation(6);
    CHECK(fan.n() == 6);
    CHECK(fan.m() == 9);
    CHECK(fan.degree(0) == 5);

    Rng rng(77);
    for (int rep = 0; rep < 10; ++rep) {
        int n = 4 + static_cast<int>(rng.below(9));
        Graph g = random_polygon_triangulation(n, rng);
        CHECK(g.n() == n);
        CHECK(g.m() == 2 * n - 3);
        CHECK(g.is_connected());
        // outer cycle is intact
        for (int i = 0; i < n; ++i) CHECK(g.has_edge(i, (i + 1) % n));
    }
    CHECK_THROWS_AS(fan_triangulation(2), parameter_error);
}

TEST_CASE("outerplanar family with isolation number exactly a quarter") {
    Graph g2 = outerplanar_sharp(2);
    CHECK(g2.n() == 8);
    CHECK(g2.m() == 13);
    CHECK(exact_isolation(g2, PatternFamily::star(0)).value == 2);

    Graph g3 = outerplanar_sharp(3);
    CHECK(g3.n() == 12);
    CHECK(exact_isolation(g3, PatternFamily::star(0)).value == 3);

    // a custom base must be a maximal outerplanar triangulation of the 2p-gon
    Rng rng(5);
    Graph base = random_polygon_triangulation(6, rng);
    Graph g3b = outerplanar_sharp(3, &base);
    CHECK(g3b.n() == 12);
    CHECK(exact_isolation(g3b, PatternFamily::star(0)).value == 3);

    Graph bad = cycle_graph(6);
    CHECK_THROWS_AS(outerplanar_sharp(3, &bad), precondition_error);
    Graph wrong_order = random_polygon_triangulation(8, rng);
    CHECK_THROWS_AS(outerplanar_sharp(3, &wrong_order), precondition_error);
    CHECK_THROWS_AS(outerplanar_sharp(0), parameter_error);
}

TEST_CASE("bipartite equality family for the average-degree bound") {
    Graph c4 = lb_equality_bipartite(1, 2);
    CHECK(c4.n() == 4);
    int r = 0;
    CHECK(c4.is_regular(&r));
    CHECK(r == 2);
    CHECK(c4.is_connected());

    Graph g = lb_equality_bipartite(2, 2);
    CHECK(g.n() == 8);
    CHECK(g.is_regular(&r));
    CHECK(r == 2);
    CHECK(g.is_bipartite(nullptr));

    Graph h = lb_equality_bipartite(2, 3);
    CHECK(h.n() == 12);
    CHECK(h.is_regular(&r));
    CHECK(r == 3);
    CHECK(h.is_bipartite(nullptr));
    CHECK_THROWS_AS(lb_equality_bipartite(0, 2), parameter_error);
}

TEST_CASE("hub with pendant cliques") {
    Graph g = star_lower_sharp(3, 1);
    CHECK(g.n() == 7);
    CHECK(g.degree(0) == 3);
    CHECK(exact_isolation(g, PatternFamily::star(1)).value == 1);

    Graph k2 = star_lower_sharp(1, 0);
    CHECK(k2.n() == 2);
    CHECK(k2.m() == 1);
    CHECK_THROWS_AS(star_lower_sharp(0, 0), parameter_error);
}

TEST_CASE("named graphs") {
    Graph q3 = hypercube(3);
    CHECK(q3.n() == 8);
    CHECK(q3.m() == 12);
    int r = 0;
    CHECK(q3.is_regular(&r));
    CHECK(r == 3);
    CHECK(q3.is_bipartite(nullptr));

    Graph pet = petersen();
    CHECK(pet.n() == 10);
    CHECK(pet.m() == 15);
    CHECK(pet.is_regular(&r));
    CHECK(r == 3);

    CHECK(complete_bipartite(3, 4).m() == 12);
    CHECK(star_graph(5).n() == 6);
    CHECK(star_graph(5).degree(0) == 5);
}

TEST_CASE("random generators are seeded and structurally sound") {
    Rng a(42), b(42), c(43);
    Graph t1 = random_tree(12, a);
    Graph t2 = random_tree(12, b);
    Graph t3 = random_tree(12, c);
    CHECK(t1 == t2);
    CHECK(t1.is_tree());
    CHECK(t3.is_tree());

    Rng d(42), e(42);
    Graph r1 = random_regular(16, 3, d);
    Graph r2 = random_regular(16, 3, e);
    CHECK(r1 == r2);
    int deg = 0;
    CHECK(r1.is_regular(&deg));
    CHECK(deg == 3);
    CHECK_THROWS_AS(random_regular(5, 3, d), parameter_error); // odd n * degree
}

TEST_CASE("grid graphs") {
    Graph grid = grid_graph(GridKind::grid, 3, 4);
    CHECK(grid.n() == 12);
    CHECK(grid.m() == 3 * 3 + 2 * 4); // 17: s(t-1) + (s-1)t
    Graph cyl = grid_graph(GridKind::cylinder, 3, 4);
    CHECK(cyl.m() == 3 * 4 + 2 * 4); // rows closed into cycles of length t
    Graph torus = grid_graph(GridKind::torus, 4, 4);
    CHECK(torus.n() == 16);
    int r = 0;
    CHECK(torus.is_regular(&r));
    CHECK(r == 4);
    CHECK_THROWS_AS(grid_graph(GridKind::torus, 2, 4), parameter_error);
}
