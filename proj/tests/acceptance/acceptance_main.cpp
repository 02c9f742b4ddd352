// Acceptance suite: ten criteria, one pass/fail line each, nonzero exit on
// any failure.  Budgets and tolerances are pinned in code.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "isolate/bounds.hpp"
#include "isolate/constructive.hpp"
#include "isolate/families.hpp"
#include "isolate/graph.hpp"
#include "isolate/patterns.hpp"
#include "isolate/rng.hpp"
#include "isolate/solvers.hpp"
#include "isolate/verify.hpp"

using namespace isolate;

namespace {

int failures = 0;

void run(int idx, const std::string &label, double budget_s,
         const std::function<void(std::vector<std::string> &)> &body) {
    std::vector<std::string> problems;
    auto t0 = std::chrono::steady_clock::now();
    try {
        body(problems);
    } catch (const std::exception &e) {
        problems.push_back(std::string("exception: ") + e.what());
    }
    double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (dt > budget_s) problems.push_back("over budget");
    if (problems.empty()) {
        std::printf("criterion %d PASS %s [%.1fs]\n", idx, label.c_str(), dt);
    } else {
        ++failures;
        std::string detail = problems.front();
        for (std::size_t i = 1; i < problems.size() && i < 3; ++i) detail += "; " + problems[i];
        if (problems.size() > 3)
            detail += "; and " + std::to_string(problems.size() - 3) + " more";
        std::printf("criterion %d FAIL %s: %s [%.1fs]\n", idx, label.c_str(), detail.c_str(), dt);
    }
    std::fflush(stdout);
}

int ceil_div(int a, int b) { return (a + b - 1) / b; }

void expect(std::vector<std::string> &problems, bool ok, const std::string &what) {
    if (!ok) problems.push_back(what);
}

Graph k44_minus_perfect_matching() {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            if (i != j) edges.emplace_back(i, 4 + j);
    return Graph(8, edges);
}

struct MeanStd {
    double mean;
    double sd;
};

MeanStd mean_std(const std::vector<int> &xs) {
    double mean = 0;
    for (int x : xs) mean += x;
    mean /= static_cast<double>(xs.size());
    double var = 0;
    for (int x : xs) var += (x - mean) * (x - mean);
    var /= static_cast<double>(xs.size() - 1);
    return {mean, std::sqrt(var)};
}

void criterion1(std::vector<std::string> &problems) {
    for (int n = 3; n <= 12; ++n) {
        Graph c = cycle_graph(n), p = path_graph(n);
        expect(problems, exact_isolation(c, PatternFamily::star(0)).value == ceil_div(n, 4),
               "cycle " + std::to_string(n) + " k=0");
        expect(problems, exact_isolation(p, PatternFamily::star(0)).value == ceil_div(n - 1, 4),
               "path " + std::to_string(n) + " k=0");
        expect(problems, exact_isolation(c, PatternFamily::star(1)).value == ceil_div(n, 5),
               "cycle " + std::to_string(n) + " k=1");
        expect(problems, exact_isolation(p, PatternFamily::star(1)).value == ceil_div(n - 2, 5),
               "path " + std::to_string(n) + " k=1");
    }
    Graph pet = petersen();
    for (int k = 0; k <= 2; ++k)
        expect(problems, exact_isolation(pet, PatternFamily::star(k)).value == 3 - k,
               "petersen k=" + std::to_string(k));
    expect(problems, exact_isolation(complete_graph(5), PatternFamily::star(0)).value == 1,
           "K_5");
    expect(problems, exact_isolation(cycle_graph(5), PatternFamily::star(0)).value == 2, "C_5");
    expect(problems, exact_isolation(path_graph(5), PatternFamily::star(0)).value == 1, "P_5");
}

void criterion2(std::vector<std::string> &problems) {
    std::vector<CheckResult> rows = sweep_theorems(7, {"thm-n3"}, true, false, 2);
    expect(problems, rows.size() == 1, "one row expected");
    if (rows.empty()) return;
    expect(problems, rows[0].violations == 0,
           "violations: " + std::to_string(rows[0].violations) + " first " + rows[0].example_g6);
    expect(problems, rows[0].graphs_tested == 1893718,
           "graphs tested: " + std::to_string(rows[0].graphs_tested));
}

void criterion3(std::vector<std::string> &problems) {
    for (CoronaMode mode : {CoronaMode::one_edge, CoronaMode::two_edges})
        for (const Graph &h : {path_graph(4), cycle_graph(4), complete_graph(3)}) {
            Graph g = corona_k2(h, mode);
            expect(problems,
                   exact_isolation(g, PatternFamily::star(0)).value == h.n(),
                   "corona base n=" + std::to_string(h.n()));
        }
    const int frst[3][4] = {{1, 1, 1, 4}, {2, 1, 0, 3}, {0, 0, 2, 4}};
    for (const auto &row : frst)
        expect(problems,
               exact_isolation(f_rst(row[0], row[1], row[2]), PatternFamily::star(1)).value ==
                   row[3],
               "f_rst");
    const int pos[3][3] = {{3, 1, 3}, {2, 0, 2}, {4, 2, 4}};
    for (const auto &row : pos)
        expect(problems,
               exact_isolation(path_of_stars(row[0], row[1]), PatternFamily::star(row[1]))
                       .value == row[2],
               "path_of_stars");
    for (int p : {2, 3})
        expect(problems,
               exact_isolation(outerplanar_sharp(p), PatternFamily::star(0)).value == p,
               "outerplanar p=" + std::to_string(p));
    Graph torus = grid_graph(GridKind::torus, 4, 4);
    expect(problems, exact_isolation(torus, PatternFamily::star(0)).value == 2, "torus 4x4");
}

void criterion4(std::vector<std::string> &problems) {
    std::vector<CheckResult> rows = sweep_theorems(6, {"bound-sandwich"}, false, false, 2);
    expect(problems, rows.size() == 1, "one row expected");
    if (rows.empty()) return;
    expect(problems, rows[0].violations == 0,
           "violations: " + std::to_string(rows[0].violations) + " first " + rows[0].example_g6);
    expect(problems, rows[0].graphs_tested == 33867,
           "graphs tested: " + std::to_string(rows[0].graphs_tested));
}

void criterion5(std::vector<std::string> &problems) {
    std::vector<CheckResult> rows =
        sweep_theorems(7, {"ng-basic", "ng-iota3", "ng-delta"}, false, false, 2);
    for (const CheckResult &r : rows)
        expect(problems, r.violations == 0,
               r.check + " violations: " + std::to_string(r.violations) + " first " +
                   r.example_g6);
    // stated equality families
    Graph k1 = empty_graph(1), k2 = complete_graph(2), p3 = path_graph(3);
    auto sum_for = [](const Graph &g) {
        return exact_isolation(g, PatternFamily::star(0)).value +
               exact_isolation(g.complement(), PatternFamily::star(0)).value;
    };
    Graph d0n6 = Graph::disjoint_union(Graph::disjoint_union(k2, k2),
                                       Graph::disjoint_union(k1, k1));
    expect(problems, sum_for(d0n6) == 3, "two edges plus two isolated vertices");
    Graph d0n7 = Graph::disjoint_union(Graph::disjoint_union(k2, k2),
                                       Graph::disjoint_union(k2, k1));
    expect(problems, sum_for(d0n7) == 4, "three edges plus an isolated vertex");
    Graph d1n6 = Graph::disjoint_union(Graph::disjoint_union(k2, k2), k2);
    expect(problems, sum_for(d1n6) == 4, "three disjoint edges");
    Graph d1n7 = Graph::disjoint_union(Graph::disjoint_union(k2, k2), p3);
    expect(problems, sum_for(d1n7) == 4, "two edges plus a path");
}

void criterion6(std::vector<std::string> &problems) {
    std::vector<CheckResult> rows = sweep_theorems(5, {"thm-dom"}, false, false, 2);
    expect(problems, rows.size() == 1, "one row expected");
    if (rows.empty()) return;
    expect(problems, rows[0].violations == 0,
           "violations: " + std::to_string(rows[0].violations) + " first " + rows[0].example_g6);
}

void criterion7(std::vector<std::string> &problems) {
    const int runs = 200;
    {
        Rng gen(11);
        std::vector<Graph> hosts = {petersen(), hypercube(3), random_regular(20, 4, gen)};
        const char *names[] = {"petersen", "cube", "regular20"};
        for (std::size_t h = 0; h < hosts.size(); ++h) {
            const Graph &g = hosts[h];
            std::vector<int> sizes;
            for (int rep = 0; rep < runs; ++rep) {
                Rng rng(1000 + static_cast<std::uint64_t>(rep));
                Certificate c = randomized_isolating(g, rng);
                if (!check_certificate(g, c)) {
                    problems.push_back(std::string(names[h]) + " invalid run " +
                                       std::to_string(rep));
                    return;
                }
                sizes.push_back(c.set.count());
            }
            MeanStd ms = mean_std(sizes);
            int delta = g.min_degree();
            double bound = (std::log(delta + 1.0) + 0.5) / (delta + 1.0) * g.n();
            double cap = bound + 2.0 * ms.sd / std::sqrt(static_cast<double>(runs));
            expect(problems, ms.mean <= cap + 1e-9,
                   std::string(names[h]) + " mean " + std::to_string(ms.mean) + " > " +
                       std::to_string(cap));
        }
    }
    {
        std::vector<Graph> hosts = {cycle_graph(6), hypercube(3), k44_minus_perfect_matching()};
        const char *names[] = {"hexagon", "cube", "biclique-minus-matching"};
        for (std::size_t h = 0; h < hosts.size(); ++h) {
            const Graph &g = hosts[h];
            std::vector<int> sizes;
            for (int rep = 0; rep < runs; ++rep) {
                Rng rng(5000 + static_cast<std::uint64_t>(rep));
                Certificate c = randomized_bipartite_isolating(g, rng);
                if (!check_certificate(g, c)) {
                    problems.push_back(std::string(names[h]) + " invalid run " +
                                       std::to_string(rep));
                    return;
                }
                sizes.push_back(c.set.count());
            }
            MeanStd ms = mean_std(sizes);
            int delta = g.min_degree();
            double bound = (std::log(static_cast<double>(delta)) + 1.0) / (2.0 * delta) * g.n();
            double cap = bound + 2.0 * ms.sd / std::sqrt(static_cast<double>(runs));
            expect(problems, ms.mean <= cap + 1e-9,
                   std::string(names[h]) + " mean " + std::to_string(ms.mean) + " > " +
                       std::to_string(cap));
        }
    }
}

void criterion8(std::vector<std::string> &problems) {
    Rng rng(2024);
    int used = 0;
    while (used < 500) {
        int n = 2 + static_cast<int>(rng.below(15)); // 2..16
        Graph t = random_tree(n, rng);
        for (int k = 0; k <= 2; ++k) {
            if (t.n() == k + 2 && t.m() == k + 1 && t.max_degree() == k + 1)
                continue; // the forbidden star itself
            Certificate c = tree_k_isolating(t, k);
            if (!check_certificate(t, c)) {
                problems.push_back("invalid tree certificate n=" + std::to_string(n) +
                                   " k=" + std::to_string(k));
                return;
            }
            expect(problems, c.set.count() <= n / (k + 3),
                   "certificate too large n=" + std::to_string(n) + " k=" + std::to_string(k));
            int exact = exact_isolation(t, PatternFamily::star(k)).value;
            expect(problems, exact <= n / (k + 3),
                   "exact above cap n=" + std::to_string(n) + " k=" + std::to_string(k));
        }
        ++used;
    }
    for (int r : {3, 4, 5}) {
        Graph t = equal_degree_caterpillar(r, r);
        int target = (t.n() - 2) / (2 * (r - 1));
        Certificate c = equal_degree_tree_isolating(t, 0, r);
        expect(problems, check_certificate(t, c), "caterpillar certificate invalid");
        expect(problems, static_cast<int>(c.set.count()) == target,
               "caterpillar certificate size != " + std::to_string(target));
        expect(problems, exact_isolation(t, PatternFamily::star(0)).value == target,
               "caterpillar exact != " + std::to_string(target));
    }
}

void criterion9(std::vector<std::string> &problems) {
    const char *names[] = {"grid", "cylinder", "torus"};
    for (GridKind kind : {GridKind::grid, GridKind::cylinder, GridKind::torus})
        for (int s = 3; s <= 6; ++s)
            for (int t = 3; t <= 6; ++t) {
                Graph g = grid_graph(kind, s, t);
                Certificate c = grid_isolating(kind, s, t);
                std::string tag = std::string(names[static_cast<int>(kind)]) + " " +
                                  std::to_string(s) + "x" + std::to_string(t);
                if (!check_certificate(g, c)) {
                    problems.push_back(tag + " certificate invalid");
                    continue;
                }
                auto exact = exact_isolation_capped(g, PatternFamily::star(0), c.set.count());
                if (!exact) {
                    problems.push_back(tag + " exact above construction tally");
                    continue;
                }
                GridBounds b = grid_printed_bounds(kind, s, t);
                if (!(Rational(exact->value) >= b.lower && Rational(exact->value) <= b.upper))
                    problems.push_back(tag + " exact " + std::to_string(exact->value) +
                                       " outside [" + b.lower.str() + ", " + b.upper.str() +
                                       "]");
            }
}

void criterion10(std::vector<std::string> &problems) {
    auto render = [](int jobs) {
        std::ostringstream out;
        out << sweep_tsv(sweep_theorems(5, {}, false, false, jobs));
        BoundReport r = bound_report(petersen(), 0, true);
        for (const BoundEntry &e : r.entries)
            out << e.name << "," << (e.upper ? "upper" : "lower") << "," << e.value_str() << ","
                << (e.applicable ? "yes" : "no") << "," << e.reason << "\n";
        ProbeResult p = open_problem_probe(3, 5);
        out << p.best.g6 << " " << p.best.ratio.str() << "\n";
        for (const ProbeRow &row : p.named) out << row.g6 << " " << row.ratio.str() << "\n";
        Rng rng(77);
        Certificate c = randomized_isolating(petersen(), rng);
        out << c.set.str() << "\n";
        Certificate tc = tree_k_isolating(path_graph(12), 1);
        out << tc.set.str() << " " << (tc.promised_bound ? tc.promised_bound->str() : "none")
            << "\n";
        return out.str();
    };
    std::string a = render(1), b = render(1), c = render(3);
    expect(problems, a == b, "repeated single-job render differs");
    expect(problems, a == c, "three-job render differs from single-job");
}

} // namespace

int main() {
    run(1, "example tables", 60, criterion1);
    run(2, "third-bound exhaustive to order 7", 600, criterion2);
    run(3, "sharpness families", 600, criterion3);
    run(4, "bound sandwich to order 6", 600, criterion4);
    run(5, "complement sum bounds to order 7", 600, criterion5);
    run(6, "product and double cover to order 5", 900, criterion6);
    run(7, "randomized certificates, 200 runs each", 600, criterion7);
    run(8, "tree bounds, 500 samples", 600, criterion8);
    run(9, "lattice sandwich and tallies", 1800, criterion9);
    run(10, "byte-identical reports", 600, criterion10);
    if (failures)
        std::printf("%d of 10 criteria failed\n", failures);
    else
        std::printf("all 10 criteria passed\n");
    return failures;
}
