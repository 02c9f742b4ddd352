#include "isolate/verify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <sstream>
#include <thread>

#include "isolate/bounds.hpp"
#include "isolate/constructive.hpp"
#include "isolate/errors.hpp"
#include "isolate/families.hpp"
#include "isolate/graph_io.hpp"
#include "isolate/patterns.hpp"
#include "isolate/rng.hpp"
#include "isolate/solvers.hpp"

namespace isolate {

namespace {

// Edge bit layout for order-n masks: pairs (i, j) with i < j in
// lexicographic order, so bit_of(n, 0, 1) == 0.
int bit_of(int n, int i, int j) {
    return i * n - i * (i + 1) / 2 + (j - i - 1);
}

Graph graph_from_mask(int n, std::uint64_t mask) {
    std::vector<std::pair<int, int>> edges;
    int b = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++b)
            if (mask >> b & 1) edges.emplace_back(i, j);
    return Graph(n, edges);
}

// True when mask is minimal over all vertex relabelings.
bool mask_is_canonical(int n, std::uint64_t mask) {
    std::array<int, 8> perm{};
    std::iota(perm.begin(), perm.begin() + n, 0);
    while (std::next_permutation(perm.begin(), perm.begin() + n)) {
        std::uint64_t rel = 0;
        int b = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j, ++b)
                if (mask >> b & 1) {
                    int pi = perm[i], pj = perm[j];
                    if (pi > pj) std::swap(pi, pj);
                    rel |= std::uint64_t{1} << bit_of(n, pi, pj);
                }
        if (rel < mask) return false;
    }
    return true;
}

// Standard sequence decode; k >= 3, seq holds k-2 labels in [0, k).
Graph tree_from_pruefer(const std::vector<int> &seq, int k) {
    std::vector<int> deg(k, 1);
    for (int v : seq) ++deg[v];
    std::vector<bool> done(k, false);
    std::vector<std::pair<int, int>> edges;
    for (int v : seq) {
        int leaf = -1;
        for (int u = 0; u < k; ++u)
            if (!done[u] && deg[u] == 1) {
                leaf = u;
                break;
            }
        edges.emplace_back(leaf, v);
        done[leaf] = true;
        --deg[leaf];
        --deg[v];
    }
    int a = -1, b = -1;
    for (int u = 0; u < k; ++u)
        if (!done[u] && deg[u] == 1) (a < 0 ? a : b) = u;
    edges.emplace_back(a, b);
    return Graph(k, edges);
}

// sup over family members of gamma(member) / order(member).
Rational family_density_cap(const PatternFamily &family) {
    switch (family.tag()) {
    case FamilyTag::star:
        return Rational(1, family.k() + 2);
    case FamilyTag::clique:
        return Rational(1, family.k());
    case FamilyTag::all_cycles:
        return Rational(1, 2); // attained by the 4-cycle
    case FamilyTag::all_trees: {
        int k = family.k();
        if (k == 1 || k == 2) return Rational(1, k);
        if (k > 6) throw parameter_error("tree density cap computed only up to 6 vertices");
        Rational best(0);
        std::vector<int> seq(k - 2, 0);
        for (;;) {
            Graph t = tree_from_pruefer(seq, k);
            Rational q(exact_domination(t).value, k);
            if (best < q) best = q;
            int pos = k - 3;
            while (pos >= 0 && seq[pos] == k - 1) seq[pos--] = 0;
            if (pos < 0) break;
            ++seq[pos];
        }
        return best;
    }
    case FamilyTag::explicit_list: {
        Rational best(0);
        for (const Graph &p : family.patterns()) {
            Rational q(exact_domination(p).value, p.n());
            if (best < q) best = q;
        }
        return best;
    }
    }
    throw parameter_error("unknown family tag");
}

struct CheckOutcome {
    bool tested = false;
    bool violated = false;
    bool equality = false;
};

const std::vector<PatternFamily> &assorted_families() {
    static const std::vector<PatternFamily> fams = {
        PatternFamily::star(0),      PatternFamily::star(1),   PatternFamily::star(2),
        PatternFamily::clique(3),    PatternFamily::all_cycles(),
        PatternFamily::all_trees(4),
    };
    return fams;
}

const std::vector<PatternFamily> &partition_families() {
    static const std::vector<PatternFamily> fams = {
        PatternFamily::star(0),
        PatternFamily::star(1),
        PatternFamily::clique(3),
        PatternFamily::all_cycles(),
    };
    return fams;
}

// Removal never beats domination: iota(G, F) <= gamma(G).
CheckOutcome chk_la_dom_sum_i(const Graph &g) {
    int gamma = exact_domination(g).value;
    bool eq = false;
    for (const PatternFamily &f : assorted_families()) {
        int io = exact_isolation(g, f).value;
        if (io > gamma) return {true, true, false};
        if (io == gamma) eq = true;
    }
    return {true, false, eq};
}

// Split identity: iota(G, F) equals the best iota(G[A], F) + gamma(G[B])
// over vertex partitions A, B.
CheckOutcome chk_la_dom_sum_ii(const Graph &g) {
    int n = g.n();
    for (const PatternFamily &f : partition_families()) {
        int iota = exact_isolation(g, f).value;
        int best = -1;
        for (std::uint64_t sub = 0; sub < (std::uint64_t{1} << n); ++sub) {
            VertexSet a = VertexSet::from_word(n, sub);
            VertexSet b = a.complement();
            int cand = exact_isolation(g.induced(a), f).value +
                       exact_domination(g.induced(b)).value;
            if (best < 0 || cand < best) best = cand;
        }
        if (best != iota) return {true, true, false};
    }
    return {true, false, true};
}

// Peeled-core identity: iota(G, F) equals the best gamma(G - A) over
// vertex sets A whose induced subgraph avoids the family.
CheckOutcome chk_la_dom_sum_iii(const Graph &g) {
    int n = g.n();
    for (const PatternFamily &f : partition_families()) {
        int iota = exact_isolation(g, f).value;
        int best = -1;
        for (std::uint64_t sub = 0; sub < (std::uint64_t{1} << n); ++sub) {
            VertexSet a = VertexSet::from_word(n, sub);
            if (!is_f_free(g, a, f)) continue;
            int cand = exact_domination(g.induced(a.complement())).value;
            if (best < 0 || cand < best) best = cand;
        }
        if (best != iota) return {true, true, false};
    }
    return {true, false, true};
}

// Monotonicity in the family: a subfamily never needs more removals, and
// coarser targets sit below finer ones, giving the chain
// iota(G, {K3}) <= iota(G, {P3}) <= iota(G, {K2}).
CheckOutcome chk_la_family(const Graph &g) {
    static const PatternFamily f_k3 = PatternFamily::explicit_list({complete_graph(3)});
    static const PatternFamily f_p3 = PatternFamily::explicit_list({path_graph(3)});
    static const PatternFamily f_k2 = PatternFamily::explicit_list({path_graph(2)});
    static const PatternFamily f_k3c4 =
        PatternFamily::explicit_list({complete_graph(3), cycle_graph(4)});
    int io_k3 = exact_isolation(g, f_k3).value;
    int io_p3 = exact_isolation(g, f_p3).value;
    int io_k2 = exact_isolation(g, f_k2).value;
    if (!(io_k3 <= io_p3 && io_p3 <= io_k2)) return {true, true, false};
    if (exact_isolation(g, f_k3c4).value < io_k3) return {true, true, false};
    return {true, false, io_k3 == io_k2};
}

// Quotient bounds: iota with a single pattern H is at most
// gamma(H) * floor(n / n(H)), and iota(G, F) <= q(F) * n where q(F) is the
// worst gamma/order ratio in the family.
CheckOutcome chk_la_dom_quot(const Graph &g) {
    struct SinglePattern {
        Graph h;
        PatternFamily fam;
        int gamma_h;
    };
    static const std::vector<SinglePattern> singles = [] {
        std::vector<SinglePattern> out;
        for (Graph h : {path_graph(2), path_graph(3), complete_graph(3), cycle_graph(4)})
            out.push_back({h, PatternFamily::explicit_list({h}), exact_domination(h).value});
        return out;
    }();
    static const std::vector<std::pair<PatternFamily, Rational>> caps = [] {
        std::vector<std::pair<PatternFamily, Rational>> out;
        for (PatternFamily f : {PatternFamily::star(0), PatternFamily::star(1),
                                PatternFamily::clique(3), PatternFamily::all_cycles(),
                                PatternFamily::all_trees(4)})
            out.emplace_back(f, family_density_cap(f));
        return out;
    }();
    int n = g.n();
    bool eq = false;
    for (const SinglePattern &sp : singles) {
        int io = exact_isolation(g, sp.fam).value;
        int cap = sp.gamma_h * (n / sp.h.n());
        if (io > cap) return {true, true, false};
        if (io == cap) eq = true;
    }
    for (const auto &[fam, q] : caps) {
        Rational io(exact_isolation(g, fam).value);
        Rational cap = q * Rational(n);
        if (cap < io) return {true, true, false};
        if (io == cap) eq = true;
    }
    return {true, false, eq};
}

// Clique blowup sandwich: gamma(G) <= iota(G x K_r, F) <= the product upper
// bound, plus the double-cover chain gamma(G) <= iota(B(G)) <= gamma(B(G))
// <= 2 gamma(G).
CheckOutcome chk_thm_dom(const Graph &g) {
    struct Combo {
        int r;
        PatternFamily fam;
    };
    static const std::vector<Combo> combos = {
        {2, PatternFamily::star(0)},
        {3, PatternFamily::star(1)},
        {3, PatternFamily::clique(3)},
    };
    int gamma = exact_domination(g).value;
    bool eq = false;
    for (const Combo &c : combos) {
        Graph prod = Graph::cartesian_product(g, complete_graph(c.r));
        int io = exact_isolation(prod, c.fam).value;
        ProductBoundReport pb = product_bounds(g, c.fam);
        if (io < gamma || io > pb.upper) return {true, true, false};
        if (pb.upper > std::min(g.n(), c.r * gamma)) return {true, true, false};
        if (io == gamma) eq = true;
    }
    DoubleCoverReport dc = double_cover_bounds(g);
    if (!(gamma <= dc.iota_double && dc.iota_double <= dc.gamma_double &&
          dc.gamma_double <= 2 * gamma))
        return {true, true, false};
    if (dc.iota_double == gamma) eq = true;
    return {true, false, eq};
}

// Connected graphs other than the 5-cycle: exact isolation number is at
// most n/3 and the constructive cover stays within the same cap.
CheckOutcome chk_thm_n3(const Graph &g) {
    int n = g.n();
    if (n < 3 || !g.is_connected() || g.is_cycle_of_length(5)) return {false, false, false};
    int exact = exact_isolation(g, PatternFamily::star(0)).value;
    if (3 * exact > n) return {true, true, false};
    Certificate cert = isolating_third(g);
    if (!check_certificate(g, cert) || 3 * static_cast<int>(cert.set.count()) > n)
        return {true, true, false};
    return {true, false, 3 * exact == n};
}

// Complement pairs: iota(G) + iota(co-G) >= 1 once there are two vertices.
CheckOutcome chk_ng_basic(const Graph &g) {
    if (g.n() < 2) return {false, false, false};
    int sum = exact_isolation(g, PatternFamily::star(0)).value +
              exact_isolation(g.complement(), PatternFamily::star(0)).value;
    if (sum < 1) return {true, true, false};
    return {true, false, sum == 1};
}

// When the complement needs three removals or more, the pair sum is capped
// by the minimum degree plus one.
CheckOutcome chk_ng_iota3(const Graph &g) {
    int ib = exact_isolation(g.complement(), PatternFamily::star(0)).value;
    if (ib < 3) return {false, false, false};
    int sum = exact_isolation(g, PatternFamily::star(0)).value + ib;
    int cap = g.min_degree() + 1;
    if (sum > cap) return {true, true, false};
    return {true, false, sum == cap};
}

// Complement pair caps by minimum degree: floor((n+1)/2) at delta 0,
// floor(n/2)+1 at delta 1, 2n/5+2 at delta 2, n/3+2 at delta 3.
CheckOutcome chk_ng_delta(const Graph &g) {
    int n = g.n();
    int delta = g.min_degree();
    if (delta > 3) return {false, false, false};
    Rational cap(0);
    if (delta == 0)
        cap = Rational((n + 1) / 2);
    else if (delta == 1)
        cap = Rational(n / 2 + 1);
    else if (delta == 2)
        cap = Rational(2 * n, 5) + Rational(2);
    else
        cap = Rational(n, 3) + Rational(2);
    Rational sum(exact_isolation(g, PatternFamily::star(0)).value +
                 exact_isolation(g.complement(), PatternFamily::star(0)).value);
    if (cap < sum) return {true, true, false};
    return {true, false, sum == cap};
}

// Every applicable report row must sandwich the exact value, for k = 0, 1.
CheckOutcome chk_bound_sandwich(const Graph &g) {
    bool eq = false;
    for (int k = 0; k <= 1; ++k) {
        int exact = exact_isolation(g, PatternFamily::star(k)).value;
        BoundReport rep = bound_report(g, k, true);
        for (const BoundEntry &e : rep.entries) {
            if (!e.applicable) continue;
            if (e.exact) {
                Rational x(exact);
                if (e.upper && *e.exact < x) return {true, true, false};
                if (!e.upper && x < *e.exact) return {true, true, false};
                if (e.upper && x == *e.exact) eq = true;
            } else {
                if (e.upper && exact > e.value + 1e-9) return {true, true, false};
                if (!e.upper && exact < e.value - 1e-9) return {true, true, false};
            }
        }
    }
    return {true, false, eq};
}

struct CheckDef {
    const char *name;
    int min_n;
    int max_n; // the check's own order cap
    CheckOutcome (*fn)(const Graph &);
};

const std::vector<CheckDef> &check_table() {
    static const std::vector<CheckDef> table = {
        {"la-family", 1, 6, chk_la_family},
        {"la-dom-sum-i", 1, 7, chk_la_dom_sum_i},
        {"la-dom-sum-ii", 1, 5, chk_la_dom_sum_ii},
        {"la-dom-sum-iii", 1, 5, chk_la_dom_sum_iii},
        {"la-dom-quot", 1, 6, chk_la_dom_quot},
        {"thm-dom", 1, 5, chk_thm_dom},
        {"thm-n3", 3, 7, chk_thm_n3},
        {"ng-basic", 2, 7, chk_ng_basic},
        {"ng-iota3", 2, 7, chk_ng_iota3},
        {"ng-delta", 1, 7, chk_ng_delta},
        {"bound-sandwich", 1, 6, chk_bound_sandwich},
    };
    return table;
}

struct Acc {
    std::int64_t tested = 0;
    std::int64_t violations = 0;
    std::int64_t equality = 0;
    bool has_vio = false;
    int vio_n = 0;
    std::uint64_t vio_mask = 0;
    bool has_eq = false;
    int eq_n = 0;
    std::uint64_t eq_mask = 0;
};

void merge_into(Acc &into, const Acc &from) {
    into.tested += from.tested;
    into.violations += from.violations;
    into.equality += from.equality;
    if (from.has_vio &&
        (!into.has_vio || std::pair(from.vio_n, from.vio_mask) < std::pair(into.vio_n, into.vio_mask))) {
        into.has_vio = true;
        into.vio_n = from.vio_n;
        into.vio_mask = from.vio_mask;
    }
    if (from.has_eq &&
        (!into.has_eq || std::pair(from.eq_n, from.eq_mask) < std::pair(into.eq_n, into.eq_mask))) {
        into.has_eq = true;
        into.eq_n = from.eq_n;
        into.eq_mask = from.eq_mask;
    }
}

} // namespace

std::vector<Graph> enumerate_graphs(int n, bool connected_only, bool dedup) {
    if (n < 1 || n > 7) throw parameter_error("graph enumeration covers orders 1..7");
    int bits = n * (n - 1) / 2;
    std::vector<Graph> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << bits); ++mask) {
        if (dedup && !mask_is_canonical(n, mask)) continue;
        Graph g = graph_from_mask(n, mask);
        if (connected_only && !g.is_connected()) continue;
        out.push_back(std::move(g));
    }
    return out;
}

std::vector<std::string> sweep_check_names() {
    std::vector<std::string> names;
    for (const CheckDef &c : check_table()) names.push_back(c.name);
    return names;
}

std::vector<CheckResult> sweep_theorems(int n_max, const std::vector<std::string> &checks,
                                        bool connected, bool dedup, int jobs) {
    if (n_max < 1 || n_max > 7) throw parameter_error("sweep covers orders 1..7");
    if (jobs < 1) throw parameter_error("jobs must be at least 1");
    std::vector<const CheckDef *> active;
    if (checks.empty() || (checks.size() == 1 && checks[0] == "all")) {
        for (const CheckDef &c : check_table()) active.push_back(&c);
    } else {
        for (const std::string &name : checks) {
            const CheckDef *found = nullptr;
            for (const CheckDef &c : check_table())
                if (name == c.name) found = &c;
            if (!found) throw parameter_error("unknown check: " + name);
            active.push_back(found);
        }
    }

    std::vector<Acc> total(active.size());
    for (int n = 1; n <= n_max; ++n) {
        std::vector<const CheckDef *> here;
        std::vector<std::size_t> here_slot;
        for (std::size_t i = 0; i < active.size(); ++i)
            if (active[i]->min_n <= n && n <= active[i]->max_n) {
                here.push_back(active[i]);
                here_slot.push_back(i);
            }
        if (here.empty()) continue;
        int bits = n * (n - 1) / 2;
        std::uint64_t span = std::uint64_t{1} << bits;
        auto run_range = [&](std::uint64_t lo, std::uint64_t hi, std::vector<Acc> &acc) {
            for (std::uint64_t mask = lo; mask < hi; ++mask) {
                if (dedup && !mask_is_canonical(n, mask)) continue;
                Graph g = graph_from_mask(n, mask);
                if (connected && !g.is_connected()) continue;
                for (std::size_t c = 0; c < here.size(); ++c) {
                    CheckOutcome o = here[c]->fn(g);
                    if (!o.tested) continue;
                    Acc &a = acc[c];
                    ++a.tested;
                    if (o.violated) {
                        ++a.violations;
                        if (!a.has_vio) {
                            a.has_vio = true;
                            a.vio_n = n;
                            a.vio_mask = mask;
                        }
                    } else if (o.equality) {
                        ++a.equality;
                        if (!a.has_eq) {
                            a.has_eq = true;
                            a.eq_n = n;
                            a.eq_mask = mask;
                        }
                    }
                }
            }
        };
        int parts = jobs;
        if (std::uint64_t(parts) > span) parts = static_cast<int>(span);
        if (parts <= 1) {
            std::vector<Acc> acc(here.size());
            run_range(0, span, acc);
            for (std::size_t c = 0; c < here.size(); ++c) merge_into(total[here_slot[c]], acc[c]);
        } else {
            std::vector<std::vector<Acc>> accs(parts, std::vector<Acc>(here.size()));
            std::vector<std::thread> threads;
            for (int p = 0; p < parts; ++p) {
                std::uint64_t lo = span * p / parts;
                std::uint64_t hi = span * (p + 1) / parts;
                threads.emplace_back([&, lo, hi, p] { run_range(lo, hi, accs[p]); });
            }
            for (std::thread &t : threads) t.join();
            for (int p = 0; p < parts; ++p)
                for (std::size_t c = 0; c < here.size(); ++c)
                    merge_into(total[here_slot[c]], accs[p][c]);
        }
    }

    std::vector<CheckResult> out;
    for (std::size_t i = 0; i < active.size(); ++i) {
        CheckResult r;
        r.check = active[i]->name;
        r.graphs_tested = total[i].tested;
        r.violations = total[i].violations;
        r.equality_count = total[i].equality;
        if (total[i].has_vio)
            r.example_g6 = emit_graph6(graph_from_mask(total[i].vio_n, total[i].vio_mask));
        else if (total[i].has_eq)
            r.example_g6 = emit_graph6(graph_from_mask(total[i].eq_n, total[i].eq_mask));
        out.push_back(std::move(r));
    }
    std::sort(out.begin(), out.end(),
              [](const CheckResult &a, const CheckResult &b) { return a.check < b.check; });
    return out;
}

std::string sweep_tsv(const std::vector<CheckResult> &rows) {
    std::ostringstream os;
    os << "check\tgraphs_tested\tviolations\tequality_count\texample_g6\n";
    for (const CheckResult &r : rows)
        os << r.check << '\t' << r.graphs_tested << '\t' << r.violations << '\t'
           << r.equality_count << '\t' << r.example_g6 << '\n';
    return os.str();
}

SampleReport sample_verify(const std::string &kind, int samples, std::uint64_t seed) {
    if (samples < 1) throw parameter_error("samples must be at least 1");
    Rng rng(seed);
    SampleReport rep;
    rep.kind = kind;
    auto fail = [&](int i, const std::string &what) {
        ++rep.violations;
        if (rep.detail.empty()) rep.detail = "sample " + std::to_string(i) + ": " + what;
    };
    if (kind == "trees") {
        for (int i = 0; i < samples; ++i) {
            int n = 2 + static_cast<int>(rng.below(29));
            Graph t = random_tree(n, rng);
            ++rep.samples;
            for (int k = 0; k <= 2; ++k) {
                if (t.n() == k + 2 && t.max_degree() >= k + 1) continue; // the forbidden star itself
                Certificate cert = tree_k_isolating(t, k);
                int cap = n / (k + 3);
                if (!check_certificate(t, cert)) {
                    fail(i, "tree cover invalid at k=" + std::to_string(k));
                    continue;
                }
                if (static_cast<int>(cert.set.count()) > cap)
                    fail(i, "tree cover exceeds n/(k+3) at k=" + std::to_string(k));
                if (n <= 16) {
                    int exact = exact_isolation(t, PatternFamily::star(k)).value;
                    if (exact > cap) fail(i, "exact value exceeds n/(k+3) at k=" + std::to_string(k));
                }
            }
        }
    } else if (kind == "triangulations") {
        for (int i = 0; i < samples; ++i) {
            int n = 4 + static_cast<int>(rng.below(11));
            Graph g = random_polygon_triangulation(n, rng);
            ++rep.samples;
            int exact = exact_isolation(g, PatternFamily::star(0)).value;
            if (4 * exact > n) fail(i, "triangulation exceeds n/4");
        }
    } else if (kind == "grids") {
        for (int i = 0; i < samples; ++i) {
            GridKind kinds[] = {GridKind::grid, GridKind::cylinder, GridKind::torus};
            GridKind kd = kinds[rng.below(3)];
            int s = 3 + static_cast<int>(rng.below(4));
            int t = 3 + static_cast<int>(rng.below(4));
            ++rep.samples;
            Graph g = grid_graph(kd, s, t);
            Certificate cert = grid_isolating(kd, s, t);
            if (!check_certificate(g, cert)) {
                fail(i, "lattice cover invalid");
                continue;
            }
            if (cert.promised_bound && Rational(static_cast<long long>(cert.set.count())) != *cert.promised_bound)
                fail(i, "lattice tally mismatch");
            if (s * t <= 20) {
                int exact = exact_isolation(g, PatternFamily::star(0)).value;
                GridBounds gb = grid_printed_bounds(kd, s, t);
                if (Rational(exact) < gb.lower || Rational(gb.upper.floor()) < Rational(exact))
                    fail(i, "exact value outside printed range");
            }
        }
    } else if (kind == "clawfree") {
        for (int i = 0; i < samples; ++i) {
            int nh = 4 + static_cast<int>(rng.below(4));
            std::vector<std::pair<int, int>> hedges;
            for (int u = 0; u < nh; ++u)
                for (int v = u + 1; v < nh; ++v)
                    if (rng.coin(0.5)) hedges.emplace_back(u, v);
            if (hedges.empty()) continue;
            // line graph of the sample: one vertex per edge, adjacent when sharing an endpoint
            int m = static_cast<int>(hedges.size());
            std::vector<std::pair<int, int>> ledges;
            for (int a = 0; a < m; ++a)
                for (int b = a + 1; b < m; ++b)
                    if (hedges[a].first == hedges[b].first || hedges[a].first == hedges[b].second ||
                        hedges[a].second == hedges[b].first || hedges[a].second == hedges[b].second)
                        ledges.emplace_back(a, b);
            Graph g(m, ledges);
            ++rep.samples;
            if (!is_claw_free(g)) {
                fail(i, "line graph not claw-free");
                continue;
            }
            int exact = exact_isolation(g, PatternFamily::star(0)).value;
            for (const BoundEntry &e : bound_report(g, 0, false).entries) {
                if (!e.applicable || e.upper) continue;
                if (e.name != "claw-free-min-deg" && e.name != "claw-free-avg-deg") continue;
                if (e.exact) {
                    if (Rational(exact) < *e.exact) fail(i, e.name + " above exact value");
                } else if (exact < e.value - 1e-9) {
                    fail(i, e.name + " above exact value");
                }
            }
        }
    } else {
        throw parameter_error("unknown sample kind: " + kind +
                              " (expected trees, triangulations, grids, clawfree)");
    }
    return rep;
}

ProbeResult open_problem_probe(int delta, int n_max) {
    if (delta < 0) throw parameter_error("minimum degree must be nonnegative");
    if (n_max < delta + 1 || n_max > 7)
        throw parameter_error("probe needs delta+1 <= n_max <= 7");
    ProbeResult res;
    res.delta = delta;
    res.n_max = n_max;
    res.best.ratio = Rational(0);
    for (int n = delta + 1; n <= n_max; ++n) {
        for (const Graph &g : enumerate_graphs(n, true, true)) {
            if (g.min_degree() != delta) continue;
            int iota = exact_isolation(g, PatternFamily::star(0)).value;
            Rational ratio(iota, n);
            if (res.best.g6.empty() || res.best.ratio < ratio) {
                res.best.g6 = emit_graph6(g);
                res.best.n = n;
                res.best.iota = iota;
                res.best.ratio = ratio;
            }
        }
    }
    auto add_named = [&](const Graph &g) {
        ProbeRow row;
        row.g6 = emit_graph6(g);
        row.n = g.n();
        row.iota = exact_isolation(g, PatternFamily::star(0)).value;
        row.ratio = Rational(row.iota, row.n);
        res.named.push_back(std::move(row));
    };
    if (delta == 3) {
        add_named(complete_graph(4));
        add_named(petersen());
    } else if (delta == 4) {
        add_named(complete_graph(5));
        add_named(kr_minus_hamiltonian(7));
    }
    return res;
}

} // namespace isolate
