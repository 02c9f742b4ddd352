#include "isolate/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "isolate/errors.hpp"
#include "isolate/solvers.hpp"

namespace isolate {

namespace {

BoundEntry entry_exact(const std::string &name, bool upper, Rational v) {
    return BoundEntry{name, upper, true, "", v, v.to_double()};
}

BoundEntry entry_real(const std::string &name, bool upper, double v) {
    return BoundEntry{name, upper, true, "", std::nullopt, v};
}

BoundEntry entry_na(const std::string &name, bool upper, const std::string &reason) {
    return BoundEntry{name, upper, false, reason, std::nullopt, 0.0};
}

int min_pattern_order(const PatternFamily &f) {
    switch (f.tag()) {
    case FamilyTag::star:
        return f.k() + 2;
    case FamilyTag::clique:
        return f.k();
    case FamilyTag::all_cycles:
        return 3;
    case FamilyTag::all_trees:
        return f.k();
    case FamilyTag::explicit_list: {
        int r = 0;
        for (const Graph &p : f.patterns())
            r = (r == 0) ? p.n() : std::min(r, p.n());
        if (r == 0) throw parameter_error("empty pattern family has no minimum order");
        return r;
    }
    }
    throw parameter_error("unknown family tag");
}

} // namespace

std::string BoundEntry::value_str() const {
    if (!applicable) return "";
    if (exact) return exact->str();
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.9g", value);
    return buf;
}

BoundReport bound_report(const Graph &g, int k, bool with_exact_aux, const VertexSet *seed) {
    if (g.n() < 1) throw parameter_error("bound_report needs at least one vertex");
    if (k < 0) throw parameter_error("bound_report needs k >= 0");
    std::int64_t n = g.n();
    std::int64_t m = g.m();
    int dmax = g.max_degree();
    int dmin = g.min_degree();

    BoundReport rep;
    rep.k = k;
    auto &out = rep.entries;

    out.push_back(entry_exact("basic", true, Rational(n, k + 2)));

    if (k != 0)
        out.push_back(entry_na("third", true, "needs k = 0"));
    else if (n < 3)
        out.push_back(entry_na("third", true, "needs at least 3 vertices"));
    else if (!g.is_connected())
        out.push_back(entry_na("third", true, "graph is disconnected"));
    else if (g.is_cycle_of_length(5))
        out.push_back(entry_na("third", true, "graph is the 5-cycle"));
    else
        out.push_back(entry_exact("third", true, Rational(n, 3)));

    if (k != 0) {
        out.push_back(entry_na("components", true, "needs k = 0"));
    } else {
        bool small_comp = false, c5_comp = false;
        std::int64_t floor_sum = 0;
        for (const VertexSet &c : g.components()) {
            if (c.count() < 3) { small_comp = true; break; }
            Graph sub = g.induced(c);
            if (sub.is_cycle_of_length(5)) c5_comp = true;
            floor_sum += sub.n() / 3;
        }
        if (small_comp)
            out.push_back(entry_na("components", true, "a component has fewer than 3 vertices"));
        else
            out.push_back(entry_exact("components", true,
                                      c5_comp ? Rational(2 * n, 5) : Rational(floor_sum)));
    }

    if (k != 0)
        out.push_back(entry_na("max-deg-half", true, "needs k = 0"));
    else
        out.push_back(entry_exact("max-deg-half", true, Rational(n - dmax + 1, 2)));

    if (k >= 2) {
        out.push_back(entry_na("max-deg-third", true, "needs k <= 1"));
    } else if (dmax < 1) {
        out.push_back(entry_na("max-deg-third", true, "needs max degree >= 1"));
    } else if (k == 1) {
        out.push_back(entry_exact("max-deg-third", true, Rational(n - dmax + 2, 3)));
    } else {
        // k == 0: some max-degree vertex must leave only components on >= 3
        // vertices, none a 5-cycle
        bool usable = false;
        for (int v = 0; v < g.n() && !usable; ++v) {
            if (g.degree(v) != dmax) continue;
            VertexSet pick(g.n());
            pick.add(v);
            Graph gp = g.induced(g.remainder(pick));
            bool ok = true;
            for (const VertexSet &c : gp.components()) {
                if (c.count() < 3 || gp.induced(c).is_cycle_of_length(5)) { ok = false; break; }
            }
            usable = ok;
        }
        if (usable)
            out.push_back(entry_exact("max-deg-third", true, Rational(n - dmax + 2, 3)));
        else
            out.push_back(entry_na("max-deg-third", true,
                                   "every max-degree choice leaves a small or 5-cycle component"));
    }

    if (k != 0)
        out.push_back(entry_na("min-deg-small", true, "needs k = 0"));
    else if (dmin < 1)
        out.push_back(entry_na("min-deg-small", true, "needs min degree >= 1"));
    else if (dmin == 1)
        out.push_back(entry_exact("min-deg-small", true, Rational(n, 2)));
    else if (dmin == 2)
        out.push_back(entry_exact("min-deg-small", true, Rational(2 * n, 5)));
    else
        out.push_back(entry_exact("min-deg-small", true, Rational(n, 3)));

    if (k != 0)
        out.push_back(entry_na("random-min-deg", true, "needs k = 0"));
    else if (dmin < 1)
        out.push_back(entry_na("random-min-deg", true, "needs min degree >= 1"));
    else
        out.push_back(entry_real("random-min-deg", true,
                                 (std::log(dmin + 1.0) + 0.5) / (dmin + 1.0) * n));

    if (dmin < k + 1) {
        out.push_back(entry_na("min-deg-log", true, "needs min degree >= k+1"));
        out.push_back(entry_na("min-deg-log-proof", true, "needs min degree >= k+1"));
    } else {
        out.push_back(entry_real("min-deg-log", true,
                                 (std::log(dmin + 0.5) + 1.0) / (dmin + 1.0) * n));
        out.push_back(entry_real("min-deg-log-proof", true,
                                 (std::log(dmin + 1.0) + 1.0) / (dmin + 1.0) * n));
    }

    if (k != 0)
        out.push_back(entry_na("bipartite-log", true, "needs k = 0"));
    else if (!g.is_bipartite())
        out.push_back(entry_na("bipartite-log", true, "graph is not bipartite"));
    else if (dmin < 2)
        out.push_back(entry_na("bipartite-log", true, "needs min degree >= 2"));
    else
        out.push_back(entry_real("bipartite-log", true,
                                 (std::log(static_cast<double>(dmin)) + 1.0) / (2.0 * dmin) * n));

    if (seed) {
        if (seed->width() != g.n()) throw parameter_error("seed width differs from graph order");
        if (k != 0) {
            out.push_back(entry_na("seed-half", true, "needs k = 0"));
            out.push_back(entry_na("seed-two-fifths", true, "needs k = 0"));
            out.push_back(entry_na("seed-third", true, "needs k = 0"));
        } else {
            VertexSet covered = g.closed_neighborhood(*seed);
            std::int64_t w = (covered - *seed).count();
            std::int64_t sz = seed->count();
            Graph gp = g.induced(covered.complement());
            out.push_back(entry_exact("seed-half", true, Rational(n - w + sz, 2)));
            if (gp.n() == 0 || gp.min_degree() >= 2)
                out.push_back(entry_exact("seed-two-fifths", true, Rational(2 * n - 2 * w + 3 * sz, 5)));
            else
                out.push_back(entry_na("seed-two-fifths", true,
                                       "a vertex outside the seed's neighborhood has degree < 2 there"));
            bool third_ok = true;
            for (const VertexSet &c : gp.components())
                if (c.count() < 3 || gp.induced(c).is_cycle_of_length(5)) { third_ok = false; break; }
            if (third_ok)
                out.push_back(entry_exact("seed-third", true, Rational(n - w + 2 * sz, 3)));
            else
                out.push_back(entry_na("seed-third", true,
                                       "a small or 5-cycle component survives outside the seed's neighborhood"));
        }
    }

    if (!with_exact_aux)
        out.push_back(entry_na("square-domination", false, "needs exact auxiliary solves"));
    else if (dmin < k + 1)
        out.push_back(entry_na("square-domination", false, "needs min degree >= k+1"));
    else
        out.push_back(entry_exact("square-domination", false,
                                  Rational(exact_domination(g.square()).value)));

    if (!with_exact_aux)
        out.push_back(entry_na("k-independence", false, "needs exact auxiliary solves"));
    else if (dmax < k + 1)
        out.push_back(entry_na("k-independence", false, "needs max degree >= k+1"));
    else {
        std::int64_t alpha_k = exact_k_independence(g, k).value;
        out.push_back(entry_exact("k-independence", false, Rational(n + 1 - alpha_k, dmax + 1)));
    }

    if (k != 0)
        out.push_back(entry_na("average-degree", false, "needs k = 0"));
    else if (dmax < 1)
        out.push_back(entry_na("average-degree", false, "needs max degree >= 1"));
    else
        out.push_back(entry_exact("average-degree", false,
                                  Rational(m, static_cast<std::int64_t>(dmax) * dmax)));

    bool clawfree = is_claw_free(g);
    if (k != 0) {
        out.push_back(entry_na("claw-free-min-deg", false, "needs k = 0"));
        out.push_back(entry_na("claw-free-avg-deg", false, "needs k = 0"));
    } else if (!clawfree) {
        out.push_back(entry_na("claw-free-min-deg", false, "graph is not claw-free"));
        out.push_back(entry_na("claw-free-avg-deg", false, "graph is not claw-free"));
    } else if (dmax < 1) {
        out.push_back(entry_na("claw-free-min-deg", false, "needs max degree >= 1"));
        out.push_back(entry_na("claw-free-avg-deg", false, "needs max degree >= 1"));
    } else {
        out.push_back(entry_exact("claw-free-min-deg", false,
                                  Rational(static_cast<std::int64_t>(dmin) * (n + 1) + 2,
                                           static_cast<std::int64_t>(dmin + 2) * (dmax + 1))));
        out.push_back(entry_exact("claw-free-avg-deg", false,
                                  Rational(4 * m, 3LL * dmax * dmax + 2 * dmax)));
    }

    return rep;
}

ProductBoundReport product_bounds(const Graph &g, const PatternFamily &family) {
    ProductBoundReport rep{};
    rep.r = min_pattern_order(family);
    rep.gamma = exact_domination(g).value;
    rep.iota_f = exact_isolation(g, family).value;
    rep.alpha_f = max_f_free_subset(g, family).value;
    rep.upper = std::min({g.n(), (rep.r - 1) * rep.gamma + rep.iota_f,
                          rep.r * rep.iota_f + rep.alpha_f});
    return rep;
}

DoubleCoverReport double_cover_bounds(const Graph &g) {
    DoubleCoverReport rep{};
    rep.gamma = exact_domination(g).value;
    Graph b = g.bipartite_double();
    rep.iota_double = exact_isolation(b, PatternFamily::star(0)).value;
    rep.gamma_double = exact_domination(b).value;
    return rep;
}

RegularGapNote regular_gap_note(const Graph &g) {
    int r = 0;
    if (!g.is_regular(&r)) throw precondition_error("regular_gap_note needs a regular graph");
    if (g.n() < 1) throw parameter_error("regular_gap_note needs at least one vertex");
    int gamma = exact_domination(g).value;
    int iota = exact_isolation(g, PatternFamily::star(0)).value;
    return RegularGapNote{r, Rational(gamma, g.n()), Rational(iota, g.n())};
}

} // namespace isolate
