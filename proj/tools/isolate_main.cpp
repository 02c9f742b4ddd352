// Command-line front end: exact solvers, constructive covers, bound tables,
// generators, exhaustive sweeps, extremal probes, certificate checking.
// Exit codes: 0 success, 1 reported violation (sweep --strict, invalid
// certificate), 2 usage or input errors.

#include <cctype>
#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "isolate/bounds.hpp"
#include "isolate/constructive.hpp"
#include "isolate/errors.hpp"
#include "isolate/families.hpp"
#include "isolate/graph.hpp"
#include "isolate/graph_io.hpp"
#include "isolate/patterns.hpp"
#include "isolate/rng.hpp"
#include "isolate/solvers.hpp"
#include "isolate/verify.hpp"

namespace {

using namespace isolate;

long long to_int(const std::string &tok, const std::string &what) {
    try {
        std::size_t pos = 0;
        long long v = std::stoll(tok, &pos);
        if (pos != tok.size()) throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception &) {
        throw parameter_error(what + " must be an integer, got '" + tok + "'");
    }
}

std::vector<std::string> split(const std::string &text, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : text) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

VertexSet parse_vertex_list(const std::string &text, int n, const std::string &what) {
    VertexSet s(n);
    if (text.empty()) return s;
    for (const std::string &tok : split(text, ',')) {
        if (tok.empty()) throw parameter_error(what + " has an empty entry: '" + text + "'");
        s.add(static_cast<int>(to_int(tok, what + " entry")));
    }
    return s;
}

Rational parse_rational(const std::string &text) {
    auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(to_int(text, "bound"));
    return Rational(to_int(text.substr(0, slash), "bound numerator"),
                    to_int(text.substr(slash + 1), "bound denominator"));
}

GridKind parse_grid_kind(const std::string &kind) {
    if (kind == "grid") return GridKind::grid;
    if (kind == "cylinder") return GridKind::cylinder;
    if (kind == "torus") return GridKind::torus;
    throw parameter_error("unknown lattice kind '" + kind + "' (grid, cylinder, torus)");
}

void emit_output(const std::string &text, const std::string &out_path) {
    if (out_path.empty())
        std::cout << text;
    else
        write_text_file(out_path, text);
}

struct GenerateArgs {
    std::string family;
    std::vector<std::string> params;
    bool have_seed = false;
    std::uint64_t seed = 0;
};

Graph make_generated(const GenerateArgs &a) {
    auto arity = [&](std::size_t lo, std::size_t hi, const std::string &usage) {
        if (a.params.size() < lo || a.params.size() > hi)
            throw parameter_error("usage: generate " + a.family + " " + usage);
    };
    auto p_int = [&](std::size_t i, const std::string &what) {
        return static_cast<int>(to_int(a.params[i], what));
    };
    auto need_seed = [&]() -> Rng {
        if (!a.have_seed) throw parameter_error("generate " + a.family + " requires --seed");
        return Rng(a.seed);
    };
    const std::string &f = a.family;
    if (f == "path") {
        arity(1, 1, "<n>");
        return path_graph(p_int(0, "n"));
    }
    if (f == "cycle") {
        arity(1, 1, "<n>");
        return cycle_graph(p_int(0, "n"));
    }
    if (f == "complete") {
        arity(1, 1, "<n>");
        return complete_graph(p_int(0, "n"));
    }
    if (f == "empty") {
        arity(1, 1, "<n>");
        return empty_graph(p_int(0, "n"));
    }
    if (f == "complete-bipartite") {
        arity(2, 2, "<p> <q>");
        return complete_bipartite(p_int(0, "p"), p_int(1, "q"));
    }
    if (f == "star") {
        arity(1, 1, "<leaves>");
        return star_graph(p_int(0, "leaves"));
    }
    if (f == "petersen") {
        arity(0, 0, "");
        return petersen();
    }
    if (f == "hypercube") {
        arity(1, 1, "<d>");
        return hypercube(p_int(0, "d"));
    }
    if (f == "tree") {
        arity(1, 1, "<n> --seed S");
        Rng rng = need_seed();
        return random_tree(p_int(0, "n"), rng);
    }
    if (f == "regular") {
        arity(2, 2, "<n> <degree> --seed S");
        Rng rng = need_seed();
        return random_regular(p_int(0, "n"), p_int(1, "degree"), rng);
    }
    if (f == "corona") {
        arity(2, 2, "<one-edge|two-edges> <base-file>");
        CoronaMode mode;
        if (a.params[0] == "one-edge")
            mode = CoronaMode::one_edge;
        else if (a.params[0] == "two-edges")
            mode = CoronaMode::two_edges;
        else
            throw parameter_error("corona mode must be one-edge or two-edges");
        return corona_k2(load_graph_file(a.params[1]), mode);
    }
    if (f == "frst") {
        arity(3, 3, "<r> <s> <t>");
        return f_rst(p_int(0, "r"), p_int(1, "s"), p_int(2, "t"));
    }
    if (f == "kr-minus-ham") {
        arity(1, 1, "<r>");
        return kr_minus_hamiltonian(p_int(0, "r"));
    }
    if (f == "compose") {
        arity(4, 4, "<h-file> <hook> <gstar-file> <delta1|delta-ge2>");
        ComposeMode mode;
        if (a.params[3] == "delta1")
            mode = ComposeMode::delta1;
        else if (a.params[3] == "delta-ge2")
            mode = ComposeMode::delta_ge2;
        else
            throw parameter_error("compose mode must be delta1 or delta-ge2");
        return compose_general(load_graph_file(a.params[0]), p_int(1, "hook"),
                               load_graph_file(a.params[2]), mode);
    }
    if (f == "path-of-stars") {
        arity(2, 2, "<t> <k>");
        return path_of_stars(p_int(0, "t"), p_int(1, "k"));
    }
    if (f == "caterpillar") {
        arity(2, 2, "<t> <r>");
        return equal_degree_caterpillar(p_int(0, "t"), p_int(1, "r"));
    }
    if (f == "fan") {
        arity(1, 1, "<n>");
        return fan_triangulation(p_int(0, "n"));
    }
    if (f == "polygon") {
        arity(1, 1, "<n> --seed S");
        Rng rng = need_seed();
        return random_polygon_triangulation(p_int(0, "n"), rng);
    }
    if (f == "outerplanar") {
        arity(1, 2, "<p> [base-file]");
        if (a.params.size() == 2) {
            Graph base = load_graph_file(a.params[1]);
            return outerplanar_sharp(p_int(0, "p"), &base);
        }
        return outerplanar_sharp(p_int(0, "p"));
    }
    if (f == "lb-bipartite") {
        arity(2, 2, "<t> <delta>");
        return lb_equality_bipartite(p_int(0, "t"), p_int(1, "delta"));
    }
    if (f == "star-sharp") {
        arity(2, 2, "<delta> <k>");
        return star_lower_sharp(p_int(0, "delta"), p_int(1, "k"));
    }
    if (f == "grid") {
        arity(3, 3, "<grid|cylinder|torus> <s> <t>");
        return grid_graph(parse_grid_kind(a.params[0]), p_int(1, "s"), p_int(2, "t"));
    }
    throw parameter_error(
        "unknown family '" + f +
        "' (path, cycle, complete, empty, complete-bipartite, star, petersen, hypercube, "
        "tree, regular, corona, frst, kr-minus-ham, compose, path-of-stars, caterpillar, "
        "fan, polygon, outerplanar, lb-bipartite, star-sharp, grid)");
}

std::string certificate_text(const Graph &g, const Certificate &cert) {
    std::ostringstream os;
    os << "size " << cert.set.count() << "\n";
    os << "set " << cert.set.str() << "\n";
    os << "promised " << (cert.promised_bound ? cert.promised_bound->str() : "none") << "\n";
    os << "valid " << (check_certificate(g, cert) ? "yes" : "no") << "\n";
    return os.str();
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"F-isolation toolkit: exact solvers, constructive covers, bounds, sweeps"};
    app.require_subcommand(1);
    app.set_config("--config", "", "key=value file mirroring the flags; flags win");

    // compute
    auto *cmd_compute = app.add_subcommand("compute", "exact isolation number with witness");
    std::string c_family, c_graph, c_out;
    bool c_exact = false;
    cmd_compute->add_option("--family", c_family, "family spec (star:K, clique:K, cycles, trees:K, file:...)")->required();
    cmd_compute->add_option("--graph", c_graph, "input graph file (.el or .g6)")->required();
    cmd_compute->add_flag("--exact", c_exact, "use the exact solver (the default; accepted for scripts)");
    cmd_compute->add_option("--out", c_out, "write output here instead of stdout");

    // approx
    auto *cmd_approx = app.add_subcommand("approx", "constructive isolating sets with certificates");
    std::string a_algo, a_graph, a_kind = "grid", a_seed_set, a_mode = "half", a_pattern, a_pattern_dom, a_out;
    int a_k = 0, a_r = 0, a_s = 0, a_t = 0;
    std::uint64_t a_seed = 0;
    bool a_bipartite = false;
    cmd_approx->add_option("--algo", a_algo,
                           "third, components, greedy, random, tree, equal-degree, grid, seed-set, partition")
        ->required();
    cmd_approx->add_option("--graph", a_graph, "input graph file (.el or .g6)");
    cmd_approx->add_option("--k", a_k, "isolation order k");
    cmd_approx->add_option("--r", a_r, "inner degree for equal-degree");
    auto *a_seed_opt = cmd_approx->add_option("--seed", a_seed, "random seed (required for random)");
    cmd_approx->add_flag("--bipartite", a_bipartite, "bipartite variant of random");
    cmd_approx->add_option("--kind", a_kind, "lattice kind: grid, cylinder, torus");
    cmd_approx->add_option("--s", a_s, "lattice rows");
    cmd_approx->add_option("--t", a_t, "lattice columns");
    cmd_approx->add_option("--seed-set", a_seed_set, "comma-separated seed vertices");
    cmd_approx->add_option("--mode", a_mode, "seed-set mode: half, two-fifths, third");
    cmd_approx->add_option("--pattern", a_pattern, "pattern graph file for greedy");
    cmd_approx->add_option("--pattern-dominating", a_pattern_dom, "dominating set of the pattern, comma-separated");
    cmd_approx->add_option("--out", a_out, "write output here instead of stdout");

    // bounds
    auto *cmd_bounds = app.add_subcommand("bounds", "closed-form bound table for one graph");
    std::string b_graph, b_seed_set, b_out;
    int b_k = 0;
    bool b_exact_aux = false;
    cmd_bounds->add_option("--graph", b_graph, "input graph file (.el or .g6)")->required();
    cmd_bounds->add_option("--k", b_k, "isolation order k");
    cmd_bounds->add_flag("--exact-aux", b_exact_aux, "enable lower bounds needing exact auxiliary solves");
    cmd_bounds->add_option("--seed-set", b_seed_set, "seed vertices for the seed-extension bounds");
    cmd_bounds->add_option("--out", b_out, "write output here instead of stdout");

    // generate
    auto *cmd_generate = app.add_subcommand("generate", "emit a named graph");
    GenerateArgs g_args;
    std::string g_out;
    bool g_g6 = false;
    cmd_generate->add_option("family", g_args.family, "family name (see README)")->required();
    cmd_generate->add_option("params", g_args.params, "family parameters");
    auto *g_seed_opt = cmd_generate->add_option("--seed", g_args.seed, "random seed for tree, regular, polygon");
    cmd_generate->add_flag("--g6", g_g6, "emit graph6 instead of an edge list");
    cmd_generate->add_option("--out", g_out, "write output here instead of stdout");

    // sweep
    auto *cmd_sweep = app.add_subcommand("sweep", "exhaustive theorem checks on small graphs");
    int s_n = 0, s_jobs = 1;
    bool s_connected = false, s_dedup = false, s_strict = false;
    std::string s_checks = "all", s_out;
    cmd_sweep->add_option("--n", s_n, "maximum order (1..7)")->required();
    cmd_sweep->add_flag("--connected", s_connected, "restrict the universe to connected graphs");
    cmd_sweep->add_flag("--dedup", s_dedup, "one canonical representative per isomorphism class");
    cmd_sweep->add_option("--checks", s_checks, "all or a comma-separated check list");
    cmd_sweep->add_option("--jobs", s_jobs, "worker threads");
    cmd_sweep->add_option("--out", s_out, "write the TSV here instead of stdout");
    cmd_sweep->add_flag("--strict", s_strict, "exit 1 when any check reports a violation");

    // probe
    auto *cmd_probe = app.add_subcommand("probe", "extremal iota/n scan at fixed minimum degree");
    int p_delta = 0, p_n = 7;
    std::string p_out;
    cmd_probe->add_option("--delta", p_delta, "minimum degree (3 or 4)")->required();
    cmd_probe->add_option("--n", p_n, "maximum order (<= 7)");
    cmd_probe->add_option("--out", p_out, "write output here instead of stdout");

    // check-cert
    auto *cmd_check = app.add_subcommand("check-cert", "validate an isolating set certificate");
    std::string k_graph, k_family, k_set, k_promised, k_out;
    cmd_check->add_option("--graph", k_graph, "input graph file (.el or .g6)")->required();
    cmd_check->add_option("--family", k_family, "family spec")->required();
    cmd_check->add_option("--set", k_set, "comma-separated vertices")->required();
    cmd_check->add_option("--promised", k_promised, "claimed size bound, integer or p/q");
    cmd_check->add_option("--out", k_out, "write output here instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (cmd_compute->parsed()) {
            Graph g = load_graph_file(c_graph);
            ExactResult res = exact_isolation(g, parse_family_spec(c_family));
            std::ostringstream os;
            os << res.value << " " << res.certificate.set.str() << "\n";
            emit_output(os.str(), c_out);
            return 0;
        }
        if (cmd_approx->parsed()) {
            auto need_graph = [&]() {
                if (a_graph.empty()) throw parameter_error("approx --algo " + a_algo + " requires --graph");
                return load_graph_file(a_graph);
            };
            std::optional<Graph> g;
            std::optional<Certificate> cert;
            if (a_algo == "third") {
                g = need_graph();
                cert = isolating_third(*g);
            } else if (a_algo == "components") {
                g = need_graph();
                cert = isolating_components(*g);
            } else if (a_algo == "greedy") {
                g = need_graph();
                if (a_pattern.empty()) throw parameter_error("approx --algo greedy requires --pattern");
                Graph h = load_graph_file(a_pattern);
                cert = greedy_pattern_removal(*g, h, parse_vertex_list(a_pattern_dom, h.n(), "--pattern-dominating"));
            } else if (a_algo == "random") {
                g = need_graph();
                if (a_seed_opt->count() == 0) throw parameter_error("approx --algo random requires --seed");
                Rng rng(a_seed);
                cert = a_bipartite ? randomized_bipartite_isolating(*g, rng) : randomized_isolating(*g, rng);
            } else if (a_algo == "tree") {
                g = need_graph();
                cert = tree_k_isolating(*g, a_k);
            } else if (a_algo == "equal-degree") {
                g = need_graph();
                cert = equal_degree_tree_isolating(*g, a_k, a_r);
            } else if (a_algo == "grid") {
                GridKind kind = parse_grid_kind(a_kind);
                g = grid_graph(kind, a_s, a_t);
                cert = grid_isolating(kind, a_s, a_t);
            } else if (a_algo == "seed-set") {
                g = need_graph();
                SeedMode mode;
                if (a_mode == "half")
                    mode = SeedMode::half;
                else if (a_mode == "two-fifths")
                    mode = SeedMode::two_fifths;
                else if (a_mode == "third")
                    mode = SeedMode::third;
                else
                    throw parameter_error("unknown seed mode '" + a_mode + "' (half, two-fifths, third)");
                cert = isolating_with_seed_set(*g, parse_vertex_list(a_seed_set, g->n(), "--seed-set"), mode);
            } else if (a_algo == "partition") {
                g = need_graph();
                cert = one_isolation_via_partition(*g);
            } else {
                throw parameter_error("unknown algorithm '" + a_algo +
                                      "' (third, components, greedy, random, tree, equal-degree, grid, "
                                      "seed-set, partition)");
            }
            emit_output(certificate_text(*g, *cert), a_out);
            return 0;
        }
        if (cmd_bounds->parsed()) {
            Graph g = load_graph_file(b_graph);
            std::optional<VertexSet> seed;
            if (!b_seed_set.empty()) seed = parse_vertex_list(b_seed_set, g.n(), "--seed-set");
            BoundReport rep = bound_report(g, b_k, b_exact_aux, seed ? &*seed : nullptr);
            std::ostringstream os;
            for (const BoundEntry &e : rep.entries)
                os << e.name << ',' << (e.upper ? "upper" : "lower") << ','
                   << (e.applicable ? e.value_str() : "") << ',' << (e.applicable ? "yes" : "no")
                   << ',' << e.reason << "\n";
            emit_output(os.str(), b_out);
            return 0;
        }
        if (cmd_generate->parsed()) {
            g_args.have_seed = g_seed_opt->count() > 0;
            Graph g = make_generated(g_args);
            emit_output(g_g6 ? emit_graph6(g) + "\n" : emit_edge_list(g), g_out);
            return 0;
        }
        if (cmd_sweep->parsed()) {
            std::vector<std::string> checks;
            for (const std::string &tok : split(s_checks, ','))
                if (!tok.empty()) checks.push_back(tok);
            std::vector<CheckResult> rows = sweep_theorems(s_n, checks, s_connected, s_dedup, s_jobs);
            emit_output(sweep_tsv(rows), s_out);
            if (s_strict)
                for (const CheckResult &r : rows)
                    if (r.violations > 0) return 1;
            return 0;
        }
        if (cmd_probe->parsed()) {
            if (p_delta != 3 && p_delta != 4) throw parameter_error("probe covers --delta 3 or 4");
            ProbeResult res = open_problem_probe(p_delta, p_n);
            std::ostringstream os;
            os << "delta " << res.delta << " n_max " << res.n_max << "\n";
            os << "best " << res.best.g6 << " n " << res.best.n << " iota " << res.best.iota
               << " ratio " << res.best.ratio.str() << "\n";
            for (const ProbeRow &row : res.named)
                os << "named " << row.g6 << " n " << row.n << " iota " << row.iota << " ratio "
                   << row.ratio.str() << "\n";
            emit_output(os.str(), p_out);
            return 0;
        }
        if (cmd_check->parsed()) {
            Graph g = load_graph_file(k_graph);
            Certificate cert{parse_vertex_list(k_set, g.n(), "--set"), parse_family_spec(k_family),
                             "cli", std::nullopt};
            if (!k_promised.empty()) cert.promised_bound = parse_rational(k_promised);
            bool ok = check_certificate(g, cert);
            emit_output(std::string("valid ") + (ok ? "yes" : "no") + "\n", k_out);
            return ok ? 0 : 1;
        }
    } catch (const error &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
