#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "isolate/graph.hpp"
#include "isolate/rational.hpp"

namespace isolate {

// All labeled graphs on n vertices, n <= 7, smallest edge mask first.
// connected_only filters to connected graphs; dedup keeps a graph only when
// its edge mask is minimal over all vertex relabelings, i.e. one canonical
// representative per isomorphism class.
std::vector<Graph> enumerate_graphs(int n, bool connected_only, bool dedup);

struct CheckResult {
    std::string check;
    std::int64_t graphs_tested = 0;
    std::int64_t violations = 0;
    std::int64_t equality_count = 0;
    std::string example_g6; // first violating graph, else first equality case
};

// Names sweep_theorems understands, in report order.
std::vector<std::string> sweep_check_names();

// Per-graph theorem checks over every labeled (or canonical, with dedup)
// graph of orders 1..n_max; each check may cap its own order below n_max.
// Violations accumulate and never abort the sweep.  jobs > 1 splits each
// order's edge-mask range across threads; the merged result is identical for
// every split.  checks empty or {"all"} runs everything.
std::vector<CheckResult> sweep_theorems(int n_max, const std::vector<std::string> &checks,
                                        bool connected, bool dedup, int jobs);

// TSV table: check, graphs_tested, violations, equality_count, example_g6.
std::string sweep_tsv(const std::vector<CheckResult> &rows);

struct SampleReport {
    std::string kind;
    int samples = 0;
    int violations = 0;
    std::string detail; // first violation, empty when clean
};

// Seeded spot checks on structured instances.  Kinds: "trees" (random trees
// vs the subtree-peeling bound), "triangulations" (random maximal outerplanar
// vs n/4), "grids" (lattice constructions vs their tallies and the closed
// forms), "clawfree" (random line graphs vs the claw-free lower bounds).
SampleReport sample_verify(const std::string &kind, int samples, std::uint64_t seed);

struct ProbeRow {
    std::string g6;
    int n = 0;
    int iota = 0;
    Rational ratio; // iota / n
};

struct ProbeResult {
    int delta = 0;
    int n_max = 0;
    ProbeRow best;               // maximum iota/n over the enumerated range
    std::vector<ProbeRow> named; // hand-picked reference graphs
};

// Data-only scan for the extremal iota/n ratio over connected graphs with
// the given minimum degree, orders delta+1 .. n_max (n_max <= 7).
ProbeResult open_problem_probe(int delta, int n_max);

} // namespace isolate
