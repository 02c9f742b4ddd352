#pragma once

#include <optional>
#include <string>
#include <vector>

#include "isolate/graph.hpp"
#include "isolate/patterns.hpp"
#include "isolate/rational.hpp"

namespace isolate {

struct BoundEntry {
    std::string name;
    bool upper;                    // true: bounds iota_k from above, false: from below
    bool applicable;
    std::string reason;            // why the entry does not apply; empty otherwise
    std::optional<Rational> exact; // closed rational form when the bound has one
    double value;                  // numeric bound; 0 when inapplicable

    // "7/3" for rational entries, fixed-precision decimal for log forms.
    std::string value_str() const;
};

struct BoundReport {
    int k;
    std::vector<BoundEntry> entries;
};

// All known bounds on iota_k(g) in one report.  Entries whose preconditions
// fail stay listed with applicable=false and a reason.  with_exact_aux
// enables the two lower bounds that need exact auxiliary solves (square
// domination, k-independence); pass a seed to add the three seed-extension
// upper bounds.  Log-form entries are floating point; consumers should allow
// 1e-9 slack when comparing them.
BoundReport bound_report(const Graph &g, int k, bool with_exact_aux, const VertexSet *seed = nullptr);

struct ProductBoundReport {
    int r;       // smallest pattern order in the family
    int gamma;   // domination number of g
    int iota_f;  // exact isolation number of g for the family
    int alpha_f; // largest induced-F-free subset size
    int upper;   // min{n, (r-1)*gamma + iota_f, r*iota_f + alpha_f}
};

// Ingredients bounding the family-isolation number of the product of g with
// a complete graph on r vertices.  Exact solves; small graphs only.
ProductBoundReport product_bounds(const Graph &g, const PatternFamily &family);

struct DoubleCoverReport {
    int gamma;        // domination number of g
    int iota_double;  // isolation number of the matched bipartite double
    int gamma_double; // domination number of the matched bipartite double
};

// Chain gamma <= iota_double <= gamma_double <= 2*gamma.  Exact solves.
DoubleCoverReport double_cover_bounds(const Graph &g);

struct RegularGapNote {
    int degree;
    Rational domination_share; // gamma(g) / n
    Rational isolation_share;  // iota(g) / n
};

// Per-order shares for a regular graph, for eyeballing the gap between
// domination and isolation.  Exact solves; informational only.
RegularGapNote regular_gap_note(const Graph &g);

} // namespace isolate
