#pragma once

#include <optional>
#include <string>
#include <vector>

#include "isolate/graph.hpp"
#include "isolate/rational.hpp"

namespace isolate {

enum class FamilyTag { star, clique, all_cycles, all_trees, explicit_list };

// Forbidden family F.  star(k) forbids K_{1,k+1} (k = 0 forbids any edge),
// clique(k) forbids K_k, all_cycles forbids every cycle, all_trees(k) forbids
// every tree on k vertices, explicit_list forbids each listed pattern.
// Explicit lists are normalized at construction: a pattern that contains
// another member as a subgraph is redundant and dropped.
class PatternFamily {
  public:
    static PatternFamily star(int k);
    static PatternFamily clique(int k);
    static PatternFamily all_cycles();
    static PatternFamily all_trees(int k);
    static PatternFamily explicit_list(std::vector<Graph> patterns);

    FamilyTag tag() const { return tag_; }
    int k() const { return k_; }
    const std::vector<Graph> &patterns() const { return patterns_; }
    std::string name() const;

  private:
    PatternFamily(FamilyTag tag, int k) : tag_(tag), k_(k) {}
    FamilyTag tag_;
    int k_;
    std::vector<Graph> patterns_;
};

// "star:0", "clique:3", "cycles", "trees:4", "file:a.el,b.el".
PatternFamily parse_family_spec(const std::string &spec);

// True iff g[region] contains no member of family as a (not necessarily
// induced) subgraph.
bool is_f_free(const Graph &g, const VertexSet &region, const PatternFamily &family);

// True iff pattern maps injectively into region preserving edges.
bool contains_subgraph(const Graph &host, const VertexSet &region, const Graph &pattern);

// One embedding of pattern into host[region]: result[p] is the host vertex
// carrying pattern vertex p.  Empty when none exists.  Deterministic.
std::optional<std::vector<int>> find_subgraph(const Graph &host, const VertexSet &region, const Graph &pattern);

// No induced K_{1,3}: induced containment, unlike is_f_free.
bool is_claw_free(const Graph &g);

struct Certificate {
    VertexSet set;
    PatternFamily family;
    std::string producer;
    // Absent for algorithms whose size guarantee holds only in expectation.
    std::optional<Rational> promised_bound;
};

// Valid iff the remainder is F-free and the promised bound, when present,
// covers the set size.
bool check_certificate(const Graph &g, const Certificate &cert);

} // namespace isolate
