#include "isolate/solvers.hpp"

#include <algorithm>
#include <bit>

#include "isolate/errors.hpp"

namespace isolate {

namespace {

constexpr int kInf = 1 << 28;

// k-clique search keeping the witness stack.
bool clique_witness(const Graph &g, VertexSet candidates, int need, std::vector<int> &stack) {
    if (need == 0) return true;
    if (candidates.count() < need) return false;
    for (int v = candidates.first(); v != -1; v = candidates.next_after(v)) {
        stack.push_back(v);
        if (clique_witness(g, candidates & g.neighbors(v), need - 1, stack)) return true;
        stack.pop_back();
        candidates.remove(v);
        if (candidates.count() < need) return false;
    }
    return false;
}

// vertices of one cycle inside g[region], if any
std::optional<VertexSet> cycle_witness(const Graph &g, const VertexSet &region) {
    std::vector<int> parent(g.n(), -2);
    for (int s : region) {
        if (parent[s] != -2) continue;
        parent[s] = -1;
        std::vector<int> order{s};
        for (std::size_t head = 0; head < order.size(); ++head) {
            int u = order[head];
            VertexSet nbrs = g.neighbors(u) & region;
            for (int v : nbrs) {
                if (v == parent[u]) continue;
                if (parent[v] == -2) {
                    parent[v] = u;
                    order.push_back(v);
                    continue;
                }
                // cross edge closes a cycle through the two root paths
                VertexSet on_u(g.n()), cyc(g.n());
                for (int x = u; x != -1; x = parent[x]) on_u.add(x);
                int meet = v;
                while (!on_u.contains(meet)) {
                    cyc.add(meet);
                    meet = parent[meet];
                }
                for (int x = u; x != meet; x = parent[x]) cyc.add(x);
                cyc.add(meet);
                cyc.add(u);
                cyc.add(v);
                return cyc;
            }
        }
    }
    return std::nullopt;
}

// matcher mirroring contains_subgraph, returning the image set
std::optional<VertexSet> subgraph_witness(const Graph &host, const VertexSet &region, const Graph &pattern) {
    struct State {
        const Graph &host;
        const VertexSet &region;
        const Graph &pattern;
        std::vector<int> order;
        std::vector<int> image;
        VertexSet used;
        bool extend(std::size_t depth) {
            if (depth == order.size()) return true;
            int pv = order[depth];
            VertexSet cand = region - used;
            for (std::size_t d = 0; d < depth; ++d)
                if (pattern.has_edge(order[d], pv)) cand &= host.neighbors(image[d]);
            int need = pattern.degree(pv);
            for (int hv : cand) {
                if ((host.neighbors(hv) & region).count() < need) continue;
                image[depth] = hv;
                used.add(hv);
                if (extend(depth + 1)) return true;
                used.remove(hv);
            }
            return false;
        }
    };
    if (pattern.n() > region.count()) return std::nullopt;
    State st{host, region, pattern, {}, std::vector<int>(pattern.n(), -1), VertexSet(host.n())};
    VertexSet placed(pattern.n());
    std::vector<int> remaining(pattern.n());
    for (int i = 0; i < pattern.n(); ++i) remaining[i] = i;
    while (!remaining.empty()) {
        auto score = [&](int v) { return (pattern.neighbors(v) & placed).count() * 100 + pattern.degree(v); };
        auto best = remaining.begin();
        for (auto it = remaining.begin(); it != remaining.end(); ++it)
            if (score(*it) > score(*best)) best = it;
        st.order.push_back(*best);
        placed.add(*best);
        remaining.erase(best);
    }
    if (!st.extend(0)) return std::nullopt;
    VertexSet out(host.n());
    for (int hv : st.image) out.add(hv);
    return out;
}

// enumerates r-subsets of 0..n-1 in ascending-integer order for any n,
// calling test(set); returns the first accepted set
template <typename TestFn>
std::optional<VertexSet> first_subset_accepted(int n, int r, TestFn test) {
    if (r > n) return std::nullopt;
    std::vector<int> pos(r);
    for (int i = 0; i < r; ++i) pos[i] = i;
    while (true) {
        VertexSet s(n);
        for (int p : pos) s.add(p);
        if (test(s)) return s;
        int i = 0;
        while (i < r && pos[i] + 1 == (i + 1 < r ? pos[i + 1] : n)) ++i;
        if (i == r) return std::nullopt;
        ++pos[i];
        for (int j = 0; j < i; ++j) pos[j] = j;
    }
}

bool remainder_star_free(const std::vector<std::uint64_t> &adj, std::uint64_t rem, int k) {
    for (std::uint64_t bits = rem; bits;) {
        int v = std::countr_zero(bits);
        bits &= bits - 1;
        if (std::popcount(adj[v] & rem) > k) return false;
    }
    return true;
}

std::optional<ExactResult> isolation_search(const Graph &g, const PatternFamily &family, int cap) {
    int n = g.n();
    if (is_f_free(g, g.vertices(), family))
        return ExactResult{0, Certificate{VertexSet(n), family, "exact", Rational(0)}};
    if (cap < 1) return std::nullopt;
    cap = std::min(cap, n);
    // every isolating set meets the closed neighborhood of a fixed violating
    // occurrence, so subsets missing it are skipped
    VertexSet cover = g.closed_neighborhood(*find_violation(g, g.vertices(), family));

    if (n <= 63) {
        std::vector<std::uint64_t> adj(n), closed(n);
        for (int v = 0; v < n; ++v) {
            adj[v] = g.neighbors(v).word0();
            closed[v] = adj[v] | (std::uint64_t(1) << v);
        }
        std::uint64_t full = (std::uint64_t(1) << n) - 1;
        std::uint64_t coverm = cover.word0();
        bool star = family.tag() == FamilyTag::star;
        int k = family.k();
        for (int r = 1; r <= cap; ++r) {
            std::uint64_t s = (std::uint64_t(1) << r) - 1;
            while (s <= full) {
                if (s & coverm) {
                    std::uint64_t dom = s;
                    for (std::uint64_t bits = s; bits;) {
                        int v = std::countr_zero(bits);
                        bits &= bits - 1;
                        dom |= closed[v];
                    }
                    std::uint64_t rem = full & ~dom;
                    bool free = star ? remainder_star_free(adj, rem, k)
                                     : is_f_free(g, VertexSet::from_word(n, rem), family);
                    if (free) {
                        VertexSet w = VertexSet::from_word(n, s);
                        return ExactResult{r, Certificate{w, family, "exact", Rational(r)}};
                    }
                }
                std::uint64_t c = s & (~s + 1), rr = s + c;
                s = (((rr ^ s) >> 2) / c) | rr;
            }
        }
        return std::nullopt;
    }

    for (int r = 1; r <= cap; ++r) {
        auto hit = first_subset_accepted(n, r, [&](const VertexSet &s) {
            if (!s.intersects(cover)) return false;
            return is_f_free(g, g.remainder(s), family);
        });
        if (hit) return ExactResult{r, Certificate{*hit, family, "exact", Rational(r)}};
    }
    return std::nullopt;
}

} // namespace

std::optional<VertexSet> find_violation(const Graph &g, const VertexSet &region, const PatternFamily &family) {
    switch (family.tag()) {
        case FamilyTag::star: {
            for (int v : region) {
                VertexSet nbrs = g.neighbors(v) & region;
                if (nbrs.count() > family.k()) {
                    VertexSet occ(g.n());
                    occ.add(v);
                    int taken = 0;
                    for (int w : nbrs) {
                        occ.add(w);
                        if (++taken == family.k() + 1) break;
                    }
                    return occ;
                }
            }
            return std::nullopt;
        }
        case FamilyTag::clique: {
            std::vector<int> stack;
            if (!clique_witness(g, region, family.k(), stack)) return std::nullopt;
            VertexSet occ(g.n());
            for (int v : stack) occ.add(v);
            return occ;
        }
        case FamilyTag::all_cycles:
            return cycle_witness(g, region);
        case FamilyTag::all_trees: {
            VertexSet seen(g.n());
            for (int s : region) {
                if (seen.contains(s)) continue;
                std::vector<int> order{s};
                VertexSet comp(g.n());
                comp.add(s);
                for (std::size_t head = 0; head < order.size(); ++head)
                    for (int v : g.neighbors(order[head]) & region)
                        if (!comp.contains(v)) {
                            comp.add(v);
                            order.push_back(v);
                        }
                seen |= comp;
                if (static_cast<int>(order.size()) >= family.k()) {
                    // a BFS prefix is connected, hence spans a tree of order k
                    VertexSet occ(g.n());
                    for (int i = 0; i < family.k(); ++i) occ.add(order[i]);
                    return occ;
                }
            }
            return std::nullopt;
        }
        case FamilyTag::explicit_list: {
            for (const Graph &p : family.patterns())
                if (auto w = subgraph_witness(g, region, p)) return w;
            return std::nullopt;
        }
    }
    return std::nullopt;
}

ExactResult exact_isolation(const Graph &g, const PatternFamily &family) {
    return *isolation_search(g, family, g.n());
}

std::optional<ExactResult> exact_isolation_capped(const Graph &g, const PatternFamily &family, int max_size) {
    return isolation_search(g, family, max_size);
}

SetResult exact_domination(const Graph &g) {
    int n = g.n();
    if (n == 0) return {0, VertexSet(0)};
    // a dominating set meets the smallest closed neighborhood
    int pivot = 0;
    for (int v = 1; v < n; ++v)
        if (g.closed_neighborhood(v).count() < g.closed_neighborhood(pivot).count()) pivot = v;
    VertexSet cover = g.closed_neighborhood(pivot);
    VertexSet all = g.vertices();
    for (int r = 1; r <= n; ++r) {
        auto hit = first_subset_accepted(n, r, [&](const VertexSet &s) {
            if (!s.intersects(cover)) return false;
            return g.closed_neighborhood(s) == all;
        });
        if (hit) return {r, *hit};
    }
    return {n, all}; // unreachable: V dominates
}

SetResult max_f_free_subset(const Graph &g, const PatternFamily &family) {
    int n = g.n();
    for (int r = n; r >= 1; --r) {
        auto hit = first_subset_accepted(n, r, [&](const VertexSet &s) { return is_f_free(g, s, family); });
        if (hit) return {r, *hit};
    }
    return {0, VertexSet(n)};
}

SetResult exact_k_independence(const Graph &g, int k) {
    if (k < 0) throw parameter_error("k-independence needs k >= 0");
    return max_f_free_subset(g, PatternFamily::star(k));
}

SetResult tree_domination(const Graph &g) {
    if (!g.is_forest()) throw precondition_error("tree domination needs a forest");
    int n = g.n();
    // state 0: in set; 1: out, dominated by a child; 2: out, waits for parent
    std::vector<int> dp0(n), dp1(n), dp2(n), parent(n, -1);
    std::vector<int> order;
    order.reserve(n);
    std::vector<char> seen(n, 0);
    for (int s = 0; s < n; ++s) {
        if (seen[s]) continue;
        seen[s] = 1;
        std::size_t base = order.size();
        order.push_back(s);
        for (std::size_t head = base; head < order.size(); ++head)
            for (int v : g.neighbors(order[head]))
                if (!seen[v]) {
                    seen[v] = 1;
                    parent[v] = order[head];
                    order.push_back(v);
                }
    }
    std::vector<std::vector<int>> children(n);
    for (int v = 0; v < n; ++v)
        if (parent[v] != -1) children[parent[v]].push_back(v);

    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        int v = *it;
        int in = 1, covered = 0, waiting = 0, flip = kInf;
        bool child_in = false;
        for (int c : children[v]) {
            in += std::min({dp0[c], dp1[c], dp2[c]});
            int best = std::min(dp0[c], dp1[c]);
            covered = std::min(covered + best, kInf);
            if (dp0[c] <= dp1[c]) child_in = true;
            else flip = std::min(flip, dp0[c] - dp1[c]);
            waiting = std::min(waiting + dp1[c], kInf);
        }
        dp0[v] = in;
        dp1[v] = children[v].empty() ? kInf : std::min(covered + (child_in ? 0 : flip), kInf);
        dp2[v] = waiting;
    }

    VertexSet set(n);
    // forward pass over BFS order keeps parents assigned before children
    std::vector<int> state(n, -1);
    int value = 0;
    for (int v : order) {
        if (parent[v] == -1) state[v] = dp0[v] <= dp1[v] ? 0 : 1;
        if (state[v] == 0) {
            set.add(v);
            ++value;
            for (int c : children[v]) {
                int m = std::min({dp0[c], dp1[c], dp2[c]});
                state[c] = dp1[c] == m ? 1 : (dp2[c] == m ? 2 : 0);
            }
        } else if (state[v] == 1) {
            int flip_child = -1, flip_cost = kInf;
            bool have_in = false;
            for (int c : children[v]) {
                state[c] = dp0[c] <= dp1[c] ? 0 : 1;
                if (state[c] == 0) have_in = true;
                else if (dp0[c] - dp1[c] < flip_cost) {
                    flip_cost = dp0[c] - dp1[c];
                    flip_child = c;
                }
            }
            if (!have_in) state[flip_child] = 0;
        } else {
            for (int c : children[v]) state[c] = 1;
        }
    }
    return {value, set};
}

VertexSet half_dominating_set(const Graph &g) {
    VertexSet out(g.n());
    for (const VertexSet &comp : g.components()) {
        if (comp.count() == 1)
            throw precondition_error("half dominating set needs an isolate-free graph");
        int root = comp.first();
        // 2-color a spanning BFS tree; each vertex has a tree neighbor in the
        // other class, so either class dominates the component
        std::vector<int> level(g.n(), -1);
        std::vector<int> queue{root};
        level[root] = 0;
        VertexSet even(g.n()), odd(g.n());
        even.add(root);
        for (std::size_t head = 0; head < queue.size(); ++head) {
            int u = queue[head];
            for (int v : g.neighbors(u) & comp)
                if (level[v] == -1) {
                    level[v] = level[u] + 1;
                    (level[v] % 2 ? odd : even).add(v);
                    queue.push_back(v);
                }
        }
        out |= odd.count() < even.count() ? odd : even;
    }
    return out;
}

} // namespace isolate
