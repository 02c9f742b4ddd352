#include "isolate/patterns.hpp"

#include <algorithm>
#include <numeric>

#include "isolate/errors.hpp"
#include "isolate/graph_io.hpp"

namespace isolate {

namespace {

// one k-clique inside region, candidates restricted to region
bool has_clique(const Graph &g, VertexSet candidates, int need) {
    if (need == 0) return true;
    if (candidates.count() < need) return false;
    for (int v = candidates.first(); v != -1; v = candidates.next_after(v)) {
        VertexSet next = candidates & g.neighbors(v);
        if (has_clique(g, next, need - 1)) return true;
        candidates.remove(v);
        if (candidates.count() < need) return false;
    }
    return false;
}

bool region_is_forest(const Graph &g, const VertexSet &region) {
    VertexSet seen(g.n());
    for (int s : region) {
        if (seen.contains(s)) continue;
        // BFS with parent tracking; a cross edge closes a cycle
        std::vector<int> parent(g.n(), -2);
        std::vector<int> queue{s};
        parent[s] = -1;
        seen.add(s);
        for (std::size_t head = 0; head < queue.size(); ++head) {
            int u = queue[head];
            for (int v = (g.neighbors(u) & region).first(); v != -1; v = (g.neighbors(u) & region).next_after(v)) {
                if (parent[u] == v) continue;
                if (parent[v] != -2) return false;
                parent[v] = u;
                seen.add(v);
                queue.push_back(v);
            }
        }
    }
    return true;
}

int largest_component_in_region(const Graph &g, const VertexSet &region) {
    int best = 0;
    VertexSet seen(g.n());
    for (int s : region) {
        if (seen.contains(s)) continue;
        VertexSet comp(g.n());
        comp.add(s);
        while (true) {
            VertexSet grown = comp;
            for (int v : comp) grown |= g.neighbors(v) & region;
            if (grown == comp) break;
            comp = grown;
        }
        seen |= comp;
        best = std::max(best, comp.count());
    }
    return best;
}

struct Matcher {
    const Graph &host;
    const VertexSet &region;
    const Graph &pattern;
    std::vector<int> order;    // pattern vertices, most-constrained first
    std::vector<int> image;    // order position -> host vertex
    VertexSet used;

    Matcher(const Graph &h, const VertexSet &r, const Graph &p)
        : host(h), region(r), pattern(p), used(h.n()) {
        // descending degree, then prefer vertices attached to already-ordered
        // ones so partial maps are edge-checked early
        std::vector<int> remaining(p.n());
        std::iota(remaining.begin(), remaining.end(), 0);
        VertexSet placed(p.n());
        while (!remaining.empty()) {
            auto best = remaining.begin();
            auto score = [&](int v) {
                int attach = (p.neighbors(v) & placed).count();
                return attach * 100 + p.degree(v);
            };
            for (auto it = remaining.begin(); it != remaining.end(); ++it)
                if (score(*it) > score(*best)) best = it;
            order.push_back(*best);
            placed.add(*best);
            remaining.erase(best);
        }
        image.assign(p.n(), -1);
    }

    bool extend(std::size_t depth) {
        if (depth == order.size()) return true;
        int pv = order[depth];
        // candidates: in region, unused, adjacent to images of placed
        // pattern-neighbors, degree within region sufficient
        VertexSet cand = region - used;
        for (std::size_t d = 0; d < depth; ++d) {
            int pu = order[d];
            if (pattern.has_edge(pu, pv)) cand &= host.neighbors(image[d]);
        }
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

} // namespace

PatternFamily PatternFamily::star(int k) {
    if (k < 0) throw parameter_error("star family needs k >= 0");
    return PatternFamily(FamilyTag::star, k);
}

PatternFamily PatternFamily::clique(int k) {
    if (k < 1) throw parameter_error("clique family needs k >= 1");
    return PatternFamily(FamilyTag::clique, k);
}

PatternFamily PatternFamily::all_cycles() { return PatternFamily(FamilyTag::all_cycles, 0); }

PatternFamily PatternFamily::all_trees(int k) {
    if (k < 2) throw parameter_error("tree family needs order k >= 2");
    return PatternFamily(FamilyTag::all_trees, k);
}

PatternFamily PatternFamily::explicit_list(std::vector<Graph> patterns) {
    if (patterns.empty()) throw parameter_error("explicit family needs at least one pattern");
    for (const Graph &p : patterns)
        if (p.n() < 1) throw parameter_error("explicit family pattern needs at least one vertex");
    // keep only patterns with no kept member inside them; scanning small to
    // large makes one pass sufficient
    std::stable_sort(patterns.begin(), patterns.end(), [](const Graph &a, const Graph &b) {
        return a.n() != b.n() ? a.n() < b.n() : a.m() < b.m();
    });
    std::vector<Graph> kept;
    for (const Graph &p : patterns) {
        bool redundant = false;
        for (const Graph &q : kept)
            if (contains_subgraph(p, p.vertices(), q)) {
                redundant = true;
                break;
            }
        if (!redundant) kept.push_back(p);
    }
    PatternFamily f(FamilyTag::explicit_list, 0);
    f.patterns_ = std::move(kept);
    return f;
}

std::string PatternFamily::name() const {
    switch (tag_) {
        case FamilyTag::star: return "star:" + std::to_string(k_);
        case FamilyTag::clique: return "clique:" + std::to_string(k_);
        case FamilyTag::all_cycles: return "cycles";
        case FamilyTag::all_trees: return "trees:" + std::to_string(k_);
        case FamilyTag::explicit_list: {
            std::string out = "explicit[";
            for (std::size_t i = 0; i < patterns_.size(); ++i) {
                if (i) out += ",";
                out += "n" + std::to_string(patterns_[i].n()) + "m" + std::to_string(patterns_[i].m());
            }
            return out + "]";
        }
    }
    return "?";
}

PatternFamily parse_family_spec(const std::string &spec) {
    auto colon = spec.find(':');
    std::string head = spec.substr(0, colon);
    std::string rest = colon == std::string::npos ? "" : spec.substr(colon + 1);
    auto num = [&](const std::string &s) {
        if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
            throw parameter_error("family spec needs a numeric parameter: " + spec);
        return std::stoi(s);
    };
    if (head == "star") return PatternFamily::star(num(rest));
    if (head == "clique") return PatternFamily::clique(num(rest));
    if (head == "cycles") return PatternFamily::all_cycles();
    if (head == "trees") return PatternFamily::all_trees(num(rest));
    if (head == "file") {
        std::vector<Graph> pats;
        std::size_t pos = 0;
        while (pos <= rest.size()) {
            auto comma = rest.find(',', pos);
            std::string path = rest.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
            if (path.empty()) throw parameter_error("empty path in family spec: " + spec);
            pats.push_back(load_graph_file(path));
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
        return PatternFamily::explicit_list(std::move(pats));
    }
    throw parameter_error("unknown family spec: " + spec);
}

bool is_f_free(const Graph &g, const VertexSet &region, const PatternFamily &family) {
    switch (family.tag()) {
        case FamilyTag::star: {
            for (int v : region)
                if ((g.neighbors(v) & region).count() > family.k()) return false;
            return true;
        }
        case FamilyTag::clique:
            return !has_clique(g, region, family.k());
        case FamilyTag::all_cycles:
            return region_is_forest(g, region);
        case FamilyTag::all_trees:
            return largest_component_in_region(g, region) < family.k();
        case FamilyTag::explicit_list: {
            for (const Graph &p : family.patterns())
                if (contains_subgraph(g, region, p)) return false;
            return true;
        }
    }
    return true;
}

bool contains_subgraph(const Graph &host, const VertexSet &region, const Graph &pattern) {
    if (pattern.n() < 1) throw precondition_error("subgraph pattern needs at least one vertex");
    if (pattern.n() > region.count()) return false;
    Matcher m(host, region, pattern);
    return m.extend(0);
}

std::optional<std::vector<int>> find_subgraph(const Graph &host, const VertexSet &region, const Graph &pattern) {
    if (pattern.n() < 1) throw precondition_error("subgraph pattern needs at least one vertex");
    if (pattern.n() > region.count()) return std::nullopt;
    Matcher m(host, region, pattern);
    if (!m.extend(0)) return std::nullopt;
    std::vector<int> map(pattern.n(), -1);
    for (std::size_t d = 0; d < m.order.size(); ++d) map[m.order[d]] = m.image[d];
    return map;
}

bool is_claw_free(const Graph &g) {
    for (int v = 0; v < g.n(); ++v) {
        std::vector<int> nb = g.neighbors(v).to_vector();
        for (std::size_t a = 0; a < nb.size(); ++a)
            for (std::size_t b = a + 1; b < nb.size(); ++b) {
                if (g.has_edge(nb[a], nb[b])) continue;
                for (std::size_t c = b + 1; c < nb.size(); ++c)
                    if (!g.has_edge(nb[a], nb[c]) && !g.has_edge(nb[b], nb[c])) return false;
            }
    }
    return true;
}

bool check_certificate(const Graph &g, const Certificate &cert) {
    if (cert.set.width() != g.n()) return false;
    if (!is_f_free(g, g.remainder(cert.set), cert.family)) return false;
    if (cert.promised_bound && Rational(cert.set.count()) > *cert.promised_bound) return false;
    return true;
}

} // namespace isolate
