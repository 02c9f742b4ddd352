#include "isolate/graph.hpp"

#include <algorithm>
#include <string>

#include "isolate/errors.hpp"

namespace isolate {

namespace {
constexpr int kMaxVertices = 4096;
}

Graph::Graph(int n, const std::vector<std::pair<int, int>> &edges) : n_(n), m_(0) {
    if (n < 0 || n > kMaxVertices)
        throw parameter_error("vertex count " + std::to_string(n) + " outside [0," + std::to_string(kMaxVertices) + "]");
    adj_.assign(n, VertexSet(n));
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw parameter_error("edge endpoint out of range: " + std::to_string(u) + " " + std::to_string(v));
        if (u == v) throw parameter_error("loop edge at vertex " + std::to_string(u));
        adj_[u].add(v);
        adj_[v].add(u);
    }
    for (int v = 0; v < n; ++v) m_ += adj_[v].count();
    m_ /= 2;
}

int Graph::min_degree() const {
    int d = n_ == 0 ? 0 : n_;
    for (int v = 0; v < n_; ++v) d = std::min(d, degree(v));
    return d;
}

int Graph::max_degree() const {
    int d = 0;
    for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
    return d;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(m_);
    for (int u = 0; u < n_; ++u)
        for (int v = adj_[u].next_after(u); v != -1; v = adj_[u].next_after(v))
            out.emplace_back(u, v);
    return out;
}

VertexSet Graph::closed_neighborhood(int v) const {
    VertexSet s = adj_[v];
    s.add(v);
    return s;
}

VertexSet Graph::closed_neighborhood(const VertexSet &s) const {
    VertexSet out = s;
    for (int v : s) out |= adj_[v];
    return out;
}

VertexSet Graph::open_neighborhood(const VertexSet &s) const {
    VertexSet out(n_);
    for (int v : s) out |= adj_[v];
    return out;
}

VertexSet Graph::remainder(const VertexSet &s) const {
    return vertices() - closed_neighborhood(s);
}

Graph Graph::complement() const {
    std::vector<std::pair<int, int>> es;
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (!has_edge(u, v)) es.emplace_back(u, v);
    return Graph(n_, es);
}

Graph Graph::square() const {
    std::vector<std::pair<int, int>> es;
    for (int u = 0; u < n_; ++u) {
        VertexSet reach = adj_[u];
        for (int w : adj_[u]) reach |= adj_[w];
        for (int v = reach.next_after(u); v != -1; v = reach.next_after(v)) es.emplace_back(u, v);
    }
    return Graph(n_, es);
}

Graph Graph::cartesian_product(const Graph &g, const Graph &h) {
    long long big = static_cast<long long>(g.n()) * h.n();
    if (big > kMaxVertices)
        throw parameter_error("product on " + std::to_string(big) + " vertices exceeds representation");
    int nh = h.n();
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < g.n(); ++i) {
        for (int j = 0; j < nh; ++j) {
            for (int j2 = h.neighbors(j).next_after(j); j2 != -1; j2 = h.neighbors(j).next_after(j2))
                es.emplace_back(i * nh + j, i * nh + j2);
            for (int i2 = g.neighbors(i).next_after(i); i2 != -1; i2 = g.neighbors(i).next_after(i2))
                es.emplace_back(i * nh + j, i2 * nh + j);
        }
    }
    return Graph(static_cast<int>(big), es);
}

Graph Graph::bipartite_double() const {
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < n_; ++i) es.emplace_back(i, n_ + i);
    for (auto [u, v] : edges()) {
        es.emplace_back(u, n_ + v);
        es.emplace_back(v, n_ + u);
    }
    return Graph(2 * n_, es);
}

Graph Graph::induced(const VertexSet &keep, std::vector<int> *old_of) const {
    std::vector<int> olds = keep.to_vector();
    std::vector<int> newidx(n_, -1);
    for (std::size_t i = 0; i < olds.size(); ++i) newidx[olds[i]] = static_cast<int>(i);
    std::vector<std::pair<int, int>> es;
    for (int u : olds)
        for (int v = (adj_[u] & keep).next_after(u); v != -1; v = (adj_[u] & keep).next_after(v))
            es.emplace_back(newidx[u], newidx[v]);
    if (old_of) *old_of = std::move(olds);
    return Graph(static_cast<int>(keep.count()), es);
}

Graph Graph::disjoint_union(const Graph &g, const Graph &h) {
    std::vector<std::pair<int, int>> es = g.edges();
    for (auto [u, v] : h.edges()) es.emplace_back(g.n() + u, g.n() + v);
    return Graph(g.n() + h.n(), es);
}

std::vector<VertexSet> Graph::components() const {
    std::vector<VertexSet> out;
    VertexSet seen(n_);
    for (int s = 0; s < n_; ++s) {
        if (seen.contains(s)) continue;
        VertexSet comp(n_);
        comp.add(s);
        // closure of {s} under adjacency
        while (true) {
            VertexSet grown = comp;
            for (int v : comp) grown |= adj_[v];
            if (grown == comp) break;
            comp = grown;
        }
        seen |= comp;
        out.push_back(comp);
    }
    return out;
}

bool Graph::is_connected() const {
    if (n_ == 0) return true;
    return components().size() == 1;
}

bool Graph::is_forest() const {
    // acyclic iff every component has exactly |C|-1 edges
    for (const VertexSet &c : components()) {
        int inner = 0;
        for (int v : c) inner += (adj_[v] & c).count();
        if (inner / 2 != c.count() - 1) return false;
    }
    return true;
}

bool Graph::is_tree() const { return n_ >= 1 && m_ == n_ - 1 && is_connected(); }

bool Graph::is_cycle_of_length(int k) const {
    if (n_ != k || m_ != k || k < 3) return false;
    for (int v = 0; v < n_; ++v)
        if (degree(v) != 2) return false;
    return is_connected();
}

bool Graph::is_bipartite(std::vector<int> *side) const {
    std::vector<int> color(n_, -1);
    std::vector<int> stack;
    for (int s = 0; s < n_; ++s) {
        if (color[s] != -1) continue;
        color[s] = 0;
        stack.push_back(s);
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int v : adj_[u]) {
                if (color[v] == -1) {
                    color[v] = 1 - color[u];
                    stack.push_back(v);
                } else if (color[v] == color[u]) {
                    return false;
                }
            }
        }
    }
    if (side) *side = std::move(color);
    return true;
}

bool Graph::is_regular(int *r) const {
    if (n_ == 0) {
        if (r) *r = 0;
        return true;
    }
    int d = degree(0);
    for (int v = 1; v < n_; ++v)
        if (degree(v) != d) return false;
    if (r) *r = d;
    return true;
}

Graph::BfsTree Graph::bfs_tree(int root) const {
    if (root < 0 || root >= n_) throw parameter_error("bfs root out of range");
    if (!is_connected()) throw precondition_error("bfs tree requires a connected graph");
    BfsTree t;
    t.root = root;
    t.parent.assign(n_, -1);
    t.level.assign(n_, -1);
    t.level[root] = 0;
    t.order.push_back(root);
    for (std::size_t head = 0; head < t.order.size(); ++head) {
        int u = t.order[head];
        for (int v : adj_[u]) {
            if (t.level[v] != -1) continue;
            t.level[v] = t.level[u] + 1;
            t.parent[v] = u;
            t.order.push_back(v);
        }
    }
    return t;
}

} // namespace isolate
