#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "isolate/vertexset.hpp"

namespace isolate {

// Immutable simple undirected graph on vertices 0..n-1.  Adjacency rows are
// bitsets; rows never contain the vertex itself and are always symmetric.
// Values are safe to share across threads.
class Graph {
  public:
    Graph() : n_(0), m_(0) {}
    // Edges validated: endpoints in range, no loops; duplicates collapse.
    Graph(int n, const std::vector<std::pair<int, int>> &edges);

    int n() const { return n_; }
    int m() const { return m_; }

    const VertexSet &neighbors(int v) const { return adj_[v]; }
    bool has_edge(int u, int v) const { return adj_[u].contains(v); }
    int degree(int v) const { return adj_[v].count(); }
    int min_degree() const;
    int max_degree() const;

    VertexSet vertices() const { return VertexSet::full(n_); }
    // Edge list with u < v, ascending.
    std::vector<std::pair<int, int>> edges() const;

    VertexSet closed_neighborhood(int v) const;
    VertexSet closed_neighborhood(const VertexSet &s) const;
    VertexSet open_neighborhood(const VertexSet &s) const;
    // V minus N[s].
    VertexSet remainder(const VertexSet &s) const;

    Graph complement() const;
    Graph square() const;
    // Vertex (i,j) of g x h maps to index i*n(h)+j.
    static Graph cartesian_product(const Graph &g, const Graph &h);
    // Two copies of V; v1_i ~ v2_j iff i == j or ij is an edge.  Side one is
    // indices 0..n-1, side two is n..2n-1.
    Graph bipartite_double() const;
    // Subgraph on keep; new index i corresponds to old_of[i] (ascending).
    Graph induced(const VertexSet &keep, std::vector<int> *old_of = nullptr) const;
    static Graph disjoint_union(const Graph &g, const Graph &h);

    std::vector<VertexSet> components() const;
    bool is_connected() const;
    bool is_forest() const;
    bool is_tree() const;
    bool is_cycle_of_length(int k) const;
    // Proper 2-coloring into side 0/1 when bipartite.
    bool is_bipartite(std::vector<int> *side = nullptr) const;
    bool is_regular(int *r = nullptr) const;

    struct BfsTree {
        int root;
        std::vector<int> parent; // parent[root] = -1
        std::vector<int> level;  // level[root] = 0
        std::vector<int> order;  // visit order, smallest-index-first within a level
    };
    // Requires a connected graph; visits neighbors in ascending index order.
    BfsTree bfs_tree(int root) const;

    bool operator==(const Graph &o) const { return adj_ == o.adj_; }

  private:
    int n_;
    int m_;
    std::vector<VertexSet> adj_;
};

} // namespace isolate
