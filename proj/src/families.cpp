#include "isolate/families.hpp"

#include "isolate/errors.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

namespace isolate {

namespace {

using EdgeList = std::vector<std::pair<int, int>>;

void require(bool ok, const std::string &what) {
  if (!ok) throw parameter_error(what);
}

} // namespace

Graph path_graph(int n) {
  require(n >= 1, "path needs n >= 1");
  EdgeList e;
  for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
  return Graph(n, e);
}

Graph cycle_graph(int n) {
  require(n >= 3, "cycle needs n >= 3");
  EdgeList e;
  for (int i = 0; i < n; ++i) e.push_back({i, (i + 1) % n});
  return Graph(n, e);
}

Graph complete_graph(int n) {
  require(n >= 0, "complete needs n >= 0");
  EdgeList e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.push_back({i, j});
  return Graph(n, e);
}

Graph empty_graph(int n) {
  require(n >= 0, "empty needs n >= 0");
  return Graph(n, {});
}

Graph complete_bipartite(int p, int q) {
  require(p >= 0 && q >= 0, "biclique needs p, q >= 0");
  EdgeList e;
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < q; ++j) e.push_back({i, p + j});
  return Graph(p + q, e);
}

Graph star_graph(int leaves) {
  require(leaves >= 0, "star needs leaves >= 0");
  return complete_bipartite(1, leaves);
}

Graph petersen() {
  EdgeList e;
  for (int i = 0; i < 5; ++i) {
    e.push_back({i, (i + 1) % 5});
    e.push_back({5 + i, 5 + (i + 2) % 5});
    e.push_back({i, 5 + i});
  }
  return Graph(10, e);
}

Graph hypercube(int d) {
  require(d >= 0 && d <= 12, "hypercube needs 0 <= d <= 12");
  int n = 1 << d;
  EdgeList e;
  for (int v = 0; v < n; ++v)
    for (int b = 0; b < d; ++b)
      if (!(v & (1 << b))) e.push_back({v, v | (1 << b)});
  return Graph(n, e);
}

Graph random_tree(int n, Rng &rng) {
  require(n >= 1, "tree needs n >= 1");
  if (n == 1) return Graph(1, {});
  if (n == 2) return Graph(2, {{0, 1}});
  std::vector<int> pruefer(n - 2);
  for (int &x : pruefer) x = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
  std::vector<int> deg(n, 1);
  for (int x : pruefer) ++deg[x];
  EdgeList e;
  // Linear decode: consume the smallest current leaf each round; vertex n-1
  // survives to the end.
  int ptr = 0;
  while (deg[ptr] != 1) ++ptr;
  int leaf = ptr;
  for (int x : pruefer) {
    e.push_back({leaf, x});
    if (--deg[x] == 1 && x < ptr) {
      leaf = x;
    } else {
      ++ptr;
      while (ptr < n && deg[ptr] != 1) ++ptr;
      leaf = ptr;
    }
  }
  e.push_back({leaf, n - 1});
  return Graph(n, e);
}

Graph random_regular(int n, int degree, Rng &rng) {
  require(n >= 1 && degree >= 0 && degree < n, "regular needs 0 <= degree < n");
  require((static_cast<long long>(n) * degree) % 2 == 0, "regular needs n*degree even");
  if (degree == 0) return empty_graph(n);
  const int attempts = 2000;
  std::vector<int> points(static_cast<std::size_t>(n) * degree);
  for (int trial = 0; trial < attempts; ++trial) {
    std::iota(points.begin(), points.end(), 0);
    for (std::size_t i = points.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(rng.below(i));
      std::swap(points[i - 1], points[j]);
    }
    EdgeList e;
    bool ok = true;
    std::vector<std::vector<bool>> seen(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; ok && i + 1 < points.size(); i += 2) {
      int u = points[i] / degree, v = points[i + 1] / degree;
      if (u == v || seen[u][v]) { ok = false; break; }
      seen[u][v] = seen[v][u] = true;
      e.push_back({u, v});
    }
    if (ok) return Graph(n, e);
  }
  throw parameter_error("pairing model failed to produce a simple graph");
}

Graph corona_k2(const Graph &h, CoronaMode mode) {
  require(h.n() >= 1, "corona base needs n >= 1");
  if (!h.is_connected()) throw precondition_error("corona base must be connected");
  int n = h.n();
  EdgeList e = h.edges();
  for (int i = 0; i < n; ++i) {
    int a = n + 2 * i, b = a + 1;
    e.push_back({a, b});
    e.push_back({i, a});
    if (mode == CoronaMode::two_edges) e.push_back({i, b});
  }
  return Graph(3 * n, e);
}

Graph f_rst(int r, int s, int t) {
  require(r >= 0 && s >= 0 && t >= 0 && r + s + t >= 1, "need r,s,t >= 0 and r+s+t >= 1");
  EdgeList e;
  int base = 0;
  for (int i = 0; i < r; ++i) {
    e.push_back({base, base + 1});
    e.push_back({base, base + 2});
    e.push_back({base + 1, base + 2});
    base += 3;
  }
  for (int i = 0; i < s; ++i) {
    e.push_back({base, base + 1});
    e.push_back({base + 1, base + 2});
    base += 3;
  }
  for (int i = 0; i < t; ++i) {
    for (int j = 0; j < 6; ++j) e.push_back({base + j, base + (j + 1) % 6});
    base += 6;
  }
  return Graph(base, e);
}

Graph kr_minus_hamiltonian(int r) {
  require(r >= 4, "need r >= 4");
  EdgeList e;
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j) {
      bool on_cycle = (j == i + 1) || (i == 0 && j == r - 1);
      if (!on_cycle) e.push_back({i, j});
    }
  return Graph(r, e);
}

Graph compose_general(const Graph &h, int hook, const Graph &gstar, ComposeMode mode) {
  require(h.n() >= 1 && gstar.n() >= 1, "compose needs nonempty parts");
  require(hook >= 0 && hook < h.n(), "hook out of range");
  if (mode == ComposeMode::delta1) {
    if (h.min_degree() != 1) throw precondition_error("delta1 mode needs min degree 1 in h");
    bool spare_leaf = false;
    for (int v = 0; v < h.n() && !spare_leaf; ++v)
      if (v != hook && h.degree(v) == 1) spare_leaf = true;
    if (!spare_leaf) throw precondition_error("delta1 mode needs a degree-1 vertex besides the hook");
  } else {
    if (gstar.min_degree() < 1) throw precondition_error("delta_ge2 mode needs min degree >= 1 in gstar");
    if (h.min_degree() < gstar.min_degree() + 1)
      throw precondition_error("delta_ge2 mode needs min degree of h above that of gstar");
  }
  int t = gstar.n(), nh = h.n();
  EdgeList e;
  for (int i = 0; i < t; ++i)
    for (auto [u, v] : h.edges()) e.push_back({i * nh + u, i * nh + v});
  int off = t * nh;
  for (auto [u, v] : gstar.edges()) e.push_back({off + u, off + v});
  for (int i = 0; i < t; ++i) e.push_back({i * nh + hook, off + i});
  return Graph(off + t, e);
}

Graph path_of_stars(int t, int k) {
  require(t >= 1 && k >= 0, "need t >= 1 and k >= 0");
  EdgeList e;
  for (int i = 0; i + 1 < t; ++i) e.push_back({i, i + 1});
  for (int i = 0; i < t; ++i) {
    int center = t + i * (k + 2);
    for (int l = 1; l <= k + 1; ++l) e.push_back({center, center + l});
    e.push_back({i, center + 1});
  }
  return Graph(t * (k + 3), e);
}

Graph equal_degree_caterpillar(int t, int r) {
  require(t >= 3 && r >= 3, "need t >= 3 and r >= 3");
  EdgeList e;
  for (int i = 0; i + 1 < t; ++i) e.push_back({i, i + 1});
  int next = t + (t - 2);
  for (int i = 1; i + 1 < t; ++i) {
    int v = t + (i - 1);
    e.push_back({i, v});
    for (int l = 0; l < r - 1; ++l) e.push_back({v, next++});
  }
  for (int i = 1; i + 1 < t; ++i)
    for (int l = 0; l < r - 3; ++l) e.push_back({i, next++});
  return Graph(next, e);
}

Graph fan_triangulation(int n) {
  require(n >= 3, "fan needs n >= 3");
  EdgeList e;
  for (int i = 0; i < n; ++i) e.push_back({i, (i + 1) % n});
  for (int j = 2; j <= n - 2; ++j) e.push_back({0, j});
  return Graph(n, e);
}

namespace {

void split_polygon(int lo, int hi, Rng &rng, EdgeList &e) {
  if (hi - lo < 2) return;
  int k = lo + 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(hi - lo - 1)));
  if (k > lo + 1) e.push_back({lo, k});
  if (hi > k + 1) e.push_back({k, hi});
  split_polygon(lo, k, rng, e);
  split_polygon(k, hi, rng, e);
}

} // namespace

Graph random_polygon_triangulation(int n, Rng &rng) {
  require(n >= 3, "triangulation needs n >= 3");
  EdgeList e;
  for (int i = 0; i < n; ++i) e.push_back({i, (i + 1) % n});
  split_polygon(0, n - 1, rng, e);
  return Graph(n, e);
}

Graph outerplanar_sharp(int p, const Graph *base) {
  require(p >= 2, "need p >= 2");
  Graph b = base ? *base : fan_triangulation(2 * p);
  if (b.n() != 2 * p) throw precondition_error("base must have 2p vertices");
  if (b.m() != 2 * (2 * p) - 3)
    throw precondition_error("base must be maximal outerplanar (2n-3 edges)");
  for (int i = 0; i < 2 * p; ++i)
    if (!b.has_edge(i, (i + 1) % (2 * p)))
      throw precondition_error("base outer cycle must be 0..2p-1 in order");
  EdgeList e = b.edges();
  auto w = [p](int i) { return 2 * p - 1 + i; }; // new vertex for outer index i in 1..2p
  for (int i = 1; i <= 2 * p; ++i) e.push_back({i - 1, w(i)});
  for (int j = 1; j <= p; ++j) {
    e.push_back({2 * j - 2, w(2 * j)});
    e.push_back({w(2 * j - 1), w(2 * j)});
  }
  return Graph(4 * p, e);
}

Graph lb_equality_bipartite(int t, int delta_cap) {
  require(t >= 1 && delta_cap >= 1, "need t >= 1 and delta >= 1");
  int d = delta_cap;
  auto a = [d](int i, int j) { return i * d + j; };
  int hub0 = t * d;
  int fill0 = hub0 + t;
  EdgeList e;
  for (int i = 0; i < t; ++i) {
    for (int j = 0; j < d; ++j) e.push_back({hub0 + i, a(i, j)});
    for (int c = 0; c < d - 1; ++c)
      for (int j = 0; j < d; ++j) e.push_back({fill0 + i * (d - 1) + c, a(i, j)});
  }
  return Graph(2 * t * d, e);
}

Graph star_lower_sharp(int delta_cap, int k) {
  require(delta_cap >= 1 && k >= 0, "need delta >= 1 and k >= 0");
  EdgeList e;
  for (int i = 0; i < delta_cap; ++i) {
    int base = 1 + i * (k + 1);
    for (int u = 0; u < k + 1; ++u)
      for (int v = u + 1; v < k + 1; ++v) e.push_back({base + u, base + v});
    e.push_back({0, base});
  }
  return Graph(1 + delta_cap * (k + 1), e);
}

} // namespace isolate
