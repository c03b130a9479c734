#include "unigraph/graph.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>
#include <string>

#include "unigraph/canon.hpp"
#include "unigraph/error.hpp"

namespace unigraph {

struct Graph::KeyCache {
  std::once_flag once;
  CanonicalKey key;
};

namespace {

void check_order(int n) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  if (n > kMaxVertices)
    throw CapacityError("graph has " + std::to_string(n) + " vertices; capacity is 32");
}

}  // namespace

Graph::Graph() : cache_(std::make_shared<KeyCache>()) {}

Graph::Graph(int n) : n_(n), cache_(std::make_shared<KeyCache>()) { check_order(n); }

Graph::Graph(int n, std::initializer_list<std::pair<int, int>> edges)
    : Graph(n, std::span<const std::pair<int, int>>(edges.begin(), edges.size())) {}

Graph::Graph(int n, std::span<const std::pair<int, int>> edges) : Graph(n) {
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) throw std::out_of_range("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("self-loop in simple graph");
    rows_[u] |= bit(v);
    rows_[v] |= bit(u);
  }
}

Graph Graph::from_rows(int n, std::span<const VertexSet> rows) {
  Graph g(n);
  if (rows.size() != static_cast<std::size_t>(n))
    throw std::invalid_argument("row count does not match vertex count");
  const VertexSet mask = full_set(n);
  for (int v = 0; v < n; ++v) {
    if ((rows[v] & ~mask) != 0) throw std::invalid_argument("neighbour out of range");
    if ((rows[v] >> v) & 1U) throw std::invalid_argument("self-loop in simple graph");
    g.rows_[v] = rows[v];
  }
  for (int u = 0; u < n; ++u)
    for_each_vertex(rows[u], [&](int v) {
      if (!((rows[v] >> u) & 1U)) throw std::invalid_argument("adjacency is not symmetric");
    });
  return g;
}

int Graph::size() const {
  int twice = 0;
  for (int v = 0; v < n_; ++v) twice += popcount(rows_[v]);
  return twice / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n_; ++u)
    for_each_vertex(rows_[u] & ~full_set(u + 1), [&](int v) { out.emplace_back(u, v); });
  return out;
}

const CanonicalKey& Graph::canonical_key() const {
  std::call_once(cache_->once, [this] { cache_->key = canonical_form(n_, rows()); });
  return cache_->key;
}

bool operator==(const Graph& a, const Graph& b) {
  if (a.n_ != b.n_) return false;
  for (int v = 0; v < a.n_; ++v)
    if (a.rows_[v] != b.rows_[v]) return false;
  return true;
}

Graph complete_graph(int n) {
  std::array<VertexSet, kMaxVertices> rows{};
  for (int v = 0; v < n; ++v) rows[v] = full_set(n) & ~bit(v);
  return Graph::from_rows(n, std::span(rows.data(), n));
}

Graph path_graph(int n) {
  std::vector<std::pair<int, int>> e;
  for (int v = 0; v + 1 < n; ++v) e.emplace_back(v, v + 1);
  return Graph(n, e);
}

Graph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  std::vector<std::pair<int, int>> e;
  for (int v = 0; v < n; ++v) e.emplace_back(v, (v + 1) % n);
  return Graph(n, e);
}

Graph star_graph(int leaves) {
  std::vector<std::pair<int, int>> e;
  for (int v = 1; v <= leaves; ++v) e.emplace_back(0, v);
  return Graph(leaves + 1, e);
}

Graph complete_bipartite(int a, int b) {
  std::vector<std::pair<int, int>> e;
  for (int u = 0; u < a; ++u)
    for (int v = 0; v < b; ++v) e.emplace_back(u, a + v);
  return Graph(a + b, e);
}

Graph induced_subgraph(const Graph& g, VertexSet s) {
  if ((s & ~g.vertices()) != 0) throw std::out_of_range("vertex set not contained in graph");
  std::array<int, kMaxVertices> pos{};
  int k = 0;
  for_each_vertex(s, [&](int v) { pos[v] = k++; });
  std::array<VertexSet, kMaxVertices> rows{};
  for_each_vertex(s, [&](int v) {
    VertexSet r = 0;
    for_each_vertex(g.neighbors(v) & s, [&](int w) { r |= bit(pos[w]); });
    rows[pos[v]] = r;
  });
  return Graph::from_rows(k, std::span(rows.data(), k));
}

Graph induced_subgraph(const Graph& g, std::span<const int> vertices) {
  VertexSet s = 0;
  for (int v : vertices) {
    if (v < 0 || v >= g.order()) throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
    s |= bit(v);
  }
  return induced_subgraph(g, s);
}

Graph delete_vertex(const Graph& g, int v) {
  if (v < 0 || v >= g.order()) throw std::out_of_range("vertex out of range");
  return induced_subgraph(g, g.vertices() & ~bit(v));
}

Graph complement(const Graph& g) {
  const int n = g.order();
  std::array<VertexSet, kMaxVertices> rows{};
  for (int v = 0; v < n; ++v) rows[v] = ~g.neighbors(v) & full_set(n) & ~bit(v);
  return Graph::from_rows(n, std::span(rows.data(), n));
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  const int n = g.order() + h.order();
  if (n > kMaxVertices) throw CapacityError("disjoint union exceeds 32 vertices");
  std::array<VertexSet, kMaxVertices> rows{};
  for (int v = 0; v < g.order(); ++v) rows[v] = g.neighbors(v);
  for (int v = 0; v < h.order(); ++v) rows[g.order() + v] = h.neighbors(v) << g.order();
  return Graph::from_rows(n, std::span(rows.data(), n));
}

Graph relabel(const Graph& g, std::span<const int> perm) {
  const int n = g.order();
  if (perm.size() != static_cast<std::size_t>(n)) throw std::invalid_argument("permutation size mismatch");
  VertexSet seen = 0;
  for (int p : perm) {
    if (p < 0 || p >= n || ((seen >> p) & 1U)) throw std::invalid_argument("not a permutation");
    seen |= bit(p);
  }
  std::array<VertexSet, kMaxVertices> rows{};
  for (int v = 0; v < n; ++v)
    for_each_vertex(g.neighbors(v), [&](int w) { rows[perm[v]] |= bit(perm[w]); });
  return Graph::from_rows(n, std::span(rows.data(), n));
}

VertexSet isolated_vertices(const Graph& g) {
  VertexSet s = 0;
  for (int v = 0; v < g.order(); ++v)
    if (g.neighbors(v) == 0) s |= bit(v);
  return s;
}

int max_degree(const Graph& g) {
  int d = 0;
  for (int v = 0; v < g.order(); ++v) d = std::max(d, g.degree(v));
  return d;
}

}  // namespace unigraph
