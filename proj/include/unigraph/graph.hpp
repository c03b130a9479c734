#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <memory>
#include <span>
#include <utility>
#include <vector>

namespace unigraph {

inline constexpr int kMaxVertices = 32;

/// Vertex subsets are machine words: bit v set <=> vertex v present.
using VertexSet = std::uint32_t;

inline constexpr VertexSet bit(int v) { return VertexSet{1} << v; }
inline constexpr VertexSet full_set(int n) {
  return n >= 32 ? ~VertexSet{0} : (VertexSet{1} << n) - 1;
}
inline int popcount(VertexSet s) { return std::popcount(s); }

/// Calls f(v) for each vertex v in s in increasing order.
template <typename F>
void for_each_vertex(VertexSet s, F&& f) {
  while (s != 0) {
    const int v = std::countr_zero(s);
    s &= s - 1;
    f(v);
  }
}

/// Isomorphism-invariant certificate: the adjacency rows of the canonically
/// relabeled graph. Two keys compare equal iff the graphs are isomorphic.
struct CanonicalKey {
  std::uint8_t n = 0;
  std::array<VertexSet, kMaxVertices> rows{};

  friend bool operator==(const CanonicalKey&, const CanonicalKey&) = default;
  friend std::strong_ordering operator<=>(const CanonicalKey& a, const CanonicalKey& b) {
    if (auto c = a.n <=> b.n; c != 0) return c;
    for (int i = 0; i < a.n; ++i)
      if (auto c = a.rows[i] <=> b.rows[i]; c != 0) return c;
    return std::strong_ordering::equal;
  }
};

struct CanonicalKeyHash {
  std::size_t operator()(const CanonicalKey& k) const noexcept {
    std::uint64_t h = 0xcbf29ce484222325ULL ^ k.n;
    for (int i = 0; i < k.n; ++i) {
      h ^= k.rows[i];
      h *= 0x100000001b3ULL;
      h ^= h >> 29;
    }
    return static_cast<std::size_t>(h);
  }
};

/// Finite simple undirected graph on at most 32 vertices. Immutable after
/// construction; copies share a lazily computed canonical key.
class Graph {
public:
  /// The null graph K0.
  Graph();
  /// Edgeless graph on n vertices.
  explicit Graph(int n);
  Graph(int n, std::initializer_list<std::pair<int, int>> edges);
  Graph(int n, std::span<const std::pair<int, int>> edges);

  /// Builds from adjacency rows; throws std::invalid_argument unless the rows
  /// describe a simple graph (symmetric, loop-free, within range).
  static Graph from_rows(int n, std::span<const VertexSet> rows);

  int order() const { return n_; }
  int size() const;
  bool adjacent(int u, int v) const { return (rows_[u] >> v) & 1U; }
  VertexSet neighbors(int v) const { return rows_[v]; }
  int degree(int v) const { return popcount(rows_[v]); }
  VertexSet vertices() const { return full_set(n_); }
  std::span<const VertexSet> rows() const { return {rows_.data(), static_cast<std::size_t>(n_)}; }
  std::vector<std::pair<int, int>> edges() const;

  /// Canonical key, computed once per shared instance; thread-safe.
  const CanonicalKey& canonical_key() const;

  /// Identical adjacency under the identity labeling.
  friend bool operator==(const Graph& a, const Graph& b);

private:
  struct KeyCache;

  int n_ = 0;
  std::array<VertexSet, kMaxVertices> rows_{};
  std::shared_ptr<KeyCache> cache_;
};

// Standard constructions.
Graph complete_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph star_graph(int leaves);
Graph complete_bipartite(int a, int b);

/// Subgraph induced by s, vertices relabeled in increasing order.
Graph induced_subgraph(const Graph& g, VertexSet s);
/// Throws std::out_of_range if any vertex is not in g.
Graph induced_subgraph(const Graph& g, std::span<const int> vertices);
Graph delete_vertex(const Graph& g, int v);
Graph complement(const Graph& g);
/// Vertices of h follow those of g.
Graph disjoint_union(const Graph& g, const Graph& h);
/// g with vertex i mapped to perm[i].
Graph relabel(const Graph& g, std::span<const int> perm);

/// Vertices with no neighbours.
VertexSet isolated_vertices(const Graph& g);
int max_degree(const Graph& g);

}  // namespace unigraph
