#pragma once

// Brute-force references used to cross-check the library. Exponential; keep
// inputs at or below 7 vertices.

#include <algorithm>
#include <numeric>
#include <set>
#include <vector>

#include "unigraph/graph.hpp"

namespace oracle {

using unigraph::Graph;
using unigraph::VertexSet;

// Lexicographically smallest upper-triangle adjacency string over all relabelings.
inline std::vector<bool> certificate(const Graph& g) {
  const int n = g.order();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<bool> best;
  do {
    std::vector<bool> cur;
    cur.reserve(n * (n - 1) / 2);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) cur.push_back(g.adjacent(perm[i], perm[j]));
    if (best.empty() || cur < best) best = std::move(cur);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

inline bool isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  return certificate(a) == certificate(b);
}

// Every labeled graph on len(d) vertices with deg(i) = d[i].
inline std::vector<Graph> labeled_realizations(const std::vector<int>& d) {
  const int n = static_cast<int>(d.size());
  std::vector<std::pair<int, int>> slots;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) slots.emplace_back(u, v);
  std::vector<Graph> out;
  std::vector<int> left = d;
  std::vector<std::pair<int, int>> chosen;
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == slots.size()) {
      if (std::all_of(left.begin(), left.end(), [](int x) { return x == 0; }))
        out.emplace_back(n, std::span<const std::pair<int, int>>(chosen));
      return;
    }
    const auto [u, v] = slots[i];
    // Skipping (u, v) leaves u only the slots (u, w) with w > v.
    if (left[u] <= n - 1 - v) self(self, i + 1);
    if (left[u] > 0 && left[v] > 0) {
      --left[u], --left[v];
      chosen.emplace_back(u, v);
      self(self, i + 1);
      chosen.pop_back();
      ++left[u], ++left[v];
    }
  };
  rec(rec, 0);
  return out;
}

// One graph per isomorphism class.
inline std::vector<Graph> dedup(const std::vector<Graph>& graphs) {
  std::set<std::vector<bool>> seen;
  std::vector<Graph> out;
  for (const Graph& g : graphs)
    if (seen.insert(certificate(g)).second) out.push_back(g);
  return out;
}

inline std::vector<Graph> realizations(const std::vector<int>& d) { return dedup(labeled_realizations(d)); }

inline std::vector<int> degrees(const Graph& g) {
  std::vector<int> d;
  for (int v = 0; v < g.order(); ++v) d.push_back(g.degree(v));
  return d;
}

inline bool is_clique(const Graph& g, VertexSet s) {
  bool ok = true;
  unigraph::for_each_vertex(s, [&](int v) { ok = ok && (g.neighbors(v) & s) == (s & ~unigraph::bit(v)); });
  return ok;
}

inline bool is_stable(const Graph& g, VertexSet s) {
  bool ok = true;
  unigraph::for_each_vertex(s, [&](int v) { ok = ok && (g.neighbors(v) & s) == 0; });
  return ok;
}

inline int clique_number(const Graph& g) {
  int best = 0;
  for (VertexSet s = 0; s <= g.vertices(); ++s) {
    if (is_clique(g, s)) best = std::max(best, unigraph::popcount(s));
    if (s == g.vertices()) break;
  }
  return best;
}

inline bool colorable(const Graph& g, int k) {
  const int n = g.order();
  std::vector<int> col(n, 0);
  auto rec = [&](auto&& self, int v) -> bool {
    if (v == n) return true;
    for (int c = 0; c < k; ++c) {
      bool ok = true;
      for (int u = 0; u < v && ok; ++u) ok = !(g.adjacent(u, v) && col[u] == c);
      if (!ok) continue;
      col[v] = c;
      if (self(self, v + 1)) return true;
    }
    return false;
  };
  return rec(rec, 0);
}

inline int chromatic_number(const Graph& g) {
  int k = 0;
  while (!colorable(g, k)) ++k;
  return k;
}

// Every induced subgraph has χ = ω.
inline bool perfect(const Graph& g) {
  for (VertexSet s = 1; s <= g.vertices() && s != 0; ++s) {
    const Graph h = unigraph::induced_subgraph(g, s);
    if (chromatic_number(h) != clique_number(h)) return false;
    if (s == g.vertices()) break;
  }
  return true;
}

// No induced cycle on four or more vertices.
inline bool chordal(const Graph& g) {
  for (VertexSet s = 0; s <= g.vertices(); ++s) {
    if (unigraph::popcount(s) >= 4) {
      const Graph h = unigraph::induced_subgraph(g, s);
      bool two_regular = true;
      for (int v = 0; v < h.order(); ++v) two_regular = two_regular && h.degree(v) == 2;
      if (two_regular) {
        // Connected 2-regular graph = cycle.
        VertexSet seen = 1, frontier = 1;
        while (frontier) {
          VertexSet next = 0;
          unigraph::for_each_vertex(frontier, [&](int v) { next |= h.neighbors(v); });
          frontier = next & ~seen;
          seen |= next;
        }
        if (seen == h.vertices()) return false;
      }
    }
    if (s == g.vertices()) break;
  }
  return true;
}

// All (clique, stable) partitions.
inline std::vector<std::pair<VertexSet, VertexSet>> split_partitions(const Graph& g) {
  std::vector<std::pair<VertexSet, VertexSet>> out;
  for (VertexSet k = 0; k <= g.vertices(); ++k) {
    const VertexSet s = g.vertices() & ~k;
    if (is_clique(g, k) && is_stable(g, s)) out.emplace_back(k, s);
    if (k == g.vertices()) break;
  }
  return out;
}

// Some injective map of h into g that preserves adjacency and non-adjacency.
inline bool contains_induced(const Graph& g, const Graph& h) {
  const int n = g.order(), m = h.order();
  if (m > n) return false;
  std::vector<int> map(m, -1);
  std::vector<bool> used(n, false);
  auto rec = [&](auto&& self, int i) -> bool {
    if (i == m) return true;
    for (int w = 0; w < n; ++w) {
      if (used[w]) continue;
      bool ok = true;
      for (int j = 0; j < i && ok; ++j) ok = h.adjacent(i, j) == g.adjacent(w, map[j]);
      if (!ok) continue;
      used[w] = true;
      map[i] = w;
      if (self(self, i + 1)) return true;
      used[w] = false;
    }
    return false;
  };
  return rec(rec, 0);
}

inline bool unigraph(const Graph& g) { return realizations(degrees(g)).size() == 1; }

// Exactly one realization of d(g) within the class given by `member`.
template <typename Member>
bool a_unigraph(const Graph& g, Member member) {
  if (!member(g)) return false;
  int count = 0;
  for (const Graph& h : realizations(degrees(g))) count += member(h) ? 1 : 0;
  return count == 1;
}

// Every induced subgraph is an 𝒜-unigraph.
template <typename Member>
bool hereditary_a_unigraph(const Graph& g, Member member) {
  for (VertexSet s = 0; s <= g.vertices(); ++s) {
    if (!a_unigraph(unigraph::induced_subgraph(g, s), member)) return false;
    if (s == g.vertices()) break;
  }
  return true;
}

}  // namespace oracle
