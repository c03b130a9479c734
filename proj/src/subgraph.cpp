#include "unigraph/subgraph.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

#include "unigraph/canon.hpp"

namespace unigraph {
namespace {

class Embedder {
public:
  Embedder(const Graph& g, const Graph& h, std::span<const VertexSet> allowed, bool induced)
      : g_(g), h_(h), induced_(induced), map_(h.order(), -1) {
    // Place h's vertices in BFS order from high-degree roots so that each new
    // vertex is constrained by already placed neighbours.
    VertexSet placed = 0;
    while (static_cast<int>(order_.size()) < h.order()) {
      int root = -1;
      for (int v = 0; v < h.order(); ++v)
        if (!((placed >> v) & 1U) && (root < 0 || h.degree(v) > h.degree(root))) root = v;
      std::vector<int> queue{root};
      placed |= bit(root);
      for (std::size_t i = 0; i < queue.size(); ++i) {
        order_.push_back(queue[i]);
        for_each_vertex(h.neighbors(queue[i]) & ~placed, [&](int w) {
          placed |= bit(w);
          queue.push_back(w);
        });
      }
    }
    for (int v = 0; v < h.order(); ++v) {
      VertexSet c = allowed.empty() ? g.vertices() : allowed[v] & g.vertices();
      VertexSet ok = 0;
      for_each_vertex(c, [&](int w) {
        if (g.degree(w) >= h.degree(v)) ok |= bit(w);
      });
      candidates_.push_back(ok);
    }
  }

  std::optional<std::vector<int>> run() {
    if (extend(0, 0)) return map_;
    return std::nullopt;
  }

private:
  bool extend(std::size_t depth, VertexSet used) {
    if (depth == order_.size()) return true;
    const int v = order_[depth];
    VertexSet cand = candidates_[v] & ~used;
    for (std::size_t i = 0; i < depth && cand != 0; ++i) {
      const int u = order_[i];
      if (h_.adjacent(u, v))
        cand &= g_.neighbors(map_[u]);
      else if (induced_)
        cand &= ~g_.neighbors(map_[u]);
    }
    bool found = false;
    for_each_vertex(cand, [&](int w) {
      if (found) return;
      map_[v] = w;
      if (extend(depth + 1, used | bit(w))) found = true;
    });
    if (!found) map_[v] = -1;
    return found;
  }

  const Graph& g_;
  const Graph& h_;
  bool induced_;
  std::vector<int> order_;
  std::vector<VertexSet> candidates_;
  std::vector<int> map_;
};

}  // namespace

std::optional<std::vector<int>> find_induced_embedding(const Graph& g, const Graph& h,
                                                       std::span<const VertexSet> allowed) {
  if (!allowed.empty() && allowed.size() != static_cast<std::size_t>(h.order()))
    throw std::invalid_argument("allowed-set count must match pattern order");
  if (h.order() > g.order()) return std::nullopt;
  if (h.order() == 0) return std::vector<int>{};
  return Embedder(g, h, allowed, true).run();
}

std::optional<std::vector<int>> find_subgraph_embedding(const Graph& g, const Graph& h,
                                                        std::span<const VertexSet> allowed) {
  if (!allowed.empty() && allowed.size() != static_cast<std::size_t>(h.order()))
    throw std::invalid_argument("allowed-set count must match pattern order");
  if (h.order() > g.order() || h.size() > g.size()) return std::nullopt;
  if (h.order() == 0) return std::vector<int>{};
  return Embedder(g, h, allowed, false).run();
}

bool contains_induced(const Graph& g, const Graph& h) {
  if (h.order() > g.order()) return false;
  if (h.order() == g.order()) return is_isomorphic(g, h);
  return find_induced_embedding(g, h).has_value();
}

bool contains_any_induced(const Graph& g, std::span<const Graph> family) {
  return std::any_of(family.begin(), family.end(), [&](const Graph& h) { return contains_induced(g, h); });
}

std::vector<Graph> induced_subgraph_classes(const Graph& g) {
  std::vector<Graph> out;
  std::unordered_set<CanonicalKey, CanonicalKeyHash> seen;
  // Level by level from g downwards: each class is reached via one-vertex deletions.
  std::vector<Graph> frontier{g};
  seen.insert(g.canonical_key());
  while (!frontier.empty()) {
    std::vector<Graph> next;
    for (const Graph& h : frontier) {
      out.push_back(h);
      for (int v = 0; v < h.order(); ++v) {
        Graph child = delete_vertex(h, v);
        if (seen.insert(child.canonical_key()).second) next.push_back(std::move(child));
      }
    }
    frontier = std::move(next);
  }
  return out;
}

}  // namespace unigraph
