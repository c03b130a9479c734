#include <optional>
#include <stdexcept>

#include "unigraph/error.hpp"
#include "unigraph/unigraph.hpp"

namespace unigraph {

Graph compose(const std::vector<CompositionTerm>& terms, const Graph& tail) {
  int n = tail.order();
  for (const auto& t : terms) {
    if (!is_valid_split_partition(t.graph, t.partition))
      throw std::invalid_argument("composition term has an invalid KS-partition");
    n += t.graph.order();
  }
  if (n > kMaxVertices) throw CapacityError("composition exceeds 32 vertices");

  std::array<VertexSet, kMaxVertices> rows{};
  std::vector<int> offset;
  int at = 0;
  for (const auto& t : terms) {
    offset.push_back(at);
    at += t.graph.order();
  }
  const int tail_at = at;
  for (int v = 0; v < tail.order(); ++v) rows[tail_at + v] = tail.neighbors(v) << tail_at;
  // Each clique joins everything to its right: later terms and the tail.
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const Graph& g = terms[i].graph;
    const int off = offset[i];
    const VertexSet right = full_set(n) & ~full_set(off + g.order());
    for (int v = 0; v < g.order(); ++v) {
      rows[off + v] |= g.neighbors(v) << off;
      if ((terms[i].partition.clique >> v) & 1U) {
        rows[off + v] |= right;
        for_each_vertex(right, [&](int w) { rows[w] |= bit(off + v); });
      }
    }
  }
  return Graph::from_rows(n, std::span(rows.data(), n));
}

namespace {

struct Split {
  VertexSet clique = 0;
  VertexSet stable = 0;
};

// (K, S) with K ∪ S = w, K a clique complete to rest, S stable anticomplete to rest.
std::optional<Split> split_off(const Graph& g, VertexSet w, VertexSet rest) {
  Split s;
  bool ok = true;
  for_each_vertex(w, [&](int v) {
    const VertexSet out = g.neighbors(v) & rest;
    if (out == rest)
      s.clique |= bit(v);
    else if (out == 0)
      s.stable |= bit(v);
    else
      ok = false;
  });
  if (!ok) return std::nullopt;
  for_each_vertex(s.clique, [&](int v) { ok = ok && (s.clique & ~bit(v) & ~g.neighbors(v)) == 0; });
  for_each_vertex(s.stable, [&](int v) { ok = ok && (g.neighbors(v) & s.stable) == 0; });
  if (!ok) return std::nullopt;
  return s;
}

std::vector<int> members(VertexSet s) {
  std::vector<int> out;
  for_each_vertex(s, [&](int v) { out.push_back(v); });
  return out;
}

}  // namespace

Decomposition decompose(const Graph& g) {
  if (g.order() > 20) throw CapacityError("decompose supports at most 20 vertices");
  Decomposition out;
  VertexSet remaining = g.vertices();
  for (;;) {
    const std::vector<int> verts = members(remaining);
    const int m = static_cast<int>(verts.size());
    std::optional<std::pair<VertexSet, Split>> found;
    // Smallest factor first (Gosper order within a size), so each peeled
    // term is itself indecomposable.
    for (int size = 1; size < m && !found; ++size) {
      for (std::uint32_t sel = (1U << size) - 1; sel < (1U << m) && !found;) {
        VertexSet w = 0;
        for (int i = 0; i < m; ++i)
          if ((sel >> i) & 1U) w |= bit(verts[i]);
        if (auto s = split_off(g, w, remaining & ~w)) found.emplace(w, *s);
        const std::uint32_t c = sel & (~sel + 1), r = sel + c;
        sel = (((r ^ sel) >> 2) / c) | r;
      }
    }
    if (!found) break;
    const auto& [w, split] = *found;
    const std::vector<int> wv = members(w);
    CompositionTerm term{induced_subgraph(g, w), {}};
    for (std::size_t i = 0; i < wv.size(); ++i) {
      if ((split.clique >> wv[i]) & 1U)
        term.partition.clique |= bit(static_cast<int>(i));
      else
        term.partition.stable |= bit(static_cast<int>(i));
    }
    out.terms.push_back(std::move(term));
    out.term_vertices.push_back(wv);
    remaining &= ~w;
  }
  out.tail = induced_subgraph(g, remaining);
  out.tail_vertices = members(remaining);
  return out;
}

}  // namespace unigraph
