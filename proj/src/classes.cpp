#include "unigraph/classes.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>

#include "unigraph/error.hpp"

namespace unigraph {

ClassSpec ClassSpec::kpartite(int k) {
  if (k < 2) throw std::invalid_argument("kpartite needs k >= 2");
  return ClassSpec(Kind::kKPartite, k);
}

ClassSpec ClassSpec::parse(std::string_view token) {
  if (token == "all") return all();
  if (token == "bipartite") return bipartite();
  if (token == "chordal") return chordal();
  if (token == "split") return split();
  if (token == "perfect") return perfect();
  if (token.starts_with("kpartite:")) {
    std::string_view num = token.substr(9);
    int k = 0;
    auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), k);
    if (ec != std::errc() || ptr != num.data() + num.size() || k < 2)
      throw ParseError("kpartite needs an integer k >= 2, got '" + std::string(num) + "'");
    return kpartite(k);
  }
  throw ParseError("unknown class '" + std::string(token) + "'");
}

std::string ClassSpec::to_string() const {
  switch (kind_) {
    case Kind::kAll: return "all";
    case Kind::kBipartite: return "bipartite";
    case Kind::kKPartite: return "kpartite:" + std::to_string(k_);
    case Kind::kChordal: return "chordal";
    case Kind::kSplit: return "split";
    case Kind::kPerfect: return "perfect";
  }
  return "?";
}

std::optional<VertexSet> bipartition(const Graph& g) {
  const int n = g.order();
  std::vector<int> color(n, -1);
  std::vector<int> queue;
  for (int s = 0; s < n; ++s) {
    if (color[s] >= 0) continue;
    color[s] = 0;
    queue.assign(1, s);
    for (std::size_t i = 0; i < queue.size(); ++i) {
      const int v = queue[i];
      bool clash = false;
      for_each_vertex(g.neighbors(v), [&](int w) {
        if (color[w] < 0) {
          color[w] = 1 - color[v];
          queue.push_back(w);
        } else if (color[w] == color[v]) {
          clash = true;
        }
      });
      if (clash) return std::nullopt;
    }
  }
  VertexSet side = 0;
  for (int v = 0; v < n; ++v)
    if (color[v] == 0) side |= bit(v);
  return side;
}

bool is_bipartite(const Graph& g) { return bipartition(g).has_value(); }

namespace {

void max_clique(const Graph& g, int size, VertexSet candidates, VertexSet excluded, int& best) {
  if (candidates == 0 && excluded == 0) {
    best = std::max(best, size);
    return;
  }
  if (size + popcount(candidates) <= best) return;
  // Pivot with most neighbours among candidates.
  int pivot = -1, pivot_hits = -1;
  for_each_vertex(candidates | excluded, [&](int u) {
    const int h = popcount(candidates & g.neighbors(u));
    if (h > pivot_hits) {
      pivot_hits = h;
      pivot = u;
    }
  });
  VertexSet branch = candidates & ~g.neighbors(pivot);
  for_each_vertex(branch, [&](int v) {
    max_clique(g, size + 1, candidates & g.neighbors(v), excluded & g.neighbors(v), best);
    candidates &= ~bit(v);
    excluded |= bit(v);
  });
}

class Colorer {
public:
  Colorer(const Graph& g, int k) : g_(g), k_(k), color_(g.order(), -1) {}

  bool run() { return extend(0, 0); }

private:
  bool extend(int colored, int used) {
    const int n = g_.order();
    if (colored == n) return true;
    // DSATUR choice: most distinct neighbour colours, then highest degree.
    int pick = -1, best_sat = -1, best_deg = -1;
    for (int v = 0; v < n; ++v) {
      if (color_[v] >= 0) continue;
      const int sat = popcount(saturation(v));
      const int deg = g_.degree(v);
      if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
        pick = v;
        best_sat = sat;
        best_deg = deg;
      }
    }
    const VertexSet forbidden = saturation(pick);
    const int limit = std::min(k_, used + 1);
    for (int c = 0; c < limit; ++c) {
      if ((forbidden >> c) & 1U) continue;
      color_[pick] = c;
      if (extend(colored + 1, std::max(used, c + 1))) return true;
    }
    color_[pick] = -1;
    return false;
  }

  VertexSet saturation(int v) const {
    VertexSet s = 0;
    for_each_vertex(g_.neighbors(v), [&](int w) {
      if (color_[w] >= 0) s |= bit(color_[w]);
    });
    return s;
  }

  const Graph& g_;
  int k_;
  std::vector<int> color_;
};

int greedy_colors(const Graph& g) {
  std::vector<int> order(g.order());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return g.degree(a) > g.degree(b); });
  std::vector<int> color(g.order(), -1);
  int used = 0;
  for (int v : order) {
    VertexSet taken = 0;
    for_each_vertex(g.neighbors(v), [&](int w) {
      if (color[w] >= 0) taken |= bit(color[w]);
    });
    color[v] = std::countr_one(taken);
    used = std::max(used, color[v] + 1);
  }
  return used;
}

}  // namespace

int clique_number(const Graph& g) {
  int best = 0;
  max_clique(g, 0, g.vertices(), 0, best);
  return best;
}

bool is_k_colorable(const Graph& g, int k) {
  if (g.order() == 0) return true;
  if (k <= 0) return false;
  return Colorer(g, k).run();
}

int chromatic_number(const Graph& g) {
  if (g.order() == 0) return 0;
  const int upper = greedy_colors(g);
  for (int k = clique_number(g); k < upper; ++k)
    if (is_k_colorable(g, k)) return k;
  return upper;
}

bool is_k_partite(const Graph& g, int k) {
  if (k == 2) return is_bipartite(g);
  return is_k_colorable(g, k);
}

bool is_valid_split_partition(const Graph& g, const SplitPartition& p) {
  if ((p.clique & p.stable) != 0 || (p.clique | p.stable) != g.vertices()) return false;
  bool ok = true;
  for_each_vertex(p.clique, [&](int v) { ok = ok && (p.clique & ~bit(v) & ~g.neighbors(v)) == 0; });
  for_each_vertex(p.stable, [&](int v) { ok = ok && (g.neighbors(v) & p.stable) == 0; });
  return ok;
}

namespace {

// Degree-sorted prefix of length m = max{i : d_i ≥ i-1}.
SplitPartition prefix_partition(const Graph& g) {
  std::vector<int> order(g.order());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return g.degree(a) > g.degree(b); });
  int m = 0;
  for (int i = 0; i < g.order(); ++i)
    if (g.degree(order[i]) >= i) m = i + 1;
  SplitPartition p;
  for (int i = 0; i < m; ++i) p.clique |= bit(order[i]);
  p.stable = g.vertices() & ~p.clique;
  return p;
}

}  // namespace

bool is_split(const Graph& g) { return is_valid_split_partition(g, prefix_partition(g)); }

std::vector<SplitPartition> split_partitions(const Graph& g) {
  const SplitPartition base = prefix_partition(g);
  if (!is_valid_split_partition(g, base)) return {};
  // Any two KS-partitions differ by moving at most one vertex each way.
  std::vector<SplitPartition> out;
  auto consider = [&](VertexSet clique) {
    SplitPartition p{clique, g.vertices() & ~clique};
    if (is_valid_split_partition(g, p) && std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
  };
  const VertexSet out_options = base.clique;
  const VertexSet in_options = base.stable;
  consider(base.clique);
  for_each_vertex(out_options, [&](int a) { consider(base.clique & ~bit(a)); });
  for_each_vertex(in_options, [&](int b) {
    consider(base.clique | bit(b));
    for_each_vertex(out_options, [&](int a) { consider((base.clique & ~bit(a)) | bit(b)); });
  });
  std::sort(out.begin(), out.end(), [](const SplitPartition& a, const SplitPartition& b) { return a.clique < b.clique; });
  return out;
}

bool is_chordal(const Graph& g) {
  const int n = g.order();
  std::vector<int> order;  // maximum cardinality search visiting order
  std::vector<int> weight(n, 0);
  VertexSet done = 0;
  for (int step = 0; step < n; ++step) {
    int pick = -1;
    for (int v = 0; v < n; ++v)
      if (!((done >> v) & 1U) && (pick < 0 || weight[v] > weight[pick])) pick = v;
    order.push_back(pick);
    done |= bit(pick);
    for_each_vertex(g.neighbors(pick) & ~done, [&](int w) { ++weight[w]; });
  }
  // Reverse visiting order is a perfect elimination ordering iff chordal:
  // the earlier-visited neighbours of each vertex, minus the latest of them,
  // must all be adjacent to that latest one.
  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) pos[order[i]] = i;
  for (int i = 0; i < n; ++i) {
    const int v = order[i];
    VertexSet earlier = 0;
    int latest = -1;
    for_each_vertex(g.neighbors(v), [&](int w) {
      if (pos[w] < i) {
        earlier |= bit(w);
        if (latest < 0 || pos[w] > pos[latest]) latest = w;
      }
    });
    if (latest >= 0 && (earlier & ~bit(latest) & ~g.neighbors(latest)) != 0) return false;
  }
  return true;
}

namespace {

// Extends the induced path start..last (all vertices > start) looking for an
// induced odd cycle of length ≥ 5 through `start`.
bool odd_hole_from(const Graph& g, int start, int last, VertexSet path, VertexSet interior_nbrs, int length) {
  // interior_nbrs: union of neighbourhoods of path vertices other than start and last.
  VertexSet cand = g.neighbors(last) & ~path & ~interior_nbrs & ~full_set(start + 1);
  bool found = false;
  for_each_vertex(cand, [&](int v) {
    if (found) return;
    if (length >= 2 && g.adjacent(v, start)) {
      if (length >= 3) {
        const int cycle = length + 1;
        if (cycle >= 5 && cycle % 2 == 1) found = true;
      }
      return;
    }
    const VertexSet next_interior = length >= 2 ? (interior_nbrs | g.neighbors(last)) : interior_nbrs;
    if (odd_hole_from(g, start, v, path | bit(v), next_interior, length + 1)) found = true;
  });
  return found;
}

}  // namespace

bool has_odd_hole(const Graph& g) {
  for (int s = 0; s < g.order(); ++s)
    if (odd_hole_from(g, s, s, bit(s), 0, 1)) return true;
  return false;
}

bool is_perfect(const Graph& g) { return !has_odd_hole(g) && !has_odd_hole(complement(g)); }

bool is_apex_perfect(const Graph& g) {
  if (is_perfect(g)) return true;
  for (int v = 0; v < g.order(); ++v)
    if (is_perfect(delete_vertex(g, v))) return true;
  return false;
}

bool member(const Graph& g, const ClassSpec& spec) {
  switch (spec.kind()) {
    case ClassSpec::Kind::kAll: return true;
    case ClassSpec::Kind::kBipartite: return is_bipartite(g);
    case ClassSpec::Kind::kKPartite: return is_k_partite(g, spec.k());
    case ClassSpec::Kind::kChordal: return is_chordal(g);
    case ClassSpec::Kind::kSplit: return is_split(g);
    case ClassSpec::Kind::kPerfect: return is_perfect(g);
  }
  return false;
}

}  // namespace unigraph
