#include "unigraph/generate.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "unigraph/canon.hpp"
#include "unigraph/error.hpp"
#include "unigraph/parallel.hpp"

namespace unigraph {
namespace {

void sort_by_key(std::vector<Graph>& gs) {
  std::sort(gs.begin(), gs.end(),
            [](const Graph& a, const Graph& b) { return a.canonical_key() < b.canonical_key(); });
}

// Children of one parent that pass the canonical-parent test, deduplicated.
std::vector<Graph> accepted_children(const Graph& parent) {
  const int m = parent.order();
  const int n = m + 1;
  const CanonicalKey& parent_key = parent.canonical_key();
  std::map<CanonicalKey, Graph> kept;
  std::array<VertexSet, kMaxVertices> rows{};
  for (VertexSet nbrs = 0; nbrs <= full_set(m); ++nbrs) {
    for (int v = 0; v < m; ++v) rows[v] = parent.neighbors(v) | (((nbrs >> v) & 1U) ? bit(m) : 0);
    rows[m] = nbrs;
    Graph child = Graph::from_rows(n, std::span(rows.data(), n));
    const CanonicalLabeling lab = canonical_labeling(child);
    const int last = static_cast<int>(std::find(lab.labels.begin(), lab.labels.end(), m) - lab.labels.begin());
    if (last == m || delete_vertex(child, last).canonical_key() == parent_key)
      kept.try_emplace(lab.key, graph_from_key(lab.key));
    if (nbrs == full_set(m)) break;
  }
  std::vector<Graph> out;
  out.reserve(kept.size());
  for (auto& [key, g] : kept) out.push_back(g);
  return out;
}

}  // namespace

std::vector<Graph> extend_by_one_vertex(const std::vector<Graph>& parents, int jobs) {
  std::vector<std::vector<Graph>> per_parent(parents.size());
  parallel_for(parents.size(), jobs, [&](std::size_t i) { per_parent[i] = accepted_children(parents[i]); });
  std::vector<Graph> out;
  for (auto& v : per_parent)
    for (auto& g : v) out.push_back(std::move(g));
  sort_by_key(out);
  return out;
}

std::vector<Graph> all_graphs(int n, int jobs) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  if (n > kMaxGenerationOrder) throw CapacityError("all_graphs supports at most 10 vertices");
  std::vector<Graph> level{Graph()};
  for (int m = 1; m <= n; ++m) level = extend_by_one_vertex(level, jobs);
  return level;
}

std::vector<Graph> all_graphs_labeled(int n) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  if (n > 7) throw CapacityError("labeled enumeration supports at most 7 vertices");
  std::vector<std::pair<int, int>> slots;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) slots.emplace_back(i, j);
  std::set<CanonicalKey> seen;
  std::vector<Graph> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
    std::array<VertexSet, kMaxVertices> rows{};
    for (std::size_t e = 0; e < slots.size(); ++e)
      if ((mask >> e) & 1U) {
        rows[slots[e].first] |= bit(slots[e].second);
        rows[slots[e].second] |= bit(slots[e].first);
      }
    const CanonicalKey key = canonical_form(n, std::span(rows.data(), n));
    if (seen.insert(key).second) out.push_back(graph_from_key(key));
  }
  sort_by_key(out);
  return out;
}

}  // namespace unigraph
