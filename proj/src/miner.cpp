#include "unigraph/miner.hpp"

#include <algorithm>
#include <chrono>
#include <unordered_map>

#include "unigraph/canon.hpp"
#include "unigraph/error.hpp"
#include "unigraph/generate.hpp"
#include "unigraph/graph6.hpp"
#include "unigraph/parallel.hpp"
#include "unigraph/subgraph.hpp"
#include "unigraph/unigraph.hpp"

namespace unigraph {

std::string MiningTarget::name() const {
  if (!unigraph_closure) return base.to_string();
  switch (base.kind()) {
    case ClassSpec::Kind::kAll: return "H(U)";
    case ClassSpec::Kind::kBipartite: return "H(U_2)";
    case ClassSpec::Kind::kKPartite: return "H(U_" + std::to_string(base.k()) + ")";
    case ClassSpec::Kind::kChordal: return "H(U_C)";
    case ClassSpec::Kind::kSplit: return "H(U_S)";
    case ClassSpec::Kind::kPerfect: return "H(U_P)";
  }
  return "?";
}

MiningTarget MiningTarget::parse(std::string_view text) {
  if (text.starts_with("class:")) return {ClassSpec::parse(text.substr(6)), false};
  if (text == "H(U)") return {ClassSpec::all(), true};
  if (text == "H(U_2)") return {ClassSpec::bipartite(), true};
  if (text == "H(U_C)") return {ClassSpec::chordal(), true};
  if (text == "H(U_P)") return {ClassSpec::perfect(), true};
  if (text == "H(U_S)") return {ClassSpec::split(), true};
  if (text.starts_with("H(U_") && text.ends_with(")")) {
    const std::string k(text.substr(4, text.size() - 5));
    return {ClassSpec::parse("kpartite:" + k), true};
  }
  // A bare class token means H(𝒰_𝒜) for that class.
  return {ClassSpec::parse(text), true};
}

std::vector<Graph> MiningReport::graphs() const {
  std::vector<Graph> out;
  for (const auto& e : forbidden) out.push_back(e.graph);
  return out;
}

namespace {

using Memo = std::unordered_map<CanonicalKey, bool, CanonicalKeyHash>;

// Membership given the memoized membership of all graphs one vertex smaller.
bool decide(const Graph& g, const MiningTarget& target, const Memo& smaller, bool& children_in) {
  children_in = true;
  for (int v = 0; v < g.order() && children_in; ++v) children_in = smaller.at(delete_vertex(g, v).canonical_key());
  if (!children_in || !member(g, target.base)) return false;
  if (!target.unigraph_closure) return true;
  return count_realizations_in(degree_sequence(g), target.base, 2) == 1;
}

struct NamedGraph {
  const char* name;
  Graph graph;
};

const std::vector<NamedGraph>& catalog() {
  static const std::vector<NamedGraph> named = [] {
    const Graph k2 = complete_graph(2), k3 = complete_graph(3);
    std::vector<NamedGraph> v = {
        {"K3", k3},
        {"C4", cycle_graph(4)},
        {"2K2", disjoint_union(k2, k2)},
        {"C5", cycle_graph(5)},
        {"P5", path_graph(5)},
        {"co-P5", complement(path_graph(5))},
        {"K3+K2", disjoint_union(k3, k2)},
        {"co-(K3+K2)", complement(disjoint_union(k3, k2))},
        {"2P3", disjoint_union(path_graph(3), path_graph(3))},
        {"co-2P3", complement(disjoint_union(path_graph(3), path_graph(3)))},
        {"P4+K2", disjoint_union(path_graph(4), k2)},
        {"co-(P4+K2)", complement(disjoint_union(path_graph(4), k2))},
        {"C4+K2", disjoint_union(cycle_graph(4), k2)},
        {"co-(C4+K2)", complement(disjoint_union(cycle_graph(4), k2))},
        {"P6", path_graph(6)},
        {"co-P6", complement(path_graph(6))},
        {"C6", cycle_graph(6)},
        {"C7", cycle_graph(7)},
        {"K4", complete_graph(4)},
    };
    return v;
  }();
  return named;
}

// The four split members of F_H(U) come in two complementary pairs; the pair
// whose sparser member has the smaller key is R, the other S.
void label_split_pairs(std::vector<ForbiddenEntry>& entries) {
  std::vector<std::size_t> split_idx;
  for (std::size_t i = 0; i < entries.size(); ++i)
    if (is_split(entries[i].graph)) split_idx.push_back(i);
  if (split_idx.size() != 4) return;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  std::vector<bool> used(4, false);
  for (std::size_t a = 0; a < 4; ++a) {
    if (used[a]) continue;
    for (std::size_t b = a + 1; b < 4; ++b)
      if (!used[b] && is_isomorphic(complement(entries[split_idx[a]].graph), entries[split_idx[b]].graph)) {
        used[a] = used[b] = true;
        pairs.emplace_back(split_idx[a], split_idx[b]);
        break;
      }
  }
  if (pairs.size() != 2) return;
  for (auto& [x, y] : pairs)
    if (entries[y].graph.size() < entries[x].graph.size() ||
        (entries[y].graph.size() == entries[x].graph.size() &&
         entries[y].graph.canonical_key() < entries[x].graph.canonical_key()))
      std::swap(x, y);
  std::sort(pairs.begin(), pairs.end(), [&](const auto& p, const auto& q) {
    return entries[p.first].graph.canonical_key() < entries[q.first].graph.canonical_key();
  });
  const char* names[2][2] = {{"R", "co-R"}, {"S", "co-S"}};
  for (std::size_t i = 0; i < 2; ++i) {
    if (entries[pairs[i].first].label.empty()) entries[pairs[i].first].label = names[i][0];
    if (entries[pairs[i].second].label.empty()) entries[pairs[i].second].label = names[i][1];
  }
}

}  // namespace

std::optional<std::string> known_graph_name(const Graph& g) {
  for (const auto& [name, h] : catalog())
    if (is_isomorphic(g, h)) return std::string(name);
  return std::nullopt;
}

bool in_target(const Graph& g, const MiningTarget& target) {
  if (!target.unigraph_closure) {
    for (const Graph& h : induced_subgraph_classes(g))
      if (!member(h, target.base)) return false;
    return true;
  }
  return is_hereditary_A_unigraph(g, target.base);
}

MiningReport mine_forbidden(const MiningTarget& target, int max_n, int jobs) {
  if (max_n > kMaxGenerationOrder) throw CapacityError("mining supports at most 10 vertices");
  const auto start = std::chrono::steady_clock::now();
  MiningReport report;
  report.target = target.name();
  report.max_n = max_n;

  Memo smaller{{CanonicalKey{}, member(Graph(), target.base)}};
  std::vector<Graph> level{Graph()};
  std::vector<std::vector<Graph>> all_levels{level};
  std::vector<Memo> memos{smaller};
  report.checked = 1;
  for (int n = 1; n <= max_n; ++n) {
    level = extend_by_one_vertex(level, jobs);
    std::vector<char> in(level.size()), minimal(level.size());
    parallel_for(level.size(), jobs, [&](std::size_t i) {
      bool children_in = false;
      in[i] = decide(level[i], target, smaller, children_in) ? 1 : 0;
      minimal[i] = (!in[i] && children_in) ? 1 : 0;
    });
    Memo memo;
    for (std::size_t i = 0; i < level.size(); ++i) {
      memo.emplace(level[i].canonical_key(), in[i] != 0);
      if (minimal[i]) {
        const Graph& g = level[i];
        report.forbidden.push_back({g, graph6_encode(g), degree_sequence(g), n, known_graph_name(g).value_or("")});
        ++report.counts[n];
      }
    }
    report.checked += level.size();
    smaller = memo;
    all_levels.push_back(level);
    memos.push_back(std::move(memo));
  }
  if (target.unigraph_closure && target.base.kind() == ClassSpec::Kind::kAll) label_split_pairs(report.forbidden);

  // Self-consistency: forbidden-list membership agrees with the oracle.
  const std::vector<Graph> family = report.graphs();
  for (std::size_t n = 0; n < all_levels.size(); ++n) {
    const auto& graphs = all_levels[n];
    std::vector<char> bad(graphs.size(), 0);
    parallel_for(graphs.size(), jobs, [&](std::size_t i) {
      const bool by_list = !contains_any_induced(graphs[i], family);
      bad[i] = by_list != memos[n].at(graphs[i].canonical_key()) ? 1 : 0;
    });
    for (std::size_t i = 0; i < graphs.size(); ++i)
      if (bad[i]) report.counterexamples.push_back(graph6_encode(graphs[i]));
  }
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace unigraph
