#include "unigraph/rao.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>

#include "unigraph/parallel.hpp"
#include "unigraph/subgraph.hpp"

namespace unigraph {

RaoAnalyzer::RaoAnalyzer() : oracle_(std::make_unique<HereditaryOracle>(ClassSpec::bipartite())) {}

const std::vector<SidedGraph>& RaoAnalyzer::sided(const BipartitionedPair& p) {
  {
    std::lock_guard lock(mutex_);
    if (auto it = sided_.find(p); it != sided_.end()) return it->second;
  }
  auto computed = sided_realizations(p);
  std::lock_guard lock(mutex_);
  return sided_.try_emplace(p, std::move(computed)).first->second;
}

bool RaoAnalyzer::contains(const BipartitionedPair& big, const BipartitionedPair& small) {
  if (small.order() > big.order() || !big.realizable() || !small.realizable()) return false;
  const auto& bigs = sided(big);
  const auto& smalls = sided(small);
  for (const SidedGraph& g : bigs) {
    const VertexSet g_side = g.side, g_other = g.graph.vertices() & ~g.side;
    for (const SidedGraph& h : smalls) {
      for (int orientation = 0; orientation < 2; ++orientation) {
        std::vector<VertexSet> allowed(h.graph.order());
        for (int v = 0; v < h.graph.order(); ++v) {
          const bool on_first = (h.side >> v) & 1U;
          allowed[v] = (on_first == (orientation == 0)) ? g_side : g_other;
        }
        if (find_induced_embedding(g.graph, h.graph, allowed)) return true;
      }
    }
  }
  return false;
}

bool RaoAnalyzer::sequence_contains(const DegreeSequence& d, const BipartitionedPair& small) {
  for (const auto& p : bipartitions_of(d))
    if (contains(p, small)) return true;
  return false;
}

bool RaoAnalyzer::is_forbidden(const BipartitionedPair& p) {
  {
    std::lock_guard lock(mutex_);
    if (auto it = forbidden_.find(p); it != forbidden_.end()) return it->second;
  }
  bool forbidden = p.realizable();
  if (forbidden)
    for (const Graph& g : enumerate_bipartite_realizations(p))
      if (oracle_->hereditary(g)) {
        forbidden = false;
        break;
      }
  std::lock_guard lock(mutex_);
  forbidden_.emplace(p, forbidden);
  return forbidden;
}

bool RaoAnalyzer::is_minimal(const BipartitionedPair& p) {
  if (!is_forbidden(p)) return false;
  // p ⪰ q with q ≠ p means some sided realization of p has a proper induced
  // subgraph whose inherited side pair is q.
  for (const SidedGraph& g : sided(p)) {
    const VertexSet all = g.graph.vertices();
    for (VertexSet u = 0; u < all; ++u) {
      const Graph sub = induced_subgraph(g.graph, u);
      VertexSet sub_side = 0;
      int k = 0;
      for_each_vertex(u, [&](int v) {
        if ((g.side >> v) & 1U) sub_side |= bit(k);
        ++k;
      });
      if (is_forbidden(pair_of(sub, sub_side))) return false;
    }
  }
  return true;
}

std::vector<BipartitionedPair> RaoAnalyzer::realizable_pairs(int max_n) const {
  // Non-increasing lists of the given length with entries in [0, cap].
  std::function<void(int, int, int, std::vector<int>&, std::vector<std::vector<int>>&)> lists =
      [&](int len, int cap, int hi, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
        if (static_cast<int>(cur.size()) == len) {
          out.push_back(cur);
          return;
        }
        for (int x = std::min(hi, cap); x >= 0; --x) {
          cur.push_back(x);
          lists(len, cap, x, cur, out);
          cur.pop_back();
        }
      };
  std::set<BipartitionedPair> out;
  for (int n = 0; n <= max_n; ++n)
    for (int na = 0; na <= n / 2; ++na) {
      const int nb = n - na;
      std::vector<std::vector<int>> as, bs;
      std::vector<int> cur;
      lists(na, nb, nb, cur, as);
      lists(nb, na, na, cur, bs);
      std::map<int, std::vector<const std::vector<int>*>> by_sum;
      for (const auto& b : bs) by_sum[std::accumulate(b.begin(), b.end(), 0)].push_back(&b);
      for (const auto& a : as) {
        auto it = by_sum.find(std::accumulate(a.begin(), a.end(), 0));
        if (it == by_sum.end()) continue;
        for (const auto* b : it->second) {
          BipartitionedPair p(a, *b);
          if (p.realizable()) out.insert(std::move(p));
        }
      }
    }
  return {out.begin(), out.end()};
}

std::vector<ForbiddenPairRecord> RaoAnalyzer::minimal_pairs(int max_n, int jobs) {
  const auto pairs = realizable_pairs(max_n);
  // Forbidden status of smaller pairs is shared; fill it in increasing order
  // so the minimality checks only read memoized values.
  std::vector<char> minimal(pairs.size(), 0);
  for (int n = 0; n <= max_n; ++n) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < pairs.size(); ++i)
      if (pairs[i].order() == n) idx.push_back(i);
    parallel_for(idx.size(), jobs, [&](std::size_t j) { is_forbidden(pairs[idx[j]]); });
    parallel_for(idx.size(), jobs, [&](std::size_t j) { minimal[idx[j]] = is_minimal(pairs[idx[j]]) ? 1 : 0; });
  }
  std::vector<ForbiddenPairRecord> out;
  for (std::size_t i = 0; i < pairs.size(); ++i)
    if (minimal[i]) out.push_back({pairs[i], enumerate_bipartite_realizations(pairs[i]), true});
  std::stable_sort(out.begin(), out.end(), [](const ForbiddenPairRecord& a, const ForbiddenPairRecord& b) {
    return a.pair.order() < b.pair.order();
  });
  return out;
}

bool rao_contains(const BipartitionedPair& big, const BipartitionedPair& small) {
  return RaoAnalyzer().contains(big, small);
}

bool sequence_rao_contains(const DegreeSequence& d, const BipartitionedPair& small) {
  return RaoAnalyzer().sequence_contains(d, small);
}

bool is_forbidden_pair(const BipartitionedPair& p) { return RaoAnalyzer().is_forbidden(p); }

bool is_rao_minimal(const BipartitionedPair& p, int universe_bound) {
  if (p.order() > universe_bound)
    throw std::invalid_argument("pair " + p.to_string() + " exceeds the universe bound of " +
                                std::to_string(universe_bound) + " vertices");
  return RaoAnalyzer().is_minimal(p);
}

std::vector<ForbiddenPairRecord> enumerate_minimal_pairs(int max_n, int jobs) {
  return RaoAnalyzer().minimal_pairs(max_n, jobs);
}

}  // namespace unigraph
