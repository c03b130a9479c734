#include "unigraph/bipartite_pair.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "unigraph/canon.hpp"
#include "unigraph/error.hpp"

namespace unigraph {

BipartitionedPair::BipartitionedPair(std::vector<int> d1, std::vector<int> d2)
    : first_(std::move(d1)), second_(std::move(d2)) {
  for (int x : first_)
    if (x < 0) throw std::invalid_argument("negative degree");
  for (int x : second_)
    if (x < 0) throw std::invalid_argument("negative degree");
  std::sort(first_.begin(), first_.end(), std::greater<>());
  std::sort(second_.begin(), second_.end(), std::greater<>());
  if (first_ < second_) std::swap(first_, second_);
}

BipartitionedPair BipartitionedPair::parse(std::string_view text) {
  while (!text.empty() && (text.front() == ' ' || text.front() == '{' || text.front() == '(')) text.remove_prefix(1);
  while (!text.empty() && (text.back() == ' ' || text.back() == '}' || text.back() == ')' || text.back() == '\n'))
    text.remove_suffix(1);
  const std::size_t bar = text.find('|');
  if (bar == std::string_view::npos) throw ParseError("bipartitioned pair needs '|' between the sides");
  if (text.find('|', bar + 1) != std::string_view::npos) throw ParseError("bipartitioned pair has more than two sides");
  const DegreeSequence a = DegreeSequence::parse(text.substr(0, bar));
  const DegreeSequence b = DegreeSequence::parse(text.substr(bar + 1));
  return BipartitionedPair({a.terms().begin(), a.terms().end()}, {b.terms().begin(), b.terms().end()});
}

std::string BipartitionedPair::to_string() const {
  auto side = [](const std::vector<int>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s;
  };
  return "(" + side(first_) + "|" + side(second_) + ")";
}

DegreeSequence BipartitionedPair::combined() const {
  std::vector<int> all = first_;
  all.insert(all.end(), second_.begin(), second_.end());
  return DegreeSequence(std::move(all));
}

bool BipartitionedPair::realizable() const {
  const long long s1 = std::accumulate(first_.begin(), first_.end(), 0LL);
  const long long s2 = std::accumulate(second_.begin(), second_.end(), 0LL);
  if (s1 != s2) return false;
  long long left = 0;
  for (std::size_t k = 1; k <= first_.size(); ++k) {
    left += first_[k - 1];
    long long right = 0;
    for (int b : second_) right += std::min<long long>(b, static_cast<long long>(k));
    if (left > right) return false;
  }
  return true;
}

namespace {

bool gale_ryser(std::vector<int> a, std::vector<int> b) {
  return BipartitionedPair(std::move(a), std::move(b)).realizable();
}

// Side A occupies vertices [0, |A|), side B the rest. A-vertices choose
// neighbours in B; B-vertices with equal target and identical adjacency so
// far are interchangeable, so only class prefixes are chosen.
class BipartiteSearch {
public:
  using Leaf = std::function<Visit(const std::array<VertexSet, kMaxVertices>&)>;

  BipartiteSearch(const std::vector<int>& a, const std::vector<int>& b, Leaf leaf)
      : na_(static_cast<int>(a.size())), n_(static_cast<int>(a.size() + b.size())), leaf_(std::move(leaf)) {
    for (int i = 0; i < n_; ++i) target_[i] = residual_[i] = i < na_ ? a[i] : b[i - na_];
  }

  void run() { process(0); }

private:
  struct Class {
    VertexSet members;
    int size;
  };

  void process(int i) {
    if (stop_) return;
    if (i == na_) {
      for (int j = na_; j < n_; ++j)
        if (residual_[j] != 0) return;
      if (leaf_(rows_) == Visit::kStop) stop_ = true;
      return;
    }
    std::vector<Class> classes;
    for (int j = na_; j < n_; ++j) {
      if (residual_[j] == 0) continue;
      bool placed = false;
      for (auto& c : classes) {
        const int rep = std::countr_zero(c.members);
        if (target_[rep] == target_[j] && rows_[rep] == rows_[j]) {
          c.members |= bit(j);
          ++c.size;
          placed = true;
          break;
        }
      }
      if (!placed) classes.push_back({bit(j), 1});
    }
    choose(i, residual_[i], classes, 0, 0);
  }

  void choose(int i, int need, const std::vector<Class>& classes, std::size_t ci, VertexSet picked) {
    if (stop_) return;
    if (need == 0) {
      apply(i, picked, +1);
      if (feasible(i + 1)) process(i + 1);
      apply(i, picked, -1);
      return;
    }
    if (ci == classes.size()) return;
    const Class& c = classes[ci];
    for (int take = std::min(need, c.size); take >= 0; --take) {
      VertexSet chosen = 0, m = c.members;
      for (int t = 0; t < take; ++t) {
        chosen |= m & (~m + 1);
        m &= m - 1;
      }
      choose(i, need - take, classes, ci + 1, picked | chosen);
    }
  }

  void apply(int i, VertexSet picked, int sign) {
    for_each_vertex(picked, [&](int j) {
      if (sign > 0) {
        rows_[i] |= bit(j);
        rows_[j] |= bit(i);
      } else {
        rows_[i] &= ~bit(j);
        rows_[j] &= ~bit(i);
      }
      residual_[j] -= sign;
    });
    residual_[i] -= sign * popcount(picked);
  }

  bool feasible(int from) const {
    std::vector<int> a(residual_.begin() + from, residual_.begin() + na_);
    std::vector<int> b(residual_.begin() + na_, residual_.begin() + n_);
    return gale_ryser(std::move(a), std::move(b));
  }

  int na_, n_;
  Leaf leaf_;
  std::array<int, kMaxVertices> target_{};
  std::array<int, kMaxVertices> residual_{};
  std::array<VertexSet, kMaxVertices> rows_{};
  bool stop_ = false;
};

void check_capacity(const BipartitionedPair& p) {
  if (p.order() > kMaxRealizationOrder)
    throw CapacityError("bipartite realization enumeration supports at most " +
                        std::to_string(kMaxRealizationOrder) + " vertices");
}

}  // namespace

std::vector<BipartitionedPair> bipartitions_of(const DegreeSequence& d) {
  const auto runs = d.runs();
  std::set<BipartitionedPair> out;
  std::vector<int> take(runs.size(), 0);
  std::function<void(std::size_t)> rec = [&](std::size_t r) {
    if (r == runs.size()) {
      std::vector<int> a, b;
      for (std::size_t i = 0; i < runs.size(); ++i) {
        a.insert(a.end(), take[i], runs[i].first);
        b.insert(b.end(), runs[i].second - take[i], runs[i].first);
      }
      BipartitionedPair p(std::move(a), std::move(b));
      if (p.realizable()) out.insert(std::move(p));
      return;
    }
    for (int t = 0; t <= runs[r].second; ++t) {
      take[r] = t;
      rec(r + 1);
    }
  };
  rec(0);
  return {out.begin(), out.end()};
}

std::vector<Graph> enumerate_bipartite_realizations(const BipartitionedPair& p, std::optional<std::size_t> limit) {
  check_capacity(p);
  if (!p.realizable()) return {};
  const int n = p.order();
  std::map<CanonicalKey, Graph> found;
  BipartiteSearch(p.first(), p.second(), [&](const std::array<VertexSet, kMaxVertices>& rows) {
    const CanonicalKey key = canonical_form(n, std::span(rows.data(), n));
    found.try_emplace(key, graph_from_key(key));
    return limit && found.size() > *limit ? Visit::kStop : Visit::kContinue;
  }).run();
  std::vector<Graph> out;
  for (auto& [k, g] : found) out.push_back(g);
  return out;
}

std::vector<SidedGraph> sided_realizations(const BipartitionedPair& p) {
  check_capacity(p);
  if (!p.realizable()) return {};
  const int n = p.order();
  const int na = static_cast<int>(p.first().size());
  std::vector<int> colors(n, 1);
  std::fill(colors.begin(), colors.begin() + na, 0);
  std::map<CanonicalKey, SidedGraph> found;
  BipartiteSearch(p.first(), p.second(), [&](const std::array<VertexSet, kMaxVertices>& rows) {
    Graph g = Graph::from_rows(n, std::span(rows.data(), n));
    const CanonicalLabeling lab = canonical_labeling(g, colors);
    if (!found.contains(lab.key)) {
      // Store the canonically relabeled copy so the result is label-independent.
      Graph canon = relabel(g, lab.labels);
      VertexSet side = 0;
      for (int v = 0; v < na; ++v) side |= bit(lab.labels[v]);
      found.emplace(lab.key, SidedGraph{canon, side});
    }
    return Visit::kContinue;
  }).run();
  std::vector<SidedGraph> out;
  for (auto& [k, s] : found) out.push_back(s);
  return out;
}

BipartitionedPair pair_of(const Graph& g, VertexSet side) {
  std::vector<int> a, b;
  for (int v = 0; v < g.order(); ++v) {
    if ((side >> v) & 1U) {
      if ((g.neighbors(v) & side) != 0) throw std::invalid_argument("side is not independent");
      a.push_back(g.degree(v));
    } else {
      if ((g.neighbors(v) & ~side) != 0) throw std::invalid_argument("complement of side is not independent");
      b.push_back(g.degree(v));
    }
  }
  return BipartitionedPair(std::move(a), std::move(b));
}

}  // namespace unigraph
