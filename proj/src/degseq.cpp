#include "unigraph/degseq.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

#include "unigraph/canon.hpp"
#include "unigraph/error.hpp"

namespace unigraph {

DegreeSequence::DegreeSequence(std::vector<int> terms) : terms_(std::move(terms)) {
  for (int t : terms_)
    if (t < 0) throw std::invalid_argument("negative degree");
  std::sort(terms_.begin(), terms_.end(), std::greater<>());
}

namespace {

int parse_int(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
    throw ParseError("invalid integer '" + std::string(s) + "' in degree sequence");
  return value;
}

}  // namespace

DegreeSequence DegreeSequence::parse(std::string_view text) {
  while (!text.empty() && (text.front() == ' ' || text.front() == '(')) text.remove_prefix(1);
  while (!text.empty() && (text.back() == ' ' || text.back() == ')' || text.back() == '\n')) text.remove_suffix(1);
  std::vector<int> terms;
  if (text.empty()) return DegreeSequence();
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view item = text.substr(start, end - start);
    const std::size_t caret = item.find('^');
    const int value = parse_int(item.substr(0, caret));
    const int reps = caret == std::string_view::npos ? 1 : parse_int(item.substr(caret + 1));
    if (value < 0 || reps < 0) throw ParseError("negative value in degree sequence");
    if (reps > 1024) throw CapacityError("degree sequence run too long");
    terms.insert(terms.end(), reps, value);
    start = end + 1;
  }
  return DegreeSequence(std::move(terms));
}

std::string DegreeSequence::to_string() const {
  std::string out;
  for (auto [value, mult] : runs()) {
    if (!out.empty()) out += ',';
    out += std::to_string(value);
    if (mult > 1) out += '^' + std::to_string(mult);
  }
  return out;
}

long long DegreeSequence::sum() const { return std::accumulate(terms_.begin(), terms_.end(), 0LL); }

std::vector<std::pair<int, int>> DegreeSequence::runs() const {
  std::vector<std::pair<int, int>> out;
  for (int t : terms_) {
    if (!out.empty() && out.back().first == t)
      ++out.back().second;
    else
      out.emplace_back(t, 1);
  }
  return out;
}

DegreeSequence DegreeSequence::without_zeros() const {
  std::vector<int> t;
  for (int x : terms_)
    if (x > 0) t.push_back(x);
  return DegreeSequence(std::move(t));
}

DegreeSequence degree_sequence(const Graph& g) {
  std::vector<int> t(g.order());
  for (int v = 0; v < g.order(); ++v) t[v] = g.degree(v);
  return DegreeSequence(std::move(t));
}

bool is_graphic(std::span<const int> terms) {
  std::vector<long long> d(terms.begin(), terms.end());
  std::sort(d.begin(), d.end(), std::greater<>());
  const long long n = static_cast<long long>(d.size());
  long long total = 0;
  for (long long x : d) {
    if (x < 0 || x >= n) return false;
    total += x;
  }
  if (total % 2 != 0) return false;
  long long left = 0;
  for (long long k = 1; k <= n; ++k) {
    left += d[k - 1];
    long long right = k * (k - 1);
    for (long long i = k; i < n; ++i) right += std::min(d[i], k);
    if (left > right) return false;
  }
  return true;
}

bool is_graphic(const DegreeSequence& d) { return is_graphic(d.terms()); }

Graph realize(const DegreeSequence& d) {
  if (!is_graphic(d)) throw NotGraphicError("degree sequence " + d.to_string() + " is not graphic");
  const int n = d.length();
  if (n > kMaxVertices) throw CapacityError("degree sequence longer than 32");
  std::vector<int> residual(d.terms().begin(), d.terms().end());
  std::vector<std::pair<int, int>> edges;
  std::vector<int> order(n);
  for (;;) {
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return residual[a] > residual[b]; });
    const int v = order[0];
    if (residual[v] == 0) break;
    const int need = residual[v];
    residual[v] = 0;
    for (int i = 1; i <= need; ++i) {
      edges.emplace_back(v, order[i]);
      --residual[order[i]];
    }
  }
  return Graph(n, edges);
}

namespace {

// Backtracking over vertices in non-increasing degree order. Unprocessed
// vertices with equal target degree and identical adjacency to the processed
// prefix are interchangeable, so within each such class only prefixes are
// chosen as neighbours.
class RealizationSearch {
public:
  RealizationSearch(const DegreeSequence& d, const std::function<Visit(const Graph&)>& visit)
      : n_(d.length()), visit_(visit) {
    for (int i = 0; i < n_; ++i) target_[i] = residual_[i] = d[i];
  }

  std::size_t run() {
    process(0);
    return found_;
  }

private:
  struct Class {
    VertexSet members;
    int size;
  };

  void process(int i) {
    if (stop_) return;
    if (i == n_) {
      leaf();
      return;
    }
    const int need = residual_[i];
    std::vector<Class> classes;
    for (int j = i + 1; j < n_; ++j) {
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
    choose(i, need, classes, 0, 0);
  }

  void choose(int i, int need, const std::vector<Class>& classes, std::size_t ci, VertexSet picked) {
    if (stop_) return;
    if (need == 0) {
      apply(i, picked, +1);
      if (residual_feasible(i + 1)) process(i + 1);
      apply(i, picked, -1);
      return;
    }
    if (ci == classes.size()) return;
    int remaining = 0;
    for (std::size_t k = ci; k < classes.size(); ++k) remaining += classes[k].size;
    if (remaining < need) return;
    const Class& c = classes[ci];
    const int top = std::min(need, c.size);
    for (int take = top; take >= 0; --take) {
      VertexSet chosen = 0;
      VertexSet m = c.members;
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

  bool residual_feasible(int from) const {
    return is_graphic(std::span<const int>(residual_.data() + from, static_cast<std::size_t>(n_ - from)));
  }

  void leaf() {
    const CanonicalKey key = canonical_form(n_, std::span(rows_.data(), n_));
    if (!seen_.insert(key).second) return;
    ++found_;
    if (visit_(graph_from_key(key)) == Visit::kStop) stop_ = true;
  }

  int n_;
  const std::function<Visit(const Graph&)>& visit_;
  std::array<int, kMaxVertices> target_{};
  std::array<int, kMaxVertices> residual_{};
  std::array<VertexSet, kMaxVertices> rows_{};
  std::unordered_set<CanonicalKey, CanonicalKeyHash> seen_;
  std::size_t found_ = 0;
  bool stop_ = false;
};

}  // namespace

std::size_t for_each_realization(const DegreeSequence& d, const std::function<Visit(const Graph&)>& visit) {
  if (d.length() > kMaxRealizationOrder)
    throw CapacityError("realization enumeration supports at most " + std::to_string(kMaxRealizationOrder) +
                        " vertices");
  if (!is_graphic(d)) throw NotGraphicError("degree sequence " + d.to_string() + " is not graphic");
  return RealizationSearch(d, visit).run();
}

std::vector<Graph> enumerate_realizations(const DegreeSequence& d, std::optional<std::size_t> limit) {
  std::vector<Graph> out;
  for_each_realization(d, [&](const Graph& g) {
    out.push_back(g);
    return limit && out.size() > *limit ? Visit::kStop : Visit::kContinue;
  });
  std::sort(out.begin(), out.end(),
            [](const Graph& a, const Graph& b) { return a.canonical_key() < b.canonical_key(); });
  return out;
}

bool is_unigraphic(const DegreeSequence& d) { return enumerate_realizations(d, 1).size() == 1; }

}  // namespace unigraph
