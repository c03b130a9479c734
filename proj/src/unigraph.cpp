#include "unigraph/unigraph.hpp"

#include <mutex>
#include <stdexcept>

namespace unigraph {

std::size_t count_realizations_in(const DegreeSequence& d, const ClassSpec& spec, std::size_t stop_at) {
  std::size_t count = 0;
  if (stop_at == 0) return 0;
  for_each_realization(d, [&](const Graph& h) {
    if (member(h, spec) && ++count >= stop_at) return Visit::kStop;
    return Visit::kContinue;
  });
  return count;
}

bool is_A_unigraph(const Graph& g, const ClassSpec& spec) {
  if (!member(g, spec))
    throw std::domain_error("graph is not in class " + spec.to_string() + "; 𝒜-unigraphs are defined only for members");
  return count_realizations_in(degree_sequence(g), spec, 2) == 1;
}

bool is_unigraph(const Graph& g) { return is_A_unigraph(g, ClassSpec::all()); }

bool is_hereditary_A_unigraph(const Graph& g, const ClassSpec& spec) {
  HereditaryOracle oracle(spec);
  return oracle.hereditary(g);
}

bool is_hereditary_unigraph(const Graph& g) { return is_hereditary_A_unigraph(g, ClassSpec::all()); }

std::optional<bool> HereditaryOracle::lookup(const CanonicalKey& key) const {
  std::shared_lock lock(mutex_);
  auto it = memo_.find(key);
  if (it == memo_.end()) return std::nullopt;
  return it->second;
}

void HereditaryOracle::store(const CanonicalKey& key, bool value) {
  std::unique_lock lock(mutex_);
  memo_.emplace(key, value);
}

std::size_t HereditaryOracle::memo_size() const {
  std::shared_lock lock(mutex_);
  return memo_.size();
}

bool HereditaryOracle::a_unigraph(const Graph& g) {
  return member(g, spec_) && count_realizations_in(degree_sequence(g), spec_, 2) == 1;
}

bool HereditaryOracle::hereditary(const Graph& g) {
  if (g.order() <= 1) return member(g, spec_);
  const CanonicalKey& key = g.canonical_key();
  if (auto hit = lookup(key)) return *hit;
  // Membership in 𝒜 is hereditary, so checking the one-vertex deletions
  // recursively covers every induced subgraph.
  bool ok = member(g, spec_);
  for (int v = 0; ok && v < g.order(); ++v) ok = hereditary(delete_vertex(g, v));
  ok = ok && count_realizations_in(degree_sequence(g), spec_, 2) == 1;
  store(key, ok);
  return ok;
}

bool is_hbu_structural(const Graph& g) {
  const Graph h = induced_subgraph(g, g.vertices() & ~isolated_vertices(g));
  auto side = bipartition(h);
  if (!side) return false;
  // Complete bipartite with no isolated vertices: connected (or empty) and
  // every vertex adjacent to the whole other side; equivalently the number of
  // edges equals |A|·|B| for the components' sides.
  auto complete_bipartite_like = [](const Graph& x) {
    if (x.order() == 0) return true;
    auto s = bipartition(x);
    if (!s) return false;
    const VertexSet a = *s, b = x.vertices() & ~*s;
    for (int v = 0; v < x.order(); ++v) {
      const VertexSet other = ((a >> v) & 1U) ? b : a;
      if (x.neighbors(v) != other) return false;
    }
    return true;
  };
  if (complete_bipartite_like(h)) return true;
  for (int v = 0; v < h.order(); ++v)
    if (complete_bipartite_like(delete_vertex(h, v))) return true;
  return false;
}

bool is_hbu_sequence(const DegreeSequence& d) {
  const DegreeSequence target = d.without_zeros();
  const int len = d.length();
  const int top = d.max() + 1;
  for (int a = 1; a <= top; ++a)
    for (int b = 0; b <= len; ++b)
      for (int c = 0; c <= b; ++c) {
        std::vector<int> t;
        t.insert(t.end(), c, a);
        t.insert(t.end(), b - c, a - 1);
        t.insert(t.end(), a - 1, b);
        t.push_back(c);
        if (DegreeSequence(std::move(t)).without_zeros() == target) return true;
      }
  return false;
}

}  // namespace unigraph
