#pragma once

#include <cstddef>
#include <optional>
#include <shared_mutex>
#include <unordered_map>
#include <vector>

#include "unigraph/classes.hpp"
#include "unigraph/degseq.hpp"
#include "unigraph/graph.hpp"

namespace unigraph {

/// Number of isomorphism classes of realizations of d that belong to the
/// class, counting no further than `stop_at`.
std::size_t count_realizations_in(const DegreeSequence& d, const ClassSpec& spec, std::size_t stop_at);

/// g ∈ 𝒜 and d(g) has exactly one realization in 𝒜. Throws
/// std::domain_error when g is not a member of the class.
bool is_A_unigraph(const Graph& g, const ClassSpec& spec);

bool is_unigraph(const Graph& g);

/// Every induced subgraph of g (g included) is an 𝒜-unigraph; false when g
/// itself is outside 𝒜.
bool is_hereditary_A_unigraph(const Graph& g, const ClassSpec& spec);

bool is_hereditary_unigraph(const Graph& g);

/// Memoized membership in H(𝒰_𝒜), keyed by canonical form. Safe to share
/// between threads.
class HereditaryOracle {
public:
  explicit HereditaryOracle(ClassSpec spec) : spec_(spec) {}

  const ClassSpec& spec() const { return spec_; }
  /// g ∈ 𝒜 and g is an 𝒜-unigraph (false, not an error, outside 𝒜).
  bool a_unigraph(const Graph& g);
  /// g ∈ H(𝒰_𝒜).
  bool hereditary(const Graph& g);
  std::size_t memo_size() const;

private:
  std::optional<bool> lookup(const CanonicalKey& key) const;
  void store(const CanonicalKey& key, bool value);

  ClassSpec spec_;
  mutable std::shared_mutex mutex_;
  std::unordered_map<CanonicalKey, bool, CanonicalKeyHash> memo_;
};

/// Split graph with a fixed KS-partition, one factor of a composition.
struct CompositionTerm {
  Graph graph;
  SplitPartition partition;
};

/// G = terms[0] ∘ terms[1] ∘ … ∘ tail. `term_vertices[i]` and
/// `tail_vertices` map the factors' vertices back to the decomposed graph.
struct Decomposition {
  std::vector<CompositionTerm> terms;
  Graph tail;
  std::vector<std::vector<int>> term_vertices;
  std::vector<int> tail_vertices;
};

/// (G₁,K,S) ∘ G₀ folded right to left; vertices of terms[0] come first and
/// the tail's last. Throws std::invalid_argument on an invalid partition.
Graph compose(const std::vector<CompositionTerm>& terms, const Graph& tail);

/// Maximal-length decomposition: each step peels the smallest split factor
/// (K,S) with K complete and S anticomplete to the rest. Indecomposable
/// graphs give no terms. Throws CapacityError above 20 vertices.
Decomposition decompose(const Graph& g);

/// After deleting isolated vertices: bipartite, and g or some g - v is
/// complete bipartite K_{a,b} (a, b ≥ 0).
bool is_hbu_structural(const Graph& g);

/// After deleting zeros, d = (a^c, (a-1)^(b-c), b^(a-1), c) for some
/// a, b, c ≥ 0.
bool is_hbu_sequence(const DegreeSequence& d);

}  // namespace unigraph
