#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "unigraph/bipartite_pair.hpp"
#include "unigraph/unigraph.hpp"

namespace unigraph {

/// A forbidden pair with its bipartite realizations.
struct ForbiddenPairRecord {
  BipartitionedPair pair;
  std::vector<Graph> realizations;
  bool minimal = false;
};

/// Bipartite-Rao containment between bipartitioned pairs, with memoized
/// realizations and forbidden-pair status.
///
/// Containment is read as an induced, side-respecting embedding: big ⪰ small
/// iff some sided realization of small is an induced subgraph of some sided
/// realization of big with sides mapped onto sides (in either orientation,
/// since pairs are unordered).
class RaoAnalyzer {
public:
  RaoAnalyzer();

  bool contains(const BipartitionedPair& big, const BipartitionedPair& small);
  /// Some bipartition of d contains `small`.
  bool sequence_contains(const DegreeSequence& d, const BipartitionedPair& small);
  /// Realizable, and no bipartite realization is a hereditary bipartite-unigraph.
  bool is_forbidden(const BipartitionedPair& p);
  /// Forbidden and containing no other forbidden pair. Every pair p contains
  /// has fewer vertices, so the check never leaves p's own order.
  bool is_minimal(const BipartitionedPair& p);
  /// Every realizable pair on at most max_n vertices, sorted.
  std::vector<BipartitionedPair> realizable_pairs(int max_n) const;
  /// All minimal forbidden pairs on at most max_n vertices, sorted by
  /// (order, pair).
  std::vector<ForbiddenPairRecord> minimal_pairs(int max_n, int jobs = 0);

  HereditaryOracle& bipartite_oracle() { return *oracle_; }
  const std::vector<SidedGraph>& sided(const BipartitionedPair& p);

private:
  std::unique_ptr<HereditaryOracle> oracle_;
  std::mutex mutex_;
  std::map<BipartitionedPair, std::vector<SidedGraph>> sided_;
  std::map<BipartitionedPair, bool> forbidden_;
};

bool rao_contains(const BipartitionedPair& big, const BipartitionedPair& small);
bool sequence_rao_contains(const DegreeSequence& d, const BipartitionedPair& small);
bool is_forbidden_pair(const BipartitionedPair& p);
/// Throws std::invalid_argument if p has more than universe_bound vertices.
bool is_rao_minimal(const BipartitionedPair& p, int universe_bound = 8);
std::vector<ForbiddenPairRecord> enumerate_minimal_pairs(int max_n, int jobs = 0);

}  // namespace unigraph
