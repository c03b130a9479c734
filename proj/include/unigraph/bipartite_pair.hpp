#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "unigraph/degseq.hpp"
#include "unigraph/graph.hpp"

namespace unigraph {

/// Unordered pair {d1, d2} of side-degree lists of a bipartite graph. Each
/// side is kept non-increasing and the lexicographically larger side is
/// stored first, so equality ignores the order of the sides.
class BipartitionedPair {
public:
  BipartitionedPair() = default;
  BipartitionedPair(std::vector<int> d1, std::vector<int> d2);

  /// Parses "(2,2|1,1,1,1)"; caret exponents are accepted on either side.
  static BipartitionedPair parse(std::string_view text);
  std::string to_string() const;

  const std::vector<int>& first() const { return first_; }
  const std::vector<int>& second() const { return second_; }
  int order() const { return static_cast<int>(first_.size() + second_.size()); }
  /// d1 ∪ d2 as a degree sequence.
  DegreeSequence combined() const;
  /// Gale–Ryser: some bipartite graph has these side degrees.
  bool realizable() const;

  friend bool operator==(const BipartitionedPair&, const BipartitionedPair&) = default;
  friend auto operator<=>(const BipartitionedPair&, const BipartitionedPair&) = default;

private:
  std::vector<int> first_;
  std::vector<int> second_;
};

/// Bipartite graph with a fixed side: `side` holds the vertices whose degrees
/// form pair.first(); the rest form pair.second().
struct SidedGraph {
  Graph graph;
  VertexSet side = 0;
};

/// Every unordered split of d's terms into a realizable pair, sorted.
std::vector<BipartitionedPair> bipartitions_of(const DegreeSequence& d);

/// Bipartite realizations of p up to (unsided) graph isomorphism, sorted by
/// canonical key. Unrealizable pairs give an empty result. With a limit,
/// stops once limit+1 classes are found.
std::vector<Graph> enumerate_bipartite_realizations(const BipartitionedPair& p,
                                                    std::optional<std::size_t> limit = {});

/// Realizations of p up to side-preserving isomorphism.
std::vector<SidedGraph> sided_realizations(const BipartitionedPair& p);

/// The side-degree pair of a bipartite graph with the given side.
BipartitionedPair pair_of(const Graph& g, VertexSet side);

}  // namespace unigraph
