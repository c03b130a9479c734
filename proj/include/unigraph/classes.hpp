#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "unigraph/graph.hpp"

namespace unigraph {

/// A hereditary graph class used to parameterize 𝒜-unigraph tests and mining.
class ClassSpec {
public:
  enum class Kind { kAll, kBipartite, kKPartite, kChordal, kSplit, kPerfect };

  static ClassSpec all() { return ClassSpec(Kind::kAll); }
  static ClassSpec bipartite() { return ClassSpec(Kind::kBipartite); }
  /// Throws std::invalid_argument for k < 2.
  static ClassSpec kpartite(int k);
  static ClassSpec chordal() { return ClassSpec(Kind::kChordal); }
  static ClassSpec split() { return ClassSpec(Kind::kSplit); }
  static ClassSpec perfect() { return ClassSpec(Kind::kPerfect); }

  /// Tokens: all, bipartite, kpartite:K, chordal, split, perfect.
  static ClassSpec parse(std::string_view token);
  std::string to_string() const;

  Kind kind() const { return kind_; }
  /// Part bound; 2 for bipartite, 0 for kinds without one.
  int k() const { return k_; }

  friend bool operator==(const ClassSpec&, const ClassSpec&) = default;

private:
  explicit ClassSpec(Kind kind, int k = 0) : kind_(kind), k_(kind == Kind::kBipartite ? 2 : k) {}

  Kind kind_;
  int k_;
};

/// KS-partition of a split graph: `clique` induces a complete graph and
/// `stable` an edgeless one.
struct SplitPartition {
  VertexSet clique = 0;
  VertexSet stable = 0;
  friend bool operator==(const SplitPartition&, const SplitPartition&) = default;
};

bool is_bipartite(const Graph& g);
/// One colour class of a proper 2-colouring, if any.
std::optional<VertexSet> bipartition(const Graph& g);

int clique_number(const Graph& g);
/// Exact, by branch and bound over DSATUR orderings seeded with ω.
int chromatic_number(const Graph& g);
bool is_k_colorable(const Graph& g, int k);
/// χ(g) ≤ k.
bool is_k_partite(const Graph& g, int k);

bool is_split(const Graph& g);
/// Every KS-partition of g, sorted by clique mask; empty iff g is not split.
std::vector<SplitPartition> split_partitions(const Graph& g);
bool is_valid_split_partition(const Graph& g, const SplitPartition& p);

/// Perfect elimination ordering test on a maximum cardinality search order.
bool is_chordal(const Graph& g);
/// Some induced cycle of odd length ≥ 5.
bool has_odd_hole(const Graph& g);
/// No odd hole and no odd antihole.
bool is_perfect(const Graph& g);
/// Perfect after deleting at most one vertex.
bool is_apex_perfect(const Graph& g);

bool member(const Graph& g, const ClassSpec& spec);

}  // namespace unigraph
