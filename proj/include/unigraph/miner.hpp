#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "unigraph/classes.hpp"
#include "unigraph/degseq.hpp"
#include "unigraph/graph.hpp"

namespace unigraph {

/// Hereditary class to mine: H(𝒰_𝒜) for a base class 𝒜, or 𝒜 itself.
struct MiningTarget {
  ClassSpec base = ClassSpec::all();
  bool unigraph_closure = true;

  /// "H(U)", "H(U_2)", "H(U_k)", "H(U_P)", "H(U_C)", "H(U_S)", or the plain
  /// class token when unigraph_closure is false.
  std::string name() const;
  /// Accepts the names above, plus "class:<token>" for a plain class.
  static MiningTarget parse(std::string_view text);
};

struct ForbiddenEntry {
  Graph graph;  ///< canonical representative
  std::string graph6;
  DegreeSequence degrees;
  int order = 0;
  std::string label;  ///< conventional name when recognised, else empty
};

struct MiningReport {
  std::string target;
  int max_n = 0;
  std::vector<ForbiddenEntry> forbidden;  ///< sorted by (order, canonical key)
  std::map<int, int> counts;              ///< forbidden graphs per order
  std::size_t checked = 0;                ///< graphs swept
  /// Graphs whose membership by the mined list disagrees with the oracle.
  std::vector<std::string> counterexamples;
  double seconds = 0;

  std::vector<Graph> graphs() const;
};

/// Membership in the mining target, decided from the definition (never from
/// a forbidden list).
bool in_target(const Graph& g, const MiningTarget& target);

/// All minimal forbidden induced subgraphs of the target on at most max_n
/// vertices: g outside the class with every g - v inside. Also re-tests every
/// swept graph against the mined list and records disagreements.
MiningReport mine_forbidden(const MiningTarget& target, int max_n, int jobs = 0);

/// Conventional name of small graphs that recur as forbidden subgraphs
/// (K3, C4, P5, 2P3, …), if g is one of them.
std::optional<std::string> known_graph_name(const Graph& g);

}  // namespace unigraph
