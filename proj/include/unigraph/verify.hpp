#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "unigraph/bipartite_pair.hpp"

namespace unigraph {

struct VerificationOptions {
  int k = 3;                  ///< part bound for the k-partite theorems
  std::size_t samples = 1000; ///< random compositions for composition-coloring
  std::uint64_t seed = 1;
  int jobs = 0;
};

struct VerificationReport {
  std::string theorem;
  int max_n = 0;
  std::size_t checked = 0;
  std::vector<std::string> counterexamples;  ///< graph6 (or pair text for rao-lemma)
  std::vector<std::string> notes;
  double seconds = 0;

  bool passed() const { return counterexamples.empty(); }
};

/// Identifiers accepted by verify_theorem.
const std::vector<std::string>& theorem_ids();

/// Sweeps every graph (or pair, or sample) up to max_n and evaluates both
/// sides of the named equivalence through independent code paths. Throws
/// std::invalid_argument for an unknown id.
VerificationReport verify_theorem(std::string_view id, int max_n, const VerificationOptions& options = {});

/// The seven minimal forbidden pairs of the hereditary bipartite-unigraphs.
const std::vector<BipartitionedPair>& hbu_minimal_pairs();

}  // namespace unigraph
