#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "unigraph/graph.hpp"

namespace unigraph {

/// Largest sequence length accepted by the realization enumerators.
inline constexpr int kMaxRealizationOrder = 12;

/// Non-increasing list of non-negative integers. Graphicality is not an
/// invariant; see is_graphic.
class DegreeSequence {
public:
  DegreeSequence() = default;
  /// Sorts into non-increasing order; throws std::invalid_argument on a
  /// negative term.
  explicit DegreeSequence(std::vector<int> terms);
  DegreeSequence(std::initializer_list<int> terms) : DegreeSequence(std::vector<int>(terms)) {}

  /// Parses "4,3,2^4,1" (caret exponents for runs, optional parentheses).
  static DegreeSequence parse(std::string_view text);
  /// Normalized caret form, e.g. "4,3,2^4,1"; "" for the empty sequence.
  std::string to_string() const;

  std::span<const int> terms() const { return terms_; }
  int length() const { return static_cast<int>(terms_.size()); }
  bool empty() const { return terms_.empty(); }
  int operator[](std::size_t i) const { return terms_[i]; }
  int max() const { return terms_.empty() ? 0 : terms_.front(); }
  long long sum() const;
  /// (value, multiplicity) runs in non-increasing value order.
  std::vector<std::pair<int, int>> runs() const;
  DegreeSequence without_zeros() const;

  friend bool operator==(const DegreeSequence&, const DegreeSequence&) = default;
  friend auto operator<=>(const DegreeSequence&, const DegreeSequence&) = default;

private:
  std::vector<int> terms_;
};

DegreeSequence degree_sequence(const Graph& g);

/// Erdős–Gallai test.
bool is_graphic(const DegreeSequence& d);
/// Same test on terms in any order.
bool is_graphic(std::span<const int> terms);

/// One realization via Havel–Hakimi; vertex i has degree d[i]. Throws
/// NotGraphicError when no realization exists.
Graph realize(const DegreeSequence& d);

enum class Visit { kContinue, kStop };

/// Calls `visit` once per isomorphism class of realizations of d, in an
/// unspecified order, until it returns Visit::kStop. Returns the number of
/// classes visited. Throws NotGraphicError for non-graphic d and
/// CapacityError for sequences longer than kMaxRealizationOrder.
std::size_t for_each_realization(const DegreeSequence& d, const std::function<Visit(const Graph&)>& visit);

/// All pairwise non-isomorphic realizations sorted by canonical key. With a
/// limit, stops once limit+1 classes are found.
std::vector<Graph> enumerate_realizations(const DegreeSequence& d, std::optional<std::size_t> limit = {});

/// Exactly one realization up to isomorphism.
bool is_unigraphic(const DegreeSequence& d);

}  // namespace unigraph
