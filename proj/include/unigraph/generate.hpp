#pragma once

#include <functional>
#include <vector>

#include "unigraph/graph.hpp"

namespace unigraph {

inline constexpr int kMaxGenerationOrder = 10;

/// One representative of every isomorphism class of graphs on n vertices,
/// in canonical form and sorted by canonical key. Uses canonical
/// augmentation: a graph is accepted from a parent P only if deleting its
/// canonically last vertex leaves a graph isomorphic to P.
///
/// Throws CapacityError for n > 10.
std::vector<Graph> all_graphs(int n, int jobs = 0);

/// Same classes produced from an explicit list of representatives on n-1
/// vertices (which must contain every class exactly once).
std::vector<Graph> extend_by_one_vertex(const std::vector<Graph>& parents, int jobs = 0);

/// Reference enumerator: dedups all 2^(n choose 2) labeled graphs by key.
/// Intended for cross-checking; throws CapacityError for n > 7.
std::vector<Graph> all_graphs_labeled(int n);

}  // namespace unigraph
