#pragma once

#include <span>
#include <vector>

#include "unigraph/graph.hpp"

namespace unigraph {

/// Canonical labeling: `labels[v]` is the canonical position of vertex v.
struct CanonicalLabeling {
  CanonicalKey key;
  std::vector<int> labels;
};

/// Canonical labeling by equitable partition refinement and a search tree
/// over individualized vertices, pruned by twin classes and by automorphisms
/// discovered at the leaves.
///
/// `colors`, when non-empty, gives an initial vertex colouring that the
/// labeling must respect (isomorphisms map colour c to colour c). Keys of
/// coloured graphs are only comparable between graphs with the same number
/// of vertices of each colour.
CanonicalLabeling canonical_labeling(const Graph& g, std::span<const int> colors = {});

/// Key of g; equal keys <=> isomorphic graphs.
CanonicalKey canonical_form(const Graph& g);
CanonicalKey canonical_form(int n, std::span<const VertexSet> rows);

bool is_isomorphic(const Graph& g, const Graph& h);

/// The canonically relabeled representative of g's isomorphism class.
Graph canonical_graph(const Graph& g);
Graph graph_from_key(const CanonicalKey& key);

}  // namespace unigraph
