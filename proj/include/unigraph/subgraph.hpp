#pragma once

#include <optional>
#include <span>
#include <vector>

#include "unigraph/graph.hpp"

namespace unigraph {

/// Injective map from the vertices of h into g whose image induces a copy of
/// h. `allowed[i]`, when given, restricts where h's vertex i may be placed.
std::optional<std::vector<int>> find_induced_embedding(const Graph& g, const Graph& h,
                                                       std::span<const VertexSet> allowed = {});

/// Injective map from h into g carrying edges to edges; non-edges are
/// unconstrained. `allowed` as for find_induced_embedding.
std::optional<std::vector<int>> find_subgraph_embedding(const Graph& g, const Graph& h,
                                                        std::span<const VertexSet> allowed = {});

/// True iff some vertex subset of g induces a graph isomorphic to h.
bool contains_induced(const Graph& g, const Graph& h);

/// True iff g contains some member of `family` as an induced subgraph.
bool contains_any_induced(const Graph& g, std::span<const Graph> family);

/// One representative per isomorphism class of induced subgraphs of g,
/// including g and the null graph.
std::vector<Graph> induced_subgraph_classes(const Graph& g);

}  // namespace unigraph
