#pragma once

#include <string>
#include <string_view>

#include "unigraph/graph.hpp"

namespace unigraph {

/// Decodes one graph6 string. An optional ">>graph6<<" header and trailing
/// newline are accepted. Throws ParseError on malformed input and
/// CapacityError for more than 32 vertices.
Graph graph6_decode(std::string_view text);

/// Encodes g in graph6 (no header, no newline).
std::string graph6_encode(const Graph& g);

}  // namespace unigraph
