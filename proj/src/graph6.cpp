#include "unigraph/graph6.hpp"

#include <vector>

#include "unigraph/error.hpp"

namespace unigraph {
namespace {

constexpr std::string_view kHeader = ">>graph6<<";

int sextet(char c) {
  if (c < 63 || c > 126) throw ParseError(std::string("invalid graph6 character '") + c + "'");
  return c - 63;
}

}  // namespace

Graph graph6_decode(std::string_view text) {
  if (text.starts_with(kHeader)) text.remove_prefix(kHeader.size());
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.empty()) throw ParseError("empty graph6 string");

  std::size_t pos = 0;
  long long n = 0;
  if (text[0] != '~') {
    n = sextet(text[0]);
    pos = 1;
  } else if (text.size() >= 2 && text[1] != '~') {
    if (text.size() < 4) throw ParseError("truncated graph6 length field");
    for (std::size_t i = 1; i <= 3; ++i) n = (n << 6) | sextet(text[i]);
    if (n < 63) throw ParseError("non-minimal graph6 length field");
    pos = 4;
  } else {
    if (text.size() < 8) throw ParseError("truncated graph6 length field");
    for (std::size_t i = 2; i <= 7; ++i) n = (n << 6) | sextet(text[i]);
    if (n < 258048) throw ParseError("non-minimal graph6 length field");
    pos = 8;
  }
  if (n > kMaxVertices) throw CapacityError("graph6 encodes " + std::to_string(n) + " vertices; capacity is 32");

  const int order = static_cast<int>(n);
  const std::size_t bits = static_cast<std::size_t>(order) * (order - 1) / 2;
  const std::size_t groups = (bits + 5) / 6;
  if (text.size() - pos != groups)
    throw ParseError(text.size() - pos < groups ? "truncated graph6 adjacency data" : "trailing data after graph6 adjacency");

  std::array<VertexSet, kMaxVertices> rows{};
  std::size_t k = 0;
  for (int j = 1; j < order; ++j)
    for (int i = 0; i < j; ++i, ++k) {
      const int group = sextet(text[pos + k / 6]);
      if ((group >> (5 - k % 6)) & 1) {
        rows[i] |= bit(j);
        rows[j] |= bit(i);
      }
    }
  // Padding bits must be zero.
  if (bits % 6 != 0) {
    const int last = sextet(text[pos + groups - 1]);
    if ((last & ((1 << (6 - bits % 6)) - 1)) != 0) throw ParseError("non-zero graph6 padding bits");
  }
  return Graph::from_rows(order, std::span(rows.data(), order));
}

std::string graph6_encode(const Graph& g) {
  const int n = g.order();
  std::string out;
  out.push_back(static_cast<char>(63 + n));
  int acc = 0, used = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++used == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = used = 0;
      }
    }
  if (used > 0) out.push_back(static_cast<char>(63 + (acc << (6 - used))));
  return out;
}

}  // namespace unigraph
