#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "unigraph/canon.hpp"
#include "unigraph/generate.hpp"
#include "unigraph/graph6.hpp"
#include "unigraph/miner.hpp"
#include "unigraph/rao.hpp"
#include "unigraph/subgraph.hpp"
#include "unigraph/unigraph.hpp"
#include "unigraph/verify.hpp"

using namespace unigraph;

namespace {

std::set<std::string> pair_strings(const std::vector<ForbiddenPairRecord>& records) {
  std::set<std::string> out;
  for (const auto& r : records) out.insert(r.pair.to_string());
  return out;
}

}  // namespace

TEST_CASE("rao containment") {
  const BipartitionedPair two_p3({2, 2}, {1, 1, 1, 1});
  const BipartitionedPair p4k2({2, 1, 1}, {2, 1, 1});
  CHECK(rao_contains(two_p3, two_p3));
  CHECK(rao_contains(two_p3, BipartitionedPair({2}, {1, 1})));
  CHECK_FALSE(rao_contains(BipartitionedPair({2}, {1, 1}), two_p3));
  CHECK_FALSE(rao_contains(two_p3, p4k2));
  CHECK(sequence_rao_contains(DegreeSequence::parse("2,2,1,1,1,1"), p4k2));
  CHECK(is_forbidden_pair(two_p3));
  CHECK_FALSE(is_forbidden_pair(BipartitionedPair({3, 3}, {2, 2, 2})));
  CHECK_FALSE(is_forbidden_pair(BipartitionedPair({3}, {1, 1})));
  CHECK(is_rao_minimal(two_p3));
  CHECK_THROWS_AS(is_rao_minimal(BipartitionedPair(std::vector<int>(5, 1), std::vector<int>(5, 1)), 8),
                  std::invalid_argument);
}

TEST_CASE("rao minimality matches the lemma on every forbidden pair up to seven vertices") {
  RaoAnalyzer rao;
  HereditaryOracle& h = rao.bipartite_oracle();
  for (const auto& p : rao.realizable_pairs(7)) {
    if (!rao.is_forbidden(p)) continue;
    bool all_minimal = true;
    for (const Graph& g : enumerate_bipartite_realizations(p))
      for (int v = 0; v < g.order(); ++v) all_minimal = all_minimal && h.hereditary(delete_vertex(g, v));
    CHECK(rao.is_minimal(p) == all_minimal);
  }
}

TEST_CASE("minimal pairs up to eight vertices") {
  const auto records = enumerate_minimal_pairs(8);
  const std::set<std::string> expected = {
      "(2,1,1|2,1,1)", "(2,2|1,1,1,1)",   "(2,2,1|2,2,1)",   "(3,1,1|2,2,1)", "(3,2|2,1,1,1)",
      "(3,2,1|3,2,1)", "(3,3|2,2,1,1)",   "(4,2,2|3,3,1,1)", "(4,3,1|2,2,2,2)"};
  CHECK(pair_strings(records) == expected);
  // Every listed pair is among them. Each extra pair is realized only by a
  // forbidden graph whose degree sequence also splits into a listed pair.
  for (const auto& p : hbu_minimal_pairs()) CHECK(expected.count(p.to_string()) == 1);
  for (const auto& r : records) {
    CHECK(r.minimal);
    CHECK_FALSE(r.realizations.empty());
  }
}

TEST_CASE("mining target names") {
  CHECK(MiningTarget::parse("H(U)").name() == "H(U)");
  CHECK(MiningTarget::parse("H(U_3)").base == ClassSpec::kpartite(3));
  CHECK(MiningTarget::parse("chordal").name() == "H(U_C)");
  CHECK_FALSE(MiningTarget::parse("class:split").unigraph_closure);
  CHECK(MiningTarget::parse("class:split").name() == "split");
}

TEST_CASE("mining a plain class recovers its known forbidden subgraphs") {
  const auto split = mine_forbidden({ClassSpec::split(), false}, 6);
  CHECK(split.forbidden.size() == 3);
  CHECK(split.counterexamples.empty());
  const auto chordal = mine_forbidden({ClassSpec::chordal(), false}, 7);
  CHECK(chordal.forbidden.size() == 4);  // C4, C5, C6, C7
  const auto bip = mine_forbidden({ClassSpec::bipartite(), false}, 7);
  CHECK(bip.forbidden.size() == 3);  // C3, C5, C7
}

TEST_CASE("mined H(U) list agrees with the definitional oracle") {
  const auto report = mine_forbidden({ClassSpec::all(), true}, 7);
  CHECK(report.forbidden.size() == 16);
  CHECK(report.counterexamples.empty());
  for (const auto& e : report.forbidden) {
    CHECK_FALSE(oracle::hereditary_a_unigraph(e.graph, [](const Graph&) { return true; }));
    for (int v = 0; v < e.graph.order(); ++v)
      CHECK(oracle::hereditary_a_unigraph(delete_vertex(e.graph, v), [](const Graph&) { return true; }));
  }
  std::set<std::string> labels;
  for (const auto& e : report.forbidden) labels.insert(e.label);
  for (const char* l : {"R", "co-R", "S", "co-S", "C4+K2", "P5", "2P3", "co-P5"}) CHECK(labels.count(l) == 1);
  CHECK(known_graph_name(cycle_graph(5)) == "C5");
  CHECK_FALSE(known_graph_name(path_graph(3)).has_value());
}

TEST_CASE("in_target follows the definition") {
  for (const Graph& g : all_graphs(5)) {
    CHECK(in_target(g, {ClassSpec::all(), true}) == is_hereditary_unigraph(g));
    CHECK(in_target(g, {ClassSpec::chordal(), false}) == is_chordal(g));
  }
}

TEST_CASE("verification sweeps") {
  for (const char* id : {"hereditary-unigraph", "perfect-forbidden", "fhu-closure", "split-forbidden", "split-degree",
                         "tyshkevich", "chi-bound", "rao-lemma"})
    CHECK_MESSAGE(verify_theorem(id, 6).passed(), id);
  VerificationOptions opt;
  opt.samples = 200;
  CHECK(verify_theorem("composition-coloring", 5, opt).passed());
  opt.k = 4;
  CHECK(verify_theorem("kpartite-equivalence", 7, opt).passed());
  CHECK(verify_theorem("kpartite-corollary", 7, opt).passed());
  // For k = 3 the complement of P4+K2 is a 3-partite-unigraph whose only
  // other realization has χ = 4.
  opt.k = 3;
  const auto k3 = verify_theorem("kpartite-equivalence", 7, opt);
  CHECK(k3.counterexamples == std::vector<std::string>{"EL~o", "F@Tzo"});
  CHECK(is_isomorphic(graph6_decode("EL~o"), complement(disjoint_union(path_graph(4), complete_graph(2)))));
  CHECK_THROWS_AS(verify_theorem("no-such-theorem", 3), std::invalid_argument);
}

TEST_CASE("rao containment is a preorder on small pairs") {
  RaoAnalyzer rao;
  const auto pairs = rao.realizable_pairs(5);
  for (const auto& a : pairs) CHECK(rao.contains(a, a));
  for (const auto& a : pairs)
    for (const auto& b : pairs) {
      if (!rao.contains(a, b)) continue;
      for (const auto& c : pairs)
        if (rao.contains(b, c)) CHECK(rao.contains(a, c));
    }
}

TEST_CASE("sequence containment examples") {
  CHECK(sequence_rao_contains(DegreeSequence::parse("4,3,3,2,2,1,1"), BipartitionedPair({4, 2, 2}, {3, 3, 1, 1})));
  CHECK(sequence_rao_contains(DegreeSequence::parse("1,1"), BipartitionedPair({1}, {1})));
  CHECK_FALSE(sequence_rao_contains(DegreeSequence::parse("2,2,2"), BipartitionedPair({1}, {1})));
}

TEST_CASE("minimal pair realizations are the bipartite forbidden graphs") {
  const auto records = enumerate_minimal_pairs(8);
  std::set<CanonicalKey> from_pairs, mined;
  for (const auto& r : records)
    for (const Graph& g : r.realizations) from_pairs.insert(g.canonical_key());
  for (const Graph& g : mine_forbidden({ClassSpec::bipartite(), true}, 7).graphs())
    if (is_bipartite(g)) mined.insert(g.canonical_key());
  CHECK(from_pairs == mined);
  CHECK(enumerate_minimal_pairs(3).empty());
  std::set<std::string> small;
  for (const auto& r : enumerate_minimal_pairs(6)) small.insert(r.pair.to_string());
  std::set<std::string> filtered;
  for (const auto& r : records)
    if (r.pair.order() <= 6) filtered.insert(r.pair.to_string());
  CHECK(small == filtered);
}

TEST_CASE("mining reports are deterministic and ordered") {
  const auto a = mine_forbidden({ClassSpec::chordal(), true}, 6, 1);
  const auto b = mine_forbidden({ClassSpec::chordal(), true}, 6, 4);
  REQUIRE(a.forbidden.size() == b.forbidden.size());
  for (std::size_t i = 0; i < a.forbidden.size(); ++i) CHECK(a.forbidden[i].graph6 == b.forbidden[i].graph6);
  for (std::size_t i = 1; i < a.forbidden.size(); ++i) {
    const auto& p = a.forbidden[i - 1].graph;
    const auto& q = a.forbidden[i].graph;
    CHECK((p.order() < q.order() || (p.order() == q.order() && p.canonical_key() < q.canonical_key())));
  }
  int total = 0;
  for (const auto& [n, count] : a.counts) total += count;
  CHECK(total == static_cast<int>(a.forbidden.size()));
  CHECK_THROWS_AS(mine_forbidden({ClassSpec::all(), true}, 11), std::length_error);
}
