#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "unigraph/canon.hpp"
#include "unigraph/error.hpp"
#include "unigraph/generate.hpp"
#include "unigraph/graph6.hpp"
#include "unigraph/subgraph.hpp"

using namespace unigraph;

namespace {

Graph random_graph(std::mt19937_64& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) edges.emplace_back(u, v);
  return Graph(n, edges);
}

std::vector<int> random_perm(std::mt19937_64& rng, int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

}  // namespace

TEST_CASE("graph construction and queries") {
  const Graph g(4, {{0, 1}, {1, 2}, {2, 3}});
  CHECK(g.order() == 4);
  CHECK(g.size() == 3);
  CHECK(g.adjacent(1, 0));
  CHECK_FALSE(g.adjacent(0, 2));
  CHECK(g.degree(1) == 2);
  CHECK(g == path_graph(4));
  CHECK(complete_graph(5).size() == 10);
  CHECK(cycle_graph(6).size() == 6);
  CHECK(star_graph(3).order() == 4);
  CHECK(complete_bipartite(2, 3).size() == 6);
  CHECK(isolated_vertices(disjoint_union(complete_graph(2), Graph(2))) == 0b1100U);
  CHECK(max_degree(star_graph(4)) == 4);
  CHECK_THROWS_AS(Graph(3, {{0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(33), CapacityError);
  const std::vector<VertexSet> asym = {0b10, 0b00};
  CHECK_THROWS_AS(Graph::from_rows(2, asym), std::invalid_argument);
}

TEST_CASE("graph operations") {
  const Graph p5 = path_graph(5);
  CHECK(complement(complement(p5)) == p5);
  CHECK(delete_vertex(p5, 0) == path_graph(4));
  const std::vector<int> mid = {1, 2, 3};
  CHECK(induced_subgraph(p5, mid) == path_graph(3));
  const std::vector<int> bad = {7};
  CHECK_THROWS_AS(induced_subgraph(p5, bad), std::out_of_range);
  const std::vector<int> perm = {4, 3, 2, 1, 0};
  CHECK(relabel(p5, perm) == p5);
  CHECK(disjoint_union(p5, complete_graph(2)).size() == 5);
}

TEST_CASE("graph6 round trip and errors") {
  CHECK(graph6_encode(complete_graph(2)) == "A_");
  CHECK(graph6_encode(Graph()) == "?");
  CHECK(graph6_decode("D??").order() == 5);
  CHECK(graph6_decode(">>graph6<<A_\n") == complete_graph(2));
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    const Graph g = random_graph(rng, 1 + i % 32, 0.4);
    CHECK(graph6_decode(graph6_encode(g)) == g);
  }
  CHECK_THROWS_AS(graph6_decode(""), ParseError);
  CHECK_THROWS_AS(graph6_decode("A"), ParseError);
  CHECK_THROWS_AS(graph6_decode("A_?"), ParseError);
  CHECK_THROWS_AS(graph6_decode("A`"), ParseError);
  CHECK_THROWS_AS(graph6_decode("A "), ParseError);
  CHECK_THROWS_AS(graph6_decode("~?@c"), CapacityError);
}

TEST_CASE("canonical keys are labeling invariant and complete") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 300; ++i) {
    const int n = 1 + i % 12;
    const Graph g = random_graph(rng, n, 0.1 + 0.1 * (i % 8));
    const auto perm = random_perm(rng, n);
    CHECK(relabel(g, perm).canonical_key() == g.canonical_key());
    const auto lab = canonical_labeling(g);
    CHECK(relabel(g, lab.labels).canonical_key() == g.canonical_key());
    CHECK(canonical_graph(g).canonical_key() == g.canonical_key());
    CHECK(graph_from_key(g.canonical_key()).canonical_key() == g.canonical_key());
  }
  // Key equality matches brute-force isomorphism on random small pairs.
  for (int i = 0; i < 400; ++i) {
    const int n = 2 + i % 6;
    const Graph a = random_graph(rng, n, 0.5), b = random_graph(rng, n, 0.5);
    CHECK((a.canonical_key() == b.canonical_key()) == oracle::isomorphic(a, b));
  }
  // Strongly regular and vertex-transitive graphs stress the search tree.
  const Graph petersen(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 5}, {1, 6}, {2, 7}, {3, 8},
                            {4, 9}, {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5}});
  const auto perm = random_perm(rng, 10);
  CHECK(is_isomorphic(petersen, relabel(petersen, perm)));
  CHECK_FALSE(is_isomorphic(petersen, disjoint_union(cycle_graph(5), cycle_graph(5))));
  CHECK_FALSE(is_isomorphic(cycle_graph(6), disjoint_union(complete_graph(3), complete_graph(3))));
}

TEST_CASE("coloured canonical labeling respects colours") {
  const Graph p3 = path_graph(3);
  const std::vector<int> ends = {1, 0, 1}, mixed = {0, 1, 1};
  CHECK(canonical_labeling(p3, ends).key != canonical_labeling(p3, mixed).key);
  const std::vector<int> swapped = {1, 1, 0};
  const std::vector<int> perm = {2, 1, 0};
  CHECK(canonical_labeling(p3, mixed).key == canonical_labeling(relabel(p3, perm), swapped).key);
}

TEST_CASE("generation counts") {
  const std::vector<std::size_t> expected = {1, 1, 2, 4, 11, 34, 156, 1044, 12346};
  for (int n = 0; n <= 8; ++n) CHECK(all_graphs(n).size() == expected[n]);
  for (int n = 0; n <= 6; ++n) {
    const auto a = all_graphs(n), b = all_graphs_labeled(n);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i].canonical_key() == b[i].canonical_key());
  }
  CHECK_THROWS_AS(all_graphs_labeled(8), CapacityError);
  CHECK_THROWS_AS(all_graphs(11), CapacityError);
}

TEST_CASE("induced subgraph search agrees with brute force") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 300; ++i) {
    const Graph g = random_graph(rng, 6, 0.5), h = random_graph(rng, 2 + i % 4, 0.5);
    CHECK(contains_induced(g, h) == oracle::contains_induced(g, h));
    if (auto m = find_induced_embedding(g, h)) {
      for (int u = 0; u < h.order(); ++u)
        for (int v = u + 1; v < h.order(); ++v) CHECK(h.adjacent(u, v) == g.adjacent((*m)[u], (*m)[v]));
    }
  }
  CHECK(contains_induced(path_graph(5), disjoint_union(complete_graph(2), complete_graph(2))));
  CHECK_FALSE(contains_induced(cycle_graph(5), path_graph(5)));
  CHECK(find_subgraph_embedding(complete_graph(4), cycle_graph(4)).has_value());
  CHECK_FALSE(find_induced_embedding(complete_graph(4), cycle_graph(4)).has_value());
  // Induced subgraphs of C5: K0, K1, K2, 2K1, P3, K2+K1, P4, C5.
  CHECK(induced_subgraph_classes(cycle_graph(5)).size() == 8);
}
