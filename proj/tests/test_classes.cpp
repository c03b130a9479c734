#include "doctest.h"
#include "oracles.hpp"
#include "unigraph/classes.hpp"
#include "unigraph/generate.hpp"

using namespace unigraph;

TEST_CASE("class tokens") {
  CHECK(ClassSpec::parse("kpartite:3") == ClassSpec::kpartite(3));
  CHECK(ClassSpec::parse("bipartite").k() == 2);
  CHECK(ClassSpec::parse("split").to_string() == "split");
  CHECK(ClassSpec::kpartite(4).to_string() == "kpartite:4");
  CHECK_THROWS_AS(ClassSpec::parse("planar"), std::invalid_argument);
  CHECK_THROWS_AS(ClassSpec::kpartite(1), std::invalid_argument);
}

TEST_CASE("small invariants") {
  CHECK(chromatic_number(cycle_graph(5)) == 3);
  CHECK(chromatic_number(complete_bipartite(3, 4)) == 2);
  CHECK(chromatic_number(Graph()) == 0);
  CHECK(clique_number(complement(cycle_graph(7))) == 3);
  CHECK(chromatic_number(complement(cycle_graph(7))) == 4);
  CHECK_FALSE(is_perfect(cycle_graph(5)));
  CHECK_FALSE(is_perfect(complement(cycle_graph(7))));
  CHECK(is_perfect(cycle_graph(6)));
  CHECK(is_apex_perfect(cycle_graph(5)));
  CHECK_FALSE(is_apex_perfect(disjoint_union(cycle_graph(5), cycle_graph(5))));
  CHECK(is_chordal(path_graph(6)));
  CHECK_FALSE(is_chordal(cycle_graph(4)));
  CHECK(is_split(star_graph(4)));
  CHECK_FALSE(is_split(disjoint_union(complete_graph(2), complete_graph(2))));
  CHECK(is_bipartite(cycle_graph(6)));
  CHECK_FALSE(is_bipartite(cycle_graph(7)));
}

TEST_CASE("predicates agree with brute force on all graphs up to six vertices") {
  for (int n = 0; n <= 6; ++n)
    for (const Graph& g : all_graphs(n)) {
      const int chi = oracle::chromatic_number(g);
      CHECK(chromatic_number(g) == chi);
      CHECK(clique_number(g) == oracle::clique_number(g));
      CHECK(is_bipartite(g) == (chi <= 2));
      CHECK(is_k_partite(g, 3) == (chi <= 3));
      CHECK(is_perfect(g) == oracle::perfect(g));
      CHECK(is_chordal(g) == oracle::chordal(g));
      const auto brute = oracle::split_partitions(g);
      const auto ours = split_partitions(g);
      CHECK(is_split(g) == !brute.empty());
      REQUIRE(ours.size() == brute.size());
      for (std::size_t i = 0; i < ours.size(); ++i) {
        CHECK(ours[i].clique == brute[i].first);
        CHECK(is_valid_split_partition(g, ours[i]));
      }
      if (auto a = bipartition(g)) {
        CHECK(oracle::is_stable(g, *a));
        CHECK(oracle::is_stable(g, g.vertices() & ~*a));
      }
    }
}

TEST_CASE("class sizes up to seven vertices") {
  // Unlabeled counts for n = 1..7 (OEIS A033995, A052431, A048192, A048194).
  const int bipartite[] = {1, 2, 3, 7, 13, 35, 88};
  const int perfect[] = {1, 2, 4, 11, 33, 148, 906};
  const int chordal[] = {1, 2, 4, 10, 27, 94, 393};
  const int split[] = {1, 2, 4, 9, 21, 56, 164};
  for (int n = 1; n <= 7; ++n) {
    int b = 0, p = 0, c = 0, s = 0;
    for (const Graph& g : all_graphs(n)) {
      b += is_bipartite(g);
      p += is_perfect(g);
      c += is_chordal(g);
      s += is_split(g);
    }
    CHECK(b == bipartite[n - 1]);
    CHECK(p == perfect[n - 1]);
    CHECK(c == chordal[n - 1]);
    CHECK(s == split[n - 1]);
  }
  CHECK(has_odd_hole(cycle_graph(7)));
  CHECK_FALSE(has_odd_hole(complement(cycle_graph(7))));
}

TEST_CASE("membership dispatch") {
  const Graph c5 = cycle_graph(5);
  CHECK(member(c5, ClassSpec::all()));
  CHECK_FALSE(member(c5, ClassSpec::bipartite()));
  CHECK(member(c5, ClassSpec::kpartite(3)));
  CHECK_FALSE(member(c5, ClassSpec::chordal()));
  CHECK_FALSE(member(c5, ClassSpec::split()));
  CHECK_FALSE(member(c5, ClassSpec::perfect()));
}
