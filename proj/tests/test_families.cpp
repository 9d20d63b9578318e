#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <bit>

#include "vdg/auteng.hpp"
#include "vdg/families.hpp"

using namespace vdg;

TEST_CASE("subset ranking is the lexicographic bijection") {
  CHECK(rank_subset({{1, 2}}, 5) == 0);
  CHECK(unrank_subset(9, 5, 2).elements == std::vector<int>{4, 5});
  for (std::uint64_t i = 0; i < binomial(6, 3); ++i) CHECK(rank_subset(unrank_subset(i, 6, 3), 6) == i);
  CHECK_THROWS_AS(unrank_subset(10, 5, 2), InvariantError);
  CHECK_THROWS_AS(rank_subset({{2, 1}}, 5), InvariantError);
  CHECK(subset_label(unrank_subset(0, 5, 2)) == "{1,2}");
}

TEST_CASE("johnson graphs") {
  Graph j = johnson(5, 2);
  CHECK(j.vertex_count() == 10);
  CHECK(j.edge_count() == 30);
  for (int v = 0; v < 10; ++v) CHECK(j.degree(v) == 6);
  CHECK(is_connected(j));
  CHECK(has_odd_cycle(j));

  Graph k4 = johnson(4, 1);
  for (int u = 0; u < 4; ++u)
    for (int v = u + 1; v < 4; ++v) CHECK(k4.adjacent(u, v));

  CHECK_THROWS_AS(johnson(4, 4), InvariantError);
}

TEST_CASE("johnson distance equals k minus the intersection size") {
  for (int n = 4; n <= 8; ++n)
    for (int k = 1; 2 * k <= n; ++k) {
      Graph g = johnson(n, k);
      std::vector<std::uint64_t> masks;
      for (int i = 0; i < g.vertex_count(); ++i) {
        std::uint64_t m = 0;
        for (int e : unrank_subset(static_cast<std::uint64_t>(i), n, k).elements) m |= std::uint64_t{1} << e;
        masks.push_back(m);
      }
      for (int u = 0; u < g.vertex_count(); ++u)
        for (int v = u + 1; v < g.vertex_count(); ++v) {
          int expected = k - std::popcount(masks[static_cast<std::size_t>(u)] & masks[static_cast<std::size_t>(v)]);
          CHECK(distance(g, u, v) == expected);
        }
    }
}

TEST_CASE("kneser graphs") {
  Graph petersen = kneser(5, 2);
  CHECK(petersen.vertex_count() == 10);
  for (int v = 0; v < 10; ++v) CHECK(petersen.degree(v) == 3);
  Graph k4 = kneser(9, 1);
  CHECK(k4.vertex_count() == 9);
  CHECK(k4.degree(0) == 8);
  CHECK_THROWS_AS(kneser(4, 2), InvariantError);

  Graph h52 = bipartite_kneser(5, 2);
  Graph doubled = bipartite_double(petersen);
  CHECK(h52.vertex_count() == doubled.vertex_count());
  CHECK(h52.edge_count() == doubled.edge_count());
  for (int v = 0; v < 20; ++v) CHECK(h52.degree(v) == 3);
}

TEST_CASE("inclusion families") {
  Graph h41 = bipartite_kneser(4, 1);
  CHECK(h41.vertex_count() == 8);
  for (int v = 0; v < 8; ++v) CHECK(h41.degree(v) == 3);
  CHECK(bipartition(h41).has_value());

  Graph b52 = bnk(5, 2);
  for (int v = 0; v < 10; ++v) CHECK(b52.degree(v) == 3);  // 2-subset side: n-k supersets

  Graph g512 = set_inclusion(5, 1, 2);
  for (int v = 0; v < 5; ++v) CHECK(g512.degree(v) == 4);
  for (int v = 5; v < g512.vertex_count(); ++v) CHECK(g512.degree(v) == 2);

  CHECK(bnk(5, 2).edges() == set_inclusion(5, 2, 3).edges());
  CHECK(bipartite_kneser(6, 2).edges() == set_inclusion(6, 2, 4).edges());

  // both sides of the bipartite Kneser graph have the same size
  for (int n = 4; n <= 7; ++n)
    for (int k = 1; 2 * k < n; ++k)
      CHECK(bipartite_kneser(n, k).vertex_count() == 2 * static_cast<int>(binomial(n, k)));

  CHECK_THROWS_AS(set_inclusion(5, 2, 4), InvariantError);
  CHECK_THROWS_AS(set_inclusion(5, 0, 2), InvariantError);
}

TEST_CASE("complement map is a side-swapping involutive automorphism") {
  Graph h41 = bipartite_kneser(4, 1);
  Perm t = complement_map(4, 1);
  CHECK(h41.label(t(0)) == "{2,3,4}");  // complement of {1}
  CHECK(compose(t, t).is_identity());
  CHECK(is_automorphism(h41, t));
  for (int v = 0; v < 4; ++v) CHECK(t(v) >= 4);

  Graph h52 = bipartite_kneser(5, 2);
  Perm t52 = complement_map(5, 2);
  CHECK(is_automorphism(h52, t52));
  CHECK(compose(t52, t52).is_identity());
  CHECK_THROWS_AS(complement_map(4, 2), InvariantError);
}

TEST_CASE("complete and cycle") {
  CHECK(complete(4).edge_count() == 6);
  Graph c5 = cycle(5);
  CHECK(c5.edge_count() == 5);
  for (int v = 0; v < 5; ++v) CHECK(c5.degree(v) == 2);
  CHECK(bipartition(cycle(6)).has_value());
  CHECK_FALSE(bipartition(cycle(5)).has_value());
  CHECK_THROWS_AS(complete(0), InvariantError);
  CHECK_THROWS_AS(cycle(2), InvariantError);
}

TEST_CASE("family graphs are vertex-determining") {
  for (const char* text : {"johnson:5,2", "johnson:6,3", "kneser:5,2", "bipartite-kneser:4,1",
                           "bipartite-kneser:5,2", "bnk:5,2", "set-inclusion:5,1,2", "set-inclusion:4,1,3",
                           "cycle:5", "cycle:6", "complete:4"})
    CHECK(is_vd(build_family(FamilySpec::parse(text))).vd);

  // the one exception in the small range: J(4,2) is the octahedron, where
  // disjoint pairs are twins (N({1,2}) = N({3,4}))
  auto j42 = is_vd(johnson(4, 2));
  CHECK_FALSE(j42.vd);
  CHECK(johnson(4, 2).label(j42.witness.first) == "{1,2}");
  CHECK(johnson(4, 2).label(j42.witness.second) == "{3,4}");
}

TEST_CASE("family spec grammar") {
  FamilySpec spec = FamilySpec::parse("JOHNSON:5,2");
  CHECK(spec.kind == FamilyKind::johnson);
  CHECK(spec.params == std::vector<long>{5, 2});
  CHECK(spec.to_string() == "johnson:5,2");
  CHECK(FamilySpec::parse("Doubled-Grassmann:2,3,1").to_string() == "doubled-grassmann:2,3,1");
  CHECK_THROWS_AS(FamilySpec::parse("coxeter:3"), ParseError);
  CHECK_THROWS_AS(FamilySpec::parse("johnson:5"), ParseError);
  CHECK_THROWS_AS(FamilySpec::parse("johnson:5,x"), ParseError);
  CHECK_THROWS_AS(build_family(FamilySpec::parse("johnson:1,5")), InvariantError);
}
