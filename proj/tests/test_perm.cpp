#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "oracles.hpp"
#include "vdg/perm.hpp"

using namespace vdg;

TEST_CASE("compose applies the right factor first") {
  Perm p = Perm::from_cycles(3, {{0, 1}});
  Perm q = Perm::from_cycles(3, {{1, 2}});
  CHECK(compose(Perm(3), p) == p);
  CHECK(compose(p, Perm(3)) == p);
  // hand-checked against the S3 multiplication table
  CHECK(compose(p, q) == Perm({1, 2, 0}));
  CHECK(compose(p, p) == Perm(3));
  CHECK_THROWS_AS(compose(p, Perm(4)), InvariantError);
}

TEST_CASE("image tables must be bijections") {
  CHECK_THROWS_AS(Perm({0, 0, 1}), InvariantError);
  CHECK_THROWS_AS(Perm({0, 3, 1}), InvariantError);
  CHECK(Perm({2, 0, 1}).inverse() == Perm({1, 2, 0}));
  CHECK(compose(Perm({2, 0, 1}), Perm({2, 0, 1}).inverse()) == Perm(3));
}

TEST_CASE("group order from generators") {
  CHECK(PermGroup::from_generators(4, {}).order() == 1);

  std::vector<Perm> adjacent;
  for (int i = 0; i + 1 < 5; ++i) adjacent.push_back(Perm::from_cycles(5, {{i, i + 1}}));
  PermGroup s5 = PermGroup::from_generators(5, adjacent);
  CHECK(s5.order() == 120);
  CHECK(oracles::closure(5, adjacent).size() == 120);

  PermGroup c5 = PermGroup::from_generators(5, {Perm::from_cycles(5, {{0, 1, 2, 3, 4}})});
  CHECK(c5.order() == 5);
}

TEST_CASE("membership agrees with exhaustive closure") {
  Perm rot = Perm::from_cycles(3, {{0, 1, 2}});
  PermGroup c3 = PermGroup::from_generators(3, {rot});
  CHECK(c3.contains(Perm(3)));
  CHECK(c3.contains(rot));
  CHECK_FALSE(c3.contains(Perm::from_cycles(3, {{0, 1}})));
}

TEST_CASE("pointwise stabilizers") {
  std::vector<Perm> gens{Perm::from_cycles(3, {{0, 1}}), Perm::from_cycles(3, {{1, 2}})};
  PermGroup s3 = PermGroup::from_generators(3, gens);
  CHECK(s3.order() == 6);
  CHECK(s3.pointwise_stabilizer({0}).order() == 2);
  CHECK(s3.pointwise_stabilizer({0, 1, 2}).order() == 1);
  PermGroup c3 = PermGroup::from_generators(3, {Perm::from_cycles(3, {{0, 1, 2}})});
  CHECK(c3.pointwise_stabilizer({0}).order() == 1);
}

TEST_CASE("part stabilizer of a dihedral group on the even class") {
  std::vector<int> rot_images(6), ref_images(6);
  for (int i = 0; i < 6; ++i) {
    rot_images[static_cast<std::size_t>(i)] = (i + 1) % 6;
    ref_images[static_cast<std::size_t>(i)] = (6 - i) % 6;
  }
  PermGroup d6 = PermGroup::from_generators(6, {Perm(rot_images), Perm(ref_images)});
  CHECK(d6.order() == 12);
  PermGroup stab = part_stabilizer(d6, {0, 2, 4});
  CHECK(stab.order() == 6);
  for (const Perm& g : stab.generators())
    for (int v : {0, 2, 4}) CHECK((g(v) == 0 || g(v) == 2 || g(v) == 4));
}

TEST_CASE("part stabilizer keeps groups whose generators all fix the part") {
  PermGroup c3 = PermGroup::from_generators(6, {Perm::from_cycles(6, {{0, 1, 2}})});
  CHECK(part_stabilizer(c3, {0, 1, 2}).order() == c3.order());
}

TEST_CASE("part stabilizer handles all-swapping generator sets") {
  // Both generators swap the classes {0,2} and {1,3}; the stabilizer is the
  // Klein four-group inside this dihedral group of order 8.
  Perm r = Perm::from_cycles(4, {{0, 1, 2, 3}});
  Perm s = Perm::from_cycles(4, {{0, 1}, {2, 3}});
  PermGroup d4 = PermGroup::from_generators(4, {r, s});
  CHECK(d4.order() == 8);
  PermGroup stab = part_stabilizer(d4, {0, 2});
  CHECK(stab.order() == 4);
}

TEST_CASE("part stabilizer rejects mixing generators") {
  PermGroup g = PermGroup::from_generators(3, {Perm::from_cycles(3, {{0, 1, 2}})});
  CHECK_THROWS_AS(part_stabilizer(g, {0}), PreconditionError);
}

TEST_CASE("commutation against group generators") {
  PermGroup c3 = PermGroup::from_generators(3, {Perm::from_cycles(3, {{0, 1, 2}})});
  CHECK(commutes(Perm(3), c3));
  CHECK_FALSE(commutes(Perm::from_cycles(3, {{0, 1}}), c3));
}

TEST_CASE("schreier-sims order matches closure on random generator sets") {
  std::mt19937 rng(20240817);
  for (int trial = 0; trial < 60; ++trial) {
    const int degree = 4 + static_cast<int>(rng() % 4);
    std::vector<Perm> gens;
    const int count = 1 + static_cast<int>(rng() % 3);
    for (int i = 0; i < count; ++i) {
      std::vector<int> images(static_cast<std::size_t>(degree));
      std::iota(images.begin(), images.end(), 0);
      std::shuffle(images.begin(), images.end(), rng);
      gens.emplace_back(images);
    }
    auto all = oracles::closure(degree, gens);
    PermGroup grp = PermGroup::from_generators(degree, gens);
    REQUIRE(grp.order() == static_cast<long>(all.size()));
    for (std::size_t i = 0; i < all.size(); i += 7) CHECK(grp.contains(all[i]));
    // A permutation outside the closure must be rejected.
    std::vector<int> probe(static_cast<std::size_t>(degree));
    std::iota(probe.begin(), probe.end(), 0);
    for (int attempts = 0; attempts < 50; ++attempts) {
      std::shuffle(probe.begin(), probe.end(), rng);
      Perm candidate(probe);
      bool inside = std::find(all.begin(), all.end(), candidate) != all.end();
      CHECK(grp.contains(candidate) == inside);
      if (!inside) break;
    }
  }
}

TEST_CASE("strong generators fix their base prefix") {
  std::vector<Perm> gens{Perm::from_cycles(5, {{0, 1}}), Perm::from_cycles(5, {{0, 1, 2, 3, 4}})};
  PermGroup s5 = PermGroup::from_generators(5, gens);
  CHECK(s5.order() == 120);
  auto levels = s5.level_generators();
  const auto& base = s5.base();
  for (std::size_t i = 0; i < levels.size(); ++i)
    for (const Perm& g : levels[i])
      for (std::size_t j = 0; j < i; ++j) CHECK(g(base[j]) == base[j]);
}

TEST_CASE("element listing matches the order") {
  PermGroup s4 = PermGroup::from_generators(4, {Perm::from_cycles(4, {{0, 1}}), Perm::from_cycles(4, {{0, 1, 2, 3}})});
  auto elements = s4.elements();
  CHECK(elements.size() == 24);
  std::set<std::vector<int>> unique;
  for (const Perm& p : elements) unique.insert(p.images());
  CHECK(unique.size() == 24);
}

TEST_CASE("group json carries the order as a decimal string") {
  PermGroup c2 = PermGroup::from_generators(2, {Perm::from_cycles(2, {{0, 1}})});
  CHECK(c2.to_json() == R"({"degree":2,"generators":[[1,0]],"order":"2"})");
}
