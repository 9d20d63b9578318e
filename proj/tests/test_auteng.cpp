#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "vdg/auteng.hpp"
#include "vdg/families.hpp"

using namespace vdg;

namespace {

Graph path3() { return Graph::from_edges(3, {{0, 1}, {1, 2}}); }

Graph random_graph(int n, std::mt19937& rng) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng() & 1) edges.emplace_back(u, v);
  return Graph::from_edges(n, edges);
}

}  // namespace

TEST_CASE("refinement splits by degree and is idempotent") {
  Graph c5 = cycle(5);
  Coloring uniform = refine(c5, Coloring::unit(5));
  CHECK(uniform.cells.size() == 1);

  Coloring split = refine(path3(), Coloring::unit(3));
  REQUIRE(split.cells.size() == 2);
  CHECK(split.cells[0] == std::vector<int>{0, 2});
  CHECK(split.cells[1] == std::vector<int>{1});
  CHECK(is_equitable(path3(), split));

  for (const char* text : {"johnson:5,2", "kneser:5,2", "bipartite-kneser:4,1", "cycle:6"}) {
    Graph g = build_family(FamilySpec::parse(text));
    Coloring once = refine(g, Coloring::unit(g.vertex_count()));
    Coloring twice = refine(g, once);
    CHECK(once.cells == twice.cells);
    CHECK(is_equitable(g, once));
  }
}

TEST_CASE("automorphism groups of named graphs") {
  CHECK(automorphism_group(cycle(5)).order() == 10);
  CHECK(automorphism_group(cycle(6)).order() == 12);
  CHECK(automorphism_group(kneser(5, 2)).order() == 120);
  CHECK(automorphism_group(johnson(5, 2)).order() == 120);
  CHECK(automorphism_group(path3()).order() == 2);
  CHECK(automorphism_group(complete(3)).order() == 6);
  CHECK(automorphism_group(Graph::from_edges(4, {})).order() == 24);
  CHECK(automorphism_group(Graph::from_edges(0, {})).order() == 1);
  CHECK(automorphism_group(Graph::from_edges(1, {})).order() == 1);
}

TEST_CASE("emitted generators preserve edges and act within refinement cells") {
  Graph g = johnson(5, 2);
  PermGroup aut = automorphism_group(g);
  for (const Perm& p : aut.generators()) CHECK(is_automorphism(g, p));

  // orbits never join vertices that refinement separates
  Graph uneven = Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}});
  Coloring base = refine(uneven, Coloring::unit(5));
  PermGroup aut2 = automorphism_group(uneven);
  for (const Perm& p : aut2.generators())
    for (int v = 0; v < 5; ++v)
      CHECK(base.color[static_cast<std::size_t>(v)] == base.color[static_cast<std::size_t>(p(v))]);
}

TEST_CASE("generators of bipartite connected graphs respect the sides") {
  Graph h41 = bipartite_kneser(4, 1);
  auto parts = bipartition(h41);
  REQUIRE(parts.has_value());
  PermGroup aut = automorphism_group(h41);
  for (const Perm& p : aut.generators()) {
    bool fixes = true, swaps = true;
    for (int v : parts->u) {
      bool in_u = std::find(parts->u.begin(), parts->u.end(), p(v)) != parts->u.end();
      (in_u ? swaps : fixes) = false;
    }
    CHECK((fixes || swaps));
  }
}

TEST_CASE("brute-force oracle") {
  CHECK(automorphism_group_brute(complete(3)).size() == 6);
  CHECK(automorphism_group_brute(path3()).size() == 2);
  CHECK(automorphism_group_brute(cycle(6)).size() == 12);
  CHECK(automorphism_group_brute(cycle(9)).size() == 18);  // backtracking route
  CHECK_THROWS_AS(automorphism_group_brute(cycle(11)), PreconditionError);
}

TEST_CASE("search agrees with brute force on random graphs") {
  std::mt19937 rng(777);
  for (int trial = 0; trial < 120; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 7);
    Graph g = random_graph(n, rng);
    CHECK(automorphism_group(g).order() == static_cast<long>(automorphism_group_brute(g).size()));
  }
}

TEST_CASE("search agrees with brute force on every double cover of a 4-vertex graph") {
  // doubles carry twins and fall apart for bipartite bases, both of which
  // stress the pruning
  for (std::uint64_t mask = 0; mask < 64; ++mask) {
    std::vector<std::pair<int, int>> edges;
    std::size_t bit = 0;
    for (int u = 0; u < 4; ++u)
      for (int v = u + 1; v < 4; ++v, ++bit)
        if ((mask >> bit) & 1) edges.emplace_back(u, v);
    Graph b = bipartite_double(Graph::from_edges(4, edges));
    CHECK(automorphism_group(b).order() == static_cast<long>(automorphism_group_brute(b).size()));
  }
}

TEST_CASE("the generator set is deterministic") {
  Graph g = kneser(5, 2);
  PermGroup a = automorphism_group(g);
  PermGroup b = automorphism_group(g);
  CHECK(a.generators().size() == b.generators().size());
  for (std::size_t i = 0; i < a.generators().size(); ++i) CHECK(a.generators()[i] == b.generators()[i]);
}

TEST_CASE("restriction to a stabilized part") {
  CHECK(restrict_perm(Perm(6), {0, 2, 4}) == Perm(3));

  Graph c5 = cycle(5);
  Graph b = bipartite_double(c5);
  PermGroup aut = automorphism_group(b);
  std::vector<int> layer0{0, 1, 2, 3, 4};
  // a layer-preserving automorphism restricts to an automorphism of C5
  for (const Perm& p : aut.generators()) {
    bool preserves = true;
    for (int v : layer0) preserves = preserves && p(v) < 5;
    if (!preserves) continue;
    Perm r = restrict_perm(p, layer0);
    CHECK(is_automorphism(c5, r));
  }

  std::vector<int> swap_images(10);
  for (int i = 0; i < 5; ++i) {
    swap_images[static_cast<std::size_t>(i)] = i + 5;
    swap_images[static_cast<std::size_t>(i + 5)] = i;
  }
  CHECK_THROWS_AS(restrict_perm(Perm(swap_images), layer0), PreconditionError);
}

TEST_CASE("lifted automorphisms commute with the layer swap") {
  Graph c5 = cycle(5);
  PermGroup base = automorphism_group(c5);
  std::vector<int> swap_images(10);
  for (int i = 0; i < 5; ++i) {
    swap_images[static_cast<std::size_t>(i)] = i + 5;
    swap_images[static_cast<std::size_t>(i + 5)] = i;
  }
  Perm t(swap_images);
  std::vector<Perm> lifted;
  for (const Perm& g : base.generators()) {
    std::vector<int> images(10);
    for (int v = 0; v < 5; ++v) {
      images[static_cast<std::size_t>(v)] = g(v);
      images[static_cast<std::size_t>(v + 5)] = g(v) + 5;
    }
    lifted.emplace_back(images);
  }
  Graph b = bipartite_double(c5);
  for (const Perm& e : lifted) CHECK(is_automorphism(b, e));
  CHECK(commutes(t, PermGroup::from_generators(10, lifted)));
}

TEST_CASE("search honors a deadline") {
  AutOptions options;
  options.deadline = std::chrono::steady_clock::now() - std::chrono::seconds(1);
  CHECK_THROWS_AS(automorphism_group(johnson(7, 3), options), TimeoutError);
}
