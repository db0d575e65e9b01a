#include <algorithm>
#include <random>
#include <vector>

#include "doctest.h"
#include "kneser/constructions.hpp"
#include "kneser/core.hpp"
#include "kneser/geodesy.hpp"
#include "kneser/vertex_set.hpp"

using namespace kneser;

namespace {

VertexSet set_from(const GraphParams& p,
                   const std::vector<std::vector<int>>& element_lists) {
  std::vector<KVertex> vs;
  for (const auto& e : element_lists) vs.push_back(make_vertex(p, e));
  return to_set(p, vs);
}

// Image of a vertex under a permutation of the ground set.
KVertex apply_permutation(const std::vector<int>& perm, KVertex v) {
  std::uint64_t out = 0;
  for (int e : elements(v)) out |= 1ull << (perm[static_cast<std::size_t>(e) - 1] - 1);
  return KVertex{out};
}

}  // namespace

TEST_CASE("diametrically opposed set") {
  const auto p62 = make_params(2, 2);
  const auto o62 = DistanceOracle::bfs(p62);
  const VertexId r = rank(p62, make_vertex(p62, {1, 2}));
  const auto d = diametrically_opposed_set(p62, o62, r);
  const auto expected = set_from(p62, {{1, 3}, {1, 4}, {1, 5}, {1, 6},
                                       {2, 3}, {2, 4}, {2, 5}, {2, 6}});
  CHECK(d == expected);

  // |D| matches the window count, and membership is exactly |r ∩ v| in window
  const auto p73 = make_params(3, 1);
  const auto o73 = DistanceOracle::bfs(p73);
  const auto r73 = make_vertex(p73, {1, 2, 3});
  const auto d73 = diametrically_opposed_set(p73, o73, rank(p73, r73));
  CHECK(d73.count() == gn_upper_bound(p73) - 1);
  for (VertexId v = 0; v < vertex_count(p73); ++v)
    CHECK(d73.test(v) == (intersection_size(r73, unrank(p73, v)) == 1));
}

TEST_CASE("root geodetic set is geodetic with the closed-form size") {
  const auto p62 = make_params(2, 2);
  const auto o62 = DistanceOracle::bfs(p62);
  const auto s = root_geodetic_set(p62, o62, 0);
  CHECK(s.count() == 9);
  CHECK(s.test(0));
  CHECK(is_geodetic_set(p62, o62, s));

  const auto p73 = make_params(3, 1);
  const auto o73 = DistanceOracle::bfs(p73);
  const auto s73 = root_geodetic_set(p73, o73, 0);
  CHECK(s73.count() == 19);
  CHECK(is_geodetic_set(p73, o73, s73));
}

TEST_CASE("level structure partitions the graph") {
  const auto p = make_params(3, 1);
  const auto oracle = DistanceOracle::bfs(p);
  const auto ls = build_level_structure(p, oracle, 0);
  REQUIRE(ls.layers.size() == 4);
  std::uint64_t total = 0;
  for (const auto& layer : ls.layers) total += layer.count();
  CHECK(total == vertex_count(p));
  CHECK(ls.level[ls.root] == 0);
  CHECK(ls.layers[0].count() == 1);
  CHECK(ls.layers[1].count() == degree(p));
  CHECK(ls.layers.back().count() > 0);  // the deepest layer is reached

  // adjacent vertices sit at most one level apart
  const auto verts = all_vertices(p);
  for (VertexId u = 0; u < verts.size(); ++u)
    for (VertexId v = u + 1; v < verts.size(); ++v)
      if (is_adjacent(verts[u], verts[v]))
        CHECK(std::abs(ls.level[u] - ls.level[v]) <= 1);
}

TEST_CASE("deeper neighbor: worked examples") {
  const auto p73 = make_params(3, 1);
  const VertexId r = rank(p73, make_vertex(p73, {1, 2, 3}));
  const VertexId x = rank(p73, make_vertex(p73, {4, 5, 6}));
  // x sits one level below r only; its sole shallower neighbor is r itself
  const KVertex z = deeper_neighbor(p73, r, x, r);
  CHECK(intersection_size(unrank(p73, r), z) == 2);
  CHECK(is_adjacent(z, unrank(p73, x)));
  CHECK(distance(p73, unrank(p73, r), z) == 2);

  const auto p94 = make_params(4, 1);
  const VertexId r94 = rank(p94, make_vertex(p94, {1, 2, 3, 4}));
  const VertexId x94 = rank(p94, make_vertex(p94, {5, 6, 7, 8}));
  const KVertex z94 = deeper_neighbor(p94, r94, x94, r94);
  CHECK(distance(p94, unrank(p94, r94), z94) == 2);
  CHECK(is_adjacent(z94, unrank(p94, x94)));
}

TEST_CASE("deeper neighbor: exhaustive sweep on K(7,3)") {
  const auto p = make_params(3, 1);
  const auto oracle = DistanceOracle::bfs(p);
  const auto count = vertex_count(p);
  const int diam = diameter(p);
  int checked = 0;
  for (VertexId r = 0; r < count; ++r) {
    for (VertexId x = 0; x < count; ++x) {
      const int lx = oracle.distance(r, x);
      if (lx < 1 || lx >= diam) continue;
      for (VertexId y = 0; y < count; ++y) {
        if (!is_adjacent(unrank(p, x), unrank(p, y))) continue;
        if (oracle.distance(r, y) != lx - 1) continue;
        const KVertex z = deeper_neighbor(p, r, x, y);
        REQUIRE(oracle.distance(r, rank(p, z)) == lx + 1);
        REQUIRE(is_adjacent(z, unrank(p, x)));
        ++checked;
      }
    }
  }
  CHECK(checked > 0);
}

TEST_CASE("deeper neighbor: precondition violations") {
  const auto p = make_params(3, 1);
  const VertexId r = rank(p, make_vertex(p, {1, 2, 3}));
  const VertexId x1 = rank(p, make_vertex(p, {4, 5, 6}));   // level 1
  const VertexId x3 = rank(p, make_vertex(p, {1, 4, 5}));   // level 3 (deepest)
  const VertexId y2 = rank(p, make_vertex(p, {1, 2, 4}));   // level 2

  CHECK_THROWS_AS(deeper_neighbor(p, r, r, r), PreconditionViolated);    // x at level 0
  CHECK_THROWS_AS(deeper_neighbor(p, r, x3, x1), PreconditionViolated);  // x at last level
  CHECK_THROWS_AS(deeper_neighbor(p, r, x1, y2), PreconditionViolated);  // y not adjacent
  // adjacent y on the wrong level: {4,5,6} at level 1 next to {1,2,7} at level 2
  const VertexId y_wrong = rank(p, make_vertex(p, {1, 2, 7}));
  CHECK_THROWS_AS(deeper_neighbor(p, r, x1, y_wrong), PreconditionViolated);
}

TEST_CASE("gn upper bound") {
  CHECK(gn_upper_bound(make_params(2, 2)) == 9);
  CHECK(gn_upper_bound(make_params(2, 1)) == 7);
  CHECK(gn_upper_bound(make_params(3, 1)) == 19);
  // dominates the exact diameter-two value
  for (int k = 1; k <= 6; ++k) {
    const auto p = make_params(2, k);
    CHECK(gn_upper_bound(p) >= gn_diameter_two(p));
  }
}

TEST_CASE("pivot geodetic set for diameter two") {
  const auto p62 = make_params(2, 2);
  const auto o62 = DistanceOracle::bfs(p62);
  const auto star = pivot_geodetic_set(p62, 1);
  CHECK(star == set_from(p62, {{1, 2}, {1, 3}, {1, 4}, {1, 5}, {1, 6}}));
  CHECK(is_geodetic_set(p62, o62, star));

  const auto p52 = make_params(2, 1);
  CHECK(pivot_geodetic_set(p52, 1).count() == 4);

  const auto p83 = make_params(3, 2);
  const auto o83 = DistanceOracle::bfs(p83);
  const auto star83 = pivot_geodetic_set(p83, 2);
  CHECK(star83.count() == 21);
  CHECK(is_geodetic_set(p83, o83, star83));
  // independence: all members share the pivot
  const auto ids = members(star83);
  for (std::size_t i = 0; i < ids.size(); ++i)
    for (std::size_t j = i + 1; j < ids.size(); ++j)
      CHECK_FALSE(is_adjacent(unrank(p83, ids[i]), unrank(p83, ids[j])));

  CHECK_THROWS_AS(pivot_geodetic_set(make_params(3, 1), 1), DiameterNotTwo);
  CHECK_THROWS_AS(pivot_geodetic_set(make_params(1, 1), 1), DiameterNotTwo);
  CHECK_THROWS_AS(pivot_geodetic_set(p62, 0), PivotOutOfRange);
  CHECK_THROWS_AS(pivot_geodetic_set(p62, 7), PivotOutOfRange);
}

TEST_CASE("exact diameter-two geodetic number") {
  CHECK(gn_diameter_two(make_params(2, 2)) == 5);
  CHECK(gn_diameter_two(make_params(2, 1)) == 4);
  CHECK(gn_diameter_two(make_params(3, 2)) == 21);
  CHECK_THROWS_AS(gn_diameter_two(make_params(3, 1)), DiameterNotTwo);
}

TEST_CASE("hull triple") {
  const auto p62 = make_params(2, 2);
  const auto t62 = hull_triple(p62);
  CHECK(to_text(t62[0]) == "1,2");
  CHECK(to_text(t62[1]) == "1,3");
  CHECK(to_text(t62[2]) == "1,4");
  const auto o62 = DistanceOracle::bfs(p62);
  CHECK(is_hull_set(p62, o62, to_set(p62, {t62[0], t62[1], t62[2]})));

  const auto p52 = make_params(2, 1);
  const auto t52 = hull_triple(p52);
  CHECK(is_hull_set(p52, DistanceOracle::bfs(p52), to_set(p52, {t52[0], t52[1], t52[2]})));

  const auto p83 = make_params(3, 2);
  const auto t83 = hull_triple(p83);
  CHECK(to_text(t83[0]) == "1,2,3");
  CHECK(to_text(t83[1]) == "1,2,4");
  CHECK(to_text(t83[2]) == "1,2,5");
  CHECK(is_hull_set(p83, DistanceOracle::bfs(p83), to_set(p83, {t83[0], t83[1], t83[2]})));

  CHECK_THROWS_AS(hull_triple(make_params(3, 1)), DiameterNotTwo);
}

TEST_CASE("hull pair") {
  const auto p72 = make_params(2, 3);
  const auto pr = hull_pair(p72);
  CHECK(to_text(pr[0]) == "1,2");
  CHECK(to_text(pr[1]) == "1,3");
  CHECK(is_hull_set(p72, DistanceOracle::bfs(p72), to_set(p72, {pr[0], pr[1]})));

  const auto p82 = make_params(2, 4);
  const auto pr82 = hull_pair(p82);
  CHECK(is_hull_set(p82, DistanceOracle::bfs(p82), to_set(p82, {pr82[0], pr82[1]})));

  CHECK_THROWS_AS(hull_pair(make_params(2, 2)), HullPairUnavailable);
  CHECK_THROWS_AS(hull_pair(make_params(2, 1)), HullPairUnavailable);
  CHECK_THROWS_AS(hull_pair(make_params(3, 1)), DiameterNotTwo);
}

TEST_CASE("exact diameter-two hull number") {
  CHECK(ghn_diameter_two(make_params(2, 1)) == 3);
  CHECK(ghn_diameter_two(make_params(2, 3)) == 2);
  CHECK(ghn_diameter_two(make_params(3, 2)) == 3);
  CHECK_THROWS_AS(ghn_diameter_two(make_params(4, 1)), DiameterNotTwo);
}

TEST_CASE("diametral predicate is invariant under ground-set permutations") {
  std::mt19937_64 rng(555);
  for (const auto& p : {make_params(3, 1), make_params(2, 2)}) {
    std::vector<int> perm(static_cast<std::size_t>(p.ground));
    for (int i = 0; i < p.ground; ++i) perm[static_cast<std::size_t>(i)] = i + 1;
    const auto count = vertex_count(p);
    std::uniform_int_distribution<VertexId> pick(0, count - 1);
    for (int iter = 0; iter < 200; ++iter) {
      std::shuffle(perm.begin(), perm.end(), rng);
      const KVertex u = unrank(p, pick(rng));
      const KVertex v = unrank(p, pick(rng));
      const KVertex pu = apply_permutation(perm, u);
      const KVertex pv = apply_permutation(perm, v);
      CHECK(is_diametral_pair(p, u, v) == is_diametral_pair(p, pu, pv));
      CHECK(distance(p, u, v) == distance(p, pu, pv));
    }
  }
}
