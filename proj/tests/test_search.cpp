#include <string>

#include "doctest.h"
#include "kneser/constructions.hpp"
#include "kneser/core.hpp"
#include "kneser/geodesy.hpp"
#include "kneser/search.hpp"
#include "kneser/vertex_set.hpp"

using namespace kneser;

namespace {

bool witness_verified(const Report& rep, bool hull) {
  REQUIRE(rep.witness.has_value());
  const auto oracle = DistanceOracle::bfs(rep.params);
  const VertexSet w = to_set(rep.params, *rep.witness);
  return hull ? is_hull_set(rep.params, oracle, w)
              : is_geodetic_set(rep.params, oracle, w);
}

}  // namespace

TEST_CASE("quantity names round-trip") {
  for (auto q : {Quantity::Gn, Quantity::Ghn, Quantity::Theorem1,
                 Quantity::Theorem3, Quantity::Theorem5, Quantity::Theorem7,
                 Quantity::Corollary2, Quantity::Corollary4, Quantity::Corollary8})
    CHECK(quantity_from_string(to_string(q)) == q);
  CHECK_FALSE(quantity_from_string("theorem9").has_value());
}

TEST_CASE("minimum geodetic sets on small diameter-two graphs") {
  const auto rep52 = min_geodetic_set(make_params(2, 1));
  REQUIRE(rep52.value.has_value());
  CHECK(*rep52.value == 4);
  CHECK(*rep52.value == gn_diameter_two(rep52.params));
  CHECK(rep52.agrees_with_claim);
  CHECK(witness_verified(rep52, /*hull=*/false));

  const auto rep62 = min_geodetic_set(make_params(2, 2));
  CHECK(*rep62.value == 5);
  CHECK(rep62.agrees_with_claim);
  CHECK(witness_verified(rep62, /*hull=*/false));

  CHECK(*rep52.value <= gn_upper_bound(rep52.params));
  CHECK(*rep62.value <= gn_upper_bound(rep62.params));
}

TEST_CASE("minimum geodetic set on a complete graph needs every vertex") {
  // K(3,1) is a triangle: adjacent intervals have no interior
  const auto rep = min_geodetic_set(make_params(1, 1));
  REQUIRE(rep.value.has_value());
  CHECK(*rep.value == 3);
}

TEST_CASE("minimum hull sets") {
  const auto rep52 = min_hull_set(make_params(2, 1));
  CHECK(*rep52.value == 3);
  CHECK(rep52.agrees_with_claim);
  CHECK(witness_verified(rep52, /*hull=*/true));

  const auto rep62 = min_hull_set(make_params(2, 2));
  CHECK(*rep62.value == 3);

  const auto rep82 = min_hull_set(make_params(2, 4));
  REQUIRE(rep82.value.has_value());
  CHECK(*rep82.value == 2);
  // lexicographically smallest witness is the canonical pair
  REQUIRE(rep82.witness.has_value());
  CHECK(to_text((*rep82.witness)[0]) == "1,2");
  CHECK(to_text((*rep82.witness)[1]) == "1,3");
}

TEST_CASE("search is independent of the thread count") {
  for (int threads : {1, 2, 4}) {
    const auto rep = min_hull_set(make_params(3, 2), SearchBudget{}, threads);
    REQUIRE(rep.value.has_value());
    CHECK(*rep.value == 3);
    const auto base = min_hull_set(make_params(3, 2), SearchBudget{}, 1);
    REQUIRE(rep.witness.has_value());
    CHECK(*rep.witness == *base.witness);
  }
}

TEST_CASE("candidate budget reports bounds instead of a value") {
  SearchBudget tight;
  tight.max_candidates = 10;
  const auto rep = min_geodetic_set(make_params(2, 2), tight);
  CHECK_FALSE(rep.value.has_value());
  CHECK(rep.budget_exceeded);
  CHECK_FALSE(rep.agrees_with_claim);
  REQUIRE(rep.lower_bound.has_value());
  CHECK(*rep.lower_bound == 2);
  REQUIRE(rep.upper_bound.has_value());
  CHECK(*rep.upper_bound == 5);
  REQUIRE(rep.discrepancy_note.has_value());
  CHECK(rep.discrepancy_note->find("budget") != std::string::npos);
}

TEST_CASE("subset-size budget reports bounds instead of a value") {
  SearchBudget small;
  small.max_subset_size = 2;
  const auto rep = min_geodetic_set(make_params(2, 2), small);
  CHECK_FALSE(rep.value.has_value());
  CHECK(rep.budget_exceeded);
  CHECK(*rep.lower_bound == 3);  // both smaller cardinalities exhausted
}

TEST_CASE("instance enumeration is ordered and capped") {
  const auto instances = enumerate_instances(120);
  REQUIRE_FALSE(instances.empty());
  for (std::size_t i = 1; i < instances.size(); ++i) {
    const auto& a = instances[i - 1];
    const auto& b = instances[i];
    CHECK((a.n < b.n || (a.n == b.n && a.k < b.k)));
  }
  for (const auto& p : instances) CHECK(vertex_count(p) <= 120);
  // K(9,4) has 126 vertices and must be excluded at this cap
  for (const auto& p : instances) CHECK_FALSE((p.n == 4 && p.k == 1));
}

TEST_CASE("sweep: theorem1 agrees on every small instance") {
  const auto reports = sweep_verify(Quantity::Theorem1, 120);
  CHECK(all_agree(reports));
  bool saw_n1 = false;
  for (const auto& r : reports)
    if (r.params.n == 1) {
      saw_n1 = true;
      REQUIRE(r.discrepancy_note.has_value());
      CHECK(r.discrepancy_note->find("outside theorem hypotheses") != std::string::npos);
    }
  CHECK(saw_n1);
}

TEST_CASE("sweep: corollary8 adjudication notes") {
  const auto reports = sweep_verify(Quantity::Corollary8, 60);
  CHECK(all_agree(reports));
  bool saw_82 = false, saw_83 = false, saw_52 = false;
  for (const auto& r : reports) {
    if (r.params.n == 2 && r.params.k == 4) {
      saw_82 = true;
      REQUIRE(r.value.has_value());
      CHECK(*r.value == 2);
      CHECK(r.discrepancy_note.has_value());
    }
    if (r.params.n == 3 && r.params.k == 2) {
      saw_83 = true;
      REQUIRE(r.value.has_value());
      CHECK(*r.value == 3);
      CHECK(r.discrepancy_note.has_value());
    }
    if (r.params.n == 2 && r.params.k == 1) {
      saw_52 = true;
      CHECK(*r.value == 3);
      CHECK_FALSE(r.discrepancy_note.has_value());  // named and confirmed
    }
  }
  CHECK(saw_82);
  CHECK(saw_83);
  CHECK(saw_52);
}

TEST_CASE("sweep reports are independent of the thread count") {
  const auto a = sweep_verify(Quantity::Theorem3, 60, 1);
  const auto b = sweep_verify(Quantity::Theorem3, 60, 2);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].params == b[i].params);
    CHECK(a[i].agrees_with_claim == b[i].agrees_with_claim);
    CHECK(a[i].value == b[i].value);
    CHECK(a[i].discrepancy_note == b[i].discrepancy_note);
  }
}

TEST_CASE("sweep rejects searched quantities as targets") {
  CHECK_THROWS_AS(sweep_verify(Quantity::Gn, 100), Error);
}
