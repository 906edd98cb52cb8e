#include <doctest.h>

#include <algorithm>
#include <set>

#include "oracles.hpp"
#include "starlight/chromatic.hpp"
#include "starlight/constructions.hpp"

using namespace starlight;

namespace {

// Independent re-check of what every builder promises.
void check_result(const ConstructionResult& r) {
  CHECK(oracle::partitions_edges(r.system));
  CHECK(oracle::proper(r.system, r.colouring.classes()));
  CHECK(r.colouring.used_classes() == r.claims.k);
  auto sizes = r.colouring.class_sizes();
  auto [lo, hi] = std::minmax_element(sizes.begin(), sizes.end());
  CHECK(r.claims.equitable == (*hi - *lo <= 1));
  CHECK(r.claims.strongly_equitable == (*hi == *lo));
}

std::size_t missing_blocks(const StarSystem& base, const StarSystem& big) {
  std::set<std::vector<Vertex>> have;
  for (std::size_t i = 0; i < big.size(); ++i) {
    auto b = big.block(i);
    std::vector<Vertex> key{b.center};
    key.insert(key.end(), b.leaves.begin(), b.leaves.end());
    have.insert(key);
  }
  std::size_t missing = 0;
  for (std::size_t i = 0; i < base.size(); ++i) {
    auto b = base.block(i);
    std::vector<Vertex> key{b.center};
    key.insert(key.end(), b.leaves.begin(), b.leaves.end());
    missing += !have.count(key);
  }
  return missing;
}

}  // namespace

TEST_CASE("equitable 3-star systems for admissible orders") {
  for (Vertex n = 6; n <= 40; ++n) {
    if (!is_admissible(3, n)) {
      CHECK_THROWS_AS(build_equitable_3star(n), InadmissibleOrder);
      continue;
    }
    auto r = build_equitable_3star(n);
    CHECK(r.system.n() == n);
    CHECK(r.claims.equitable);
    check_result(r);
  }
}

TEST_CASE("strongly equitable order-2e systems") {
  for (int e = 3; e <= 10; ++e) {
    auto r = build_strong_2chromatic(e);
    CHECK(r.system.n() == static_cast<Vertex>(2 * e));
    CHECK(r.system.size() == static_cast<std::size_t>(2 * e - 1));
    CHECK(r.claims.strongly_equitable);
    check_result(r);
  }
  CHECK_THROWS_AS(build_strong_2chromatic(2), InvalidArgument);
}

TEST_CASE("3-star extensions keep the base and the chromatic number") {
  auto base = build_equitable_3star(6);
  for (Vertex n : {7u, 9u, 10u, 12u, 13u, 15u, 16u}) {
    auto r = extend_3star(base, n);
    CHECK(r.system.n() == n);
    CHECK(missing_blocks(base.system, r.system) == 0);
    check_result(r);
  }
  // From an order = 1 (mod 3) one base star is taken apart.
  auto seven = build_equitable_3star(7);
  auto r = extend_3star(seven, 9);
  check_result(r);
  CHECK(missing_blocks(seven.system, r.system) == 1);
  CHECK_THROWS_AS(extend_3star(base, 8), InadmissibleOrder);
  CHECK_THROWS(extend_3star(base, 5));
}

TEST_CASE("3-star extension with either side receiving the new vertices") {
  auto three = lift_3star(build_equitable_3star(6), 2);
  for (int split = 1; split <= 2; ++split) {
    auto r = extend_3star(three, 70, split);
    CHECK(r.claims.k == 3);
    check_result(r);
  }
}

TEST_CASE("e-star extensions") {
  auto base = build_strong_2chromatic(4);
  for (Vertex n : {9u, 16u, 17u, 24u, 25u}) {
    auto r = extend_estar(base, n);
    CHECK(missing_blocks(base.system, r.system) == 0);
    check_result(r);
  }
  auto nine = extend_estar(base, 9);
  check_result(extend_estar(nine, 17));
  CHECK_THROWS_AS(extend_estar(base, 12), InadmissibleOrder);
}

TEST_CASE("lifts add one colour") {
  auto three = lift_3star(build_equitable_3star(6), 1);
  CHECK(three.system.n() == 66);
  CHECK(three.system.size() == 715);
  CHECK(three.claims.k == 3);
  check_result(three);

  auto other_seed = lift_3star(build_equitable_3star(6), 2);
  check_result(other_seed);
  CHECK(lift_3star(build_equitable_3star(6), 1).system == three.system);

  std::vector<std::string> logs;
  auto estar = lift_estar(build_strong_2chromatic(3), 1, &logs);
  CHECK(estar.claims.k == 3);
  check_result(estar);
  CHECK_FALSE(logs.empty());  // the subsets-per-class fallback at (3,3)

  auto four = lift_estar(build_strong_2chromatic(4), 1);
  CHECK(four.claims.k == 3);
  check_result(four);
  CHECK(find_colouring(four.system, 2).verdict == Verdict::NotColourable);
}

TEST_CASE("uniquely 2-chromatic system and its extensions") {
  auto u = build_unique_2chromatic(3);
  CHECK(u.system.n() == 138);
  CHECK(u.claims.unique);
  CHECK(u.claims.strongly_equitable);
  check_result(u);
  CHECK(unique_2chromatic_layout(3).copies == 18);

  for (Vertex n : {139u, 144u, 145u}) {
    auto r = extend_unique(u, n);
    CHECK(r.system.n() == n);
    CHECK(missing_blocks(u.system, r.system) == 0);
    check_result(r);
  }
  CHECK_THROWS_AS(extend_unique(build_strong_2chromatic(3), 7), InvalidArgument);
}

TEST_CASE("equitable lift and uniquely k-chromatic gadget") {
  auto u = build_unique_2chromatic(3);
  auto eq = lift_unique_to_equitable(u);
  CHECK(eq.system.n() == 414);
  CHECK(eq.colouring.class_sizes() == std::vector<std::size_t>{138, 138, 138});
  check_result(eq);

  auto layout = unique_kchromatic_layout(3, 3, 414);
  CHECK(layout.gadget_size == 48);
  CHECK(layout.copies == 41);
  CHECK_THROWS_AS(make_unique_kchromatic(build_strong_2chromatic(3)), InvalidArgument);
}
