#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "starlight/chromatic.hpp"

using namespace starlight;

TEST_CASE("oracles agree with each other") {
  std::mt19937_64 rng(19);
  for (int round = 0; round < 20; ++round) {
    auto sys = oracle::random_star_system(2 + round % 2, 8 + static_cast<Vertex>(round % 2), rng);
    CHECK(oracle::partitions_edges(sys));
    for (int k = 1; k <= 3; ++k) {
      auto census = oracle::brute_force(sys, k);
      CHECK(std::min<std::uint64_t>(census.orbits, 2) == static_cast<std::uint64_t>(oracle::orbits_by_exclusion(sys, k)));
      // Every orbit with j used colours has k!/(k-j)! members, so counts are consistent.
      CHECK(census.proper >= census.orbits);
    }
  }
}

TEST_CASE("solver matches brute force on small random systems") {
  std::mt19937_64 rng(23);
  const std::pair<int, Vertex> shapes[] = {{2, 8}, {2, 9}, {3, 9}, {3, 10}, {4, 9}, {5, 10}};
  for (int round = 0; round < 30; ++round) {
    auto [e, n] = shapes[round % 6];
    auto sys = oracle::random_star_system(e, n, rng);
    for (int k = 1; k <= 3; ++k) {
      auto census = oracle::brute_force(sys, k);
      auto found = find_colouring(sys, k);
      CHECK((found.verdict == Verdict::Colourable) == (census.orbits > 0));
      if (found.colouring) CHECK(oracle::proper(sys, found.colouring->classes()));
      auto u = is_uniquely_k_colourable(sys, k);
      Uniqueness expect = census.orbits == 0   ? Uniqueness::NotColourable
                          : census.orbits == 1 ? Uniqueness::Unique
                                               : Uniqueness::Multiple;
      CHECK(u.verdict == expect);
    }
  }
}
