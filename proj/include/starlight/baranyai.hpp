#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace starlight {

using Subset = std::vector<int>;  // ascending elements of [1, m]

// Classes of pairwise-disjoint e-subsets of [1, m] that together contain
// every e-subset exactly once.
struct SubsetPartition {
  int m = 0;
  int e = 0;
  std::vector<std::vector<Subset>> classes;
  friend bool operator==(const SubsetPartition&, const SubsetPartition&) = default;
};

// Grows the ground set one element at a time; each step rounds the
// fractional "which partial set receives the new element" loads to an
// integral choice with a bounded max-flow, so it never fails on feasible
// input. Requires m <= 64. Throws InfeasibleRequest on bad sizes.
SubsetPartition partition_all_subsets(int m, int e, std::span<const int> sizes, std::uint64_t seed = 0);

// Backtracking exact cover (most-constrained item first, identical classes
// tried once). Only for m <= 16;
// throws SearchExhausted when max_nodes is hit.
SubsetPartition partition_by_exact_cover(int m, int e, std::span<const int> sizes,
                                         std::uint64_t max_nodes = 20'000'000);

bool verify_partition(const SubsetPartition& p, std::span<const int> sizes);

// Lines "class <i>: {a b c} {d e f} ...", 1-based class index.
std::string serialize_partition(const SubsetPartition& p);

}  // namespace starlight
