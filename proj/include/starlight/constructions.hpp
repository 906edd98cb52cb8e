#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "starlight/core.hpp"

namespace starlight {

struct Claims {
  int k = 0;  // claimed chromatic number; the colouring uses exactly k classes
  bool equitable = false;
  bool strongly_equitable = false;
  bool unique = false;
  std::string provenance;  // builder name
  std::vector<std::pair<std::string, std::int64_t>> params;
};

struct ConstructionResult {
  StarSystem system;
  Colouring colouring;
  Claims claims;
};

// Every builder re-verifies its output (edge partition, proper colouring with
// exactly k nonempty classes) before returning and throws Error otherwise.

// Equitably 2-chromatic 3-star system of any admissible order, grown from the
// order-6 system by +3 and +1 steps; classes are odd and even ids.
ConstructionResult build_equitable_3star(Vertex n);

// k-chromatic 3-star system of order target_n from a k-chromatic base. Orders
// = 0 (mod 3) grow by +3 and finish with +1; a base of order = 1 (mod 3) first
// takes a +2 step that dismantles one star. `split` picks R = C_1..C_split
// (0 means k-1); new vertices join the smaller side.
ConstructionResult extend_3star(const ConstructionResult& base, Vertex target_n, int split = 0);

// k-chromatic 3-star system from a (k-1)-chromatic one of order = 0 (mod 3):
// gadget V of 2k-1 or 2k vertices plus disjoint copies of the base, one per
// class of a subset partition of the 3-subsets of V.
ConstructionResult lift_3star(const ConstructionResult& base, std::uint64_t seed = 0);

// Strongly equitable 2-chromatic e-star system of order 2e.
ConstructionResult build_strong_2chromatic(int e);

// e-star analogue of extend_3star over orders = 0, 1 (mod 2e): +1, +2e, and a
// +(2e-1) step that glues an order-2e block through a pivot vertex.
ConstructionResult extend_estar(const ConstructionResult& base, Vertex target_n, int split = 0);

// k-chromatic e-star system from a (k-1)-chromatic one of order = 0 (mod 2e).
// `logs` receives human-readable notes about parameter fallbacks.
ConstructionResult lift_estar(const ConstructionResult& base, std::uint64_t seed = 0,
                              std::vector<std::string>* logs = nullptr);

// Strongly equitable uniquely 2-chromatic e-star system of order
// 10e + 2e(C(2e,e) - 2).
ConstructionResult build_unique_2chromatic(int e, std::uint64_t seed = 0);

// Uniquely k-chromatic system at order target_n = 0, 1 (mod 2e) from a
// uniquely k-chromatic base whose classes all exceed e. Works for any k.
ConstructionResult extend_unique(const ConstructionResult& base, Vertex target_n);

// Strongly equitable k-chromatic system on k copies of a uniquely
// (k-1)-chromatic strongly equitable base (class size > e).
ConstructionResult lift_unique_to_equitable(const ConstructionResult& base);

// Strongly equitable uniquely k-chromatic system from a strongly equitable
// k-chromatic base of order = 0 (mod 2e).
ConstructionResult make_unique_kchromatic(const ConstructionResult& base, std::uint64_t seed = 0);

// Vertex-id layout of the gadget sets, exposed so tests can anchor colourings.
struct GadgetLayout {
  std::vector<std::vector<Vertex>> anchors;  // anchors[s-1] = vertices forced to colour s (the A^s sets)
  Vertex gadget_size = 0;                     // copies start after this many ids
  std::size_t copies = 0;
};
GadgetLayout unique_2chromatic_layout(int e);
GadgetLayout unique_kchromatic_layout(int k, int e, Vertex base_order);

}  // namespace starlight
