// Two-colour base systems: the 3-star family of every admissible order and
// the order-2e e-star family. Both are coloured odd ids / even ids.

#include "assembly.hpp"

namespace starlight {

namespace {

std::vector<Star> order_six() {
  return {{1, {3, 5, 6}}, {2, {1, 3, 6}}, {4, {1, 2, 3}}, {5, {2, 3, 4}}, {6, {3, 4, 5}}};
}

// From order 3t to 3t+3.
void grow_by_three(std::vector<Star>& blocks, Vertex t) {
  const Vertex m = 3 * t;
  for (Vertex i = 1; i <= 3; ++i)
    for (Vertex x = 1; x + 2 <= m - 3; x += 3) blocks.push_back({m + i, {x, x + 1, x + 2}});
  blocks.push_back({m + 1, {m - 2, m - 1, m + 2}});
  blocks.push_back({m + 2, {m - 2, m - 1, m + 3}});
  blocks.push_back({m + 3, {m - 2, m - 1, m + 1}});
  blocks.push_back({m, {m + 1, m + 2, m + 3}});
}

// From order 3t to 3t+1.
void grow_by_one(std::vector<Star>& blocks, Vertex t) {
  const Vertex m = 3 * t;
  for (Vertex x = 1; x + 2 <= m; x += 3) blocks.push_back({m + 1, {x, x + 1, x + 2}});
}

ConstructionResult odd_even(int e, Vertex n, const std::vector<Star>& blocks, Claims claims) {
  detail::Assembly a(e, n, 2);
  a.reserve(blocks.size());
  for (Vertex v = 1; v <= n; ++v) a.paint(v, v % 2 ? 1 : 2);
  for (const auto& s : blocks) a.star(s.center, s.leaves);
  return a.finish(std::move(claims));
}

}  // namespace

ConstructionResult build_equitable_3star(Vertex n) {
  if (!is_admissible(3, n)) throw InadmissibleOrder("no 3-star system of order " + std::to_string(n));
  auto blocks = order_six();
  for (Vertex m = 6; m + 3 <= n; m += 3) grow_by_three(blocks, m / 3);
  if (n % 3 == 1) grow_by_one(blocks, (n - 1) / 3);
  Claims c;
  c.provenance = "build_equitable_3star";
  c.params = {{"n", n}};
  return odd_even(3, n, blocks, std::move(c));
}

ConstructionResult build_strong_2chromatic(int e) {
  if (e < 3) throw InvalidArgument("e must be at least 3");
  auto blocks = order_six();
  for (int f = 3; f < e; ++f) {
    // Order 2f -> 2f+2; one block per center, center 3 never used.
    const Vertex lo = static_cast<Vertex>(f) + 1, top = 2 * static_cast<Vertex>(f);
    for (auto& s : blocks) s.leaves.push_back(s.center <= lo ? top + 2 : top + 1);
    Star first{top + 1, {}}, second{top + 2, {3}};
    for (Vertex v = 1; v <= lo; ++v) first.leaves.push_back(v);
    for (Vertex v = lo + 1; v <= top + 1; ++v) second.leaves.push_back(v);
    blocks.push_back(first);
    blocks.push_back(second);
  }
  for (auto& s : blocks) std::sort(s.leaves.begin(), s.leaves.end());
  std::sort(blocks.begin(), blocks.end(), [](const Star& x, const Star& y) { return x.center < y.center; });
  Claims c;
  c.provenance = "build_strong_2chromatic";
  c.params = {{"e", e}};
  return odd_even(e, 2 * static_cast<Vertex>(e), blocks, std::move(c));
}

}  // namespace starlight
