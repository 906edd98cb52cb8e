#pragma once

// Shared plumbing for the builders: an intended colouring fixed up front,
// star emission that refuses monochromatic stars, and the recurring edge
// families (fans, forcing stars, embedded sub-systems).

#include <algorithm>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "starlight/constructions.hpp"
#include "starlight/core.hpp"

namespace starlight::detail {

using Vertices = std::vector<Vertex>;

inline Vertices range(Vertex first, Vertex count) {
  Vertices v(count);
  std::iota(v.begin(), v.end(), first);
  return v;
}

inline Vertices concat(std::initializer_list<std::span<const Vertex>> parts) {
  Vertices out;
  for (auto p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

inline Vertices minus(std::span<const Vertex> a, std::span<const Vertex> b) {
  Vertices out;
  for (Vertex x : a)
    if (std::find(b.begin(), b.end(), x) == b.end()) out.push_back(x);
  return out;
}

class Assembly {
 public:
  Assembly(int e, Vertex n, int k) : sys_(e, n), colour_(n + 1, 0), k_(k) {}

  int e() const { return sys_.e(); }
  Vertex n() const { return sys_.n(); }
  int k() const { return k_; }
  void reserve(std::size_t blocks) { sys_.reserve(blocks); }

  void paint(Vertex v, int c) { colour_[v] = c; }
  void paint(std::span<const Vertex> vs, int c) {
    for (Vertex v : vs) colour_[v] = c;
  }
  int colour(Vertex v) const { return colour_[v]; }

  void star(Vertex center, std::span<const Vertex> leaves) {
    int c = colour_[center];
    bool mono = std::all_of(leaves.begin(), leaves.end(), [&](Vertex v) { return colour_[v] == c; });
    if (mono) throw Error("builder emitted a monochromatic star (construction bug)");
    sys_.add(center, leaves);
  }
  void star(Vertex center, std::initializer_list<Vertex> leaves) {
    star(center, std::span<const Vertex>(leaves.begin(), leaves.size()));
  }

  // How many leaves could serve as the "other colour" witness for center.
  std::size_t safe_count(Vertex center, std::span<const Vertex> leaves) const {
    return static_cast<std::size_t>(
        std::count_if(leaves.begin(), leaves.end(), [&](Vertex v) { return colour_[v] != colour_[center]; }));
  }
  bool can_fan(Vertex center, std::span<const Vertex> leaves) const {
    return leaves.size() % static_cast<std::size_t>(e()) == 0 &&
           safe_count(center, leaves) * static_cast<std::size_t>(e()) >= leaves.size();
  }

  // Stars from center covering every edge to `leaves`, none monochromatic:
  // each group takes one differently coloured leaf and fills up with
  // same-coloured leaves while they last.
  void fan(Vertex center, std::span<const Vertex> leaves) {
    const std::size_t e = static_cast<std::size_t>(this->e());
    if (!can_fan(center, leaves))
      throw UnsupportedCase("cannot split " + std::to_string(leaves.size()) + " leaves of vertex " +
                            std::to_string(center) + " into non-monochromatic stars");
    safe_.clear();
    same_.clear();
    for (Vertex v : leaves) (colour_[v] == colour_[center] ? same_ : safe_).push_back(v);
    std::size_t si = 0, mi = 0;
    group_.resize(e);
    for (std::size_t g = 0; g < leaves.size() / e; ++g) {
      group_[0] = safe_[si++];
      for (std::size_t j = 1; j < e; ++j) group_[j] = mi < same_.size() ? same_[mi++] : safe_[si++];
      star(center, group_);
    }
  }

  // Every vertex of xs fans over ys.
  void join(std::span<const Vertex> xs, std::span<const Vertex> ys) {
    for (Vertex x : xs) fan(x, ys);
  }

  // Copy `base` onto image[v-1].
  void embed(const StarSystem& base, std::span<const Vertex> image) {
    leaves_.resize(static_cast<std::size_t>(base.e()));
    for (std::size_t i = 0; i < base.size(); ++i) {
      auto b = base.block(i);
      for (std::size_t j = 0; j < leaves_.size(); ++j) leaves_[j] = image[b.leaves[j] - 1];
      star(image[b.center - 1], leaves_);
    }
  }

  // Copy `base` (with its colouring) onto ids first + v - 1.
  void embed_coloured(const ConstructionResult& base, Vertex first) {
    Vertices image = range(first, base.system.n());
    for (Vertex v = 1; v <= base.system.n(); ++v) paint(image[v - 1], base.colouring[v]);
    embed(base.system, image);
  }

  const StarSystem& system() const { return sys_; }

  // Checks everything and packages the result. Throws Error on failure.
  ConstructionResult finish(Claims claims);

 private:
  StarSystem sys_;
  std::vector<int> colour_;
  int k_;
  Vertices safe_, same_, group_, leaves_;
};

// Groups of e with at least two colours each; vertices are sorted by colour
// and dealt round-robin, which works whenever no colour fills more than
// (e-1) * (groups) slots.
std::vector<Vertices> mixed_groups(const Assembly& a, std::span<const Vertex> vs);

// Order-2e strongly equitable system (cached per e).
const ConstructionResult& strong_block(int e);

// Embeds the order-2e block on X1 (odd ids) and X2 (even ids).
void complete_pair(Assembly& a, std::span<const Vertex> x1, std::span<const Vertex> x2);

// Complete system on the union of `parts` (each of size e), pairing parts
// consecutively into order-2e blocks and joining different pairs by fans.
// Requires an even number of parts with the two members of each pair in
// different colours.
void complete_on_parts(Assembly& a, const std::vector<Vertices>& parts);

// Colour classes of a colouring, ascending ids, index 0 = class 1.
std::vector<Vertices> classes_of(const Colouring& col);

}  // namespace starlight::detail
