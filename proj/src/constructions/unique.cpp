// Uniquely colourable systems: gadget sets whose colouring is pinned by
// forcing stars, hung off an anchor set A whose non-canonical e-subsets are
// spread over disjoint copies of a base system.

#include "assembly.hpp"
#include "starlight/baranyai.hpp"

namespace starlight {

using detail::Assembly;
using detail::Vertices;
using detail::range;

namespace {

// Classes of the e-subsets of A = parts[0] u ... u parts[k-1] other than the
// parts themselves, a per class (the last may be smaller). Built from a full
// subset partition with one extra perfect class, relabelled so that extra
// class becomes exactly the parts.
std::vector<std::vector<Vertices>> noncanonical_classes(const std::vector<Vertices>& parts, int e, int a,
                                                        std::uint64_t seed) {
  const int k = static_cast<int>(parts.size());
  const int m = k * e;
  const auto total = static_cast<int>(binomial(static_cast<std::uint64_t>(m), static_cast<std::uint64_t>(e)));
  const int rest = total - k;
  std::vector<int> sizes{k};
  sizes.insert(sizes.end(), static_cast<std::size_t>(rest / a), a);
  if (rest % a) sizes.push_back(rest % a);
  auto p = partition_all_subsets(m, e, sizes, seed);

  std::vector<Vertex> image(static_cast<std::size_t>(m) + 1);
  for (std::size_t j = 0; j < p.classes[0].size(); ++j)
    for (std::size_t t = 0; t < p.classes[0][j].size(); ++t)
      image[static_cast<std::size_t>(p.classes[0][j][t])] = parts[j][t];

  std::vector<std::vector<Vertices>> out;
  for (std::size_t i = 1; i < p.classes.size(); ++i) {
    std::vector<Vertices> cls;
    for (const auto& s : p.classes[i]) {
      Vertices t;
      for (int x : s) t.push_back(image[static_cast<std::size_t>(x)]);
      std::sort(t.begin(), t.end());
      cls.push_back(std::move(t));
    }
    std::sort(cls.begin(), cls.end());
    out.push_back(std::move(cls));
  }
  return out;
}

// Set X split into consecutive parts of size e.
std::vector<Vertices> parts_of(Vertex first, int count, int e) {
  std::vector<Vertices> out;
  for (int s = 0; s < count; ++s) out.push_back(range(first + static_cast<Vertex>(s * e), static_cast<Vertex>(e)));
  return out;
}

Vertices flat(const std::vector<Vertices>& parts, std::size_t from = 0, std::size_t to = SIZE_MAX) {
  Vertices out;
  for (std::size_t i = from; i < std::min(to, parts.size()); ++i) out.insert(out.end(), parts[i].begin(), parts[i].end());
  return out;
}

// {x; X^t} for every part other than x's own colour.
void force_from(Assembly& a, Vertex x, const std::vector<Vertices>& parts) {
  for (std::size_t t = 0; t < parts.size(); ++t)
    if (static_cast<int>(t) + 1 != a.colour(x)) a.star(x, parts[t]);
}

// Copies of the base plus the A--U edges: T stars from the class assigned to
// each copy, and mixed groups of the copy for the A vertices it misses.
std::vector<Vertices> copies_with_anchor_edges(Assembly& a, const ConstructionResult& base, Vertex gadget,
                                               const std::vector<std::vector<Vertices>>& classes,
                                               const Vertices& anchor) {
  const Vertex n0 = base.system.n();
  std::vector<Vertices> us;
  for (std::size_t i = 1; i <= classes.size(); ++i) {
    Vertices u(n0);
    for (Vertex v = 1; v <= n0; ++v) {
      u[v - 1] = copy_id(n0, static_cast<std::uint32_t>(i), v, gadget);
      a.paint(u[v - 1], base.colouring[v]);
    }
    a.embed(base.system, u);
    us.push_back(std::move(u));
  }
  auto groups0 = detail::mixed_groups(a, us[0]);
  for (std::size_t i = 0; i < us.size(); ++i) {
    const Vertex shift = static_cast<Vertex>(i) * n0;
    Vertices covered;
    for (const auto& t : classes[i]) {
      covered.insert(covered.end(), t.begin(), t.end());
      for (Vertex u : us[i]) a.star(u, t);
    }
    for (Vertex w : detail::minus(anchor, covered))
      for (const auto& g : groups0) {
        Vertices gi(g);
        for (auto& x : gi) x += shift;
        a.star(w, gi);
      }
  }
  return us;
}

void join_copies(Assembly& a, const std::vector<Vertices>& us) {
  for (std::size_t j = 1; j < us.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) a.join(us[j], us[i]);
}

}  // namespace

GadgetLayout unique_2chromatic_layout(int e) {
  GadgetLayout g;
  const Vertex ue = static_cast<Vertex>(e);
  g.anchors = {range(1, ue), range(ue + 1, ue)};
  g.gadget_size = 10 * ue;
  g.copies = static_cast<std::size_t>(binomial(2 * ue, ue) - 2);
  return g;
}

GadgetLayout unique_kchromatic_layout(int k, int e, Vertex) {
  GadgetLayout g;
  const int part = k * e + (k % 2 ? e : 0);
  g.anchors = parts_of(1, k, e);
  g.gadget_size = 4 * static_cast<Vertex>(part);
  const auto rest = binomial(static_cast<std::uint64_t>(k * e), static_cast<std::uint64_t>(e)) - static_cast<std::uint64_t>(k);
  g.copies = static_cast<std::size_t>((rest + static_cast<std::uint64_t>(k - 2)) / static_cast<std::uint64_t>(k - 1));
  return g;
}

ConstructionResult build_unique_2chromatic(int e, std::uint64_t seed) {
  if (e < 3) throw InvalidArgument("e must be at least 3");
  const auto layout = unique_2chromatic_layout(e);
  const ConstructionResult& base = detail::strong_block(e);
  const Vertex ue = static_cast<Vertex>(e), n0 = 2 * ue;
  const Vertex n = layout.gadget_size + static_cast<Vertex>(layout.copies) * n0;
  Assembly a(e, n, 2);
  a.reserve(expected_block_count(e, n));

  // Gadget sets A, F, G, H, K, each split into halves X^1 (colour 1), X^2.
  enum { A, F, G, H, K };
  std::vector<std::vector<Vertices>> set(5);
  for (int x = 0; x < 5; ++x) {
    set[static_cast<std::size_t>(x)] = parts_of(1 + static_cast<Vertex>(x) * n0, 2, e);
    for (int s = 0; s < 2; ++s) a.paint(set[static_cast<std::size_t>(x)][static_cast<std::size_t>(s)], s + 1);
    detail::complete_pair(a, set[static_cast<std::size_t>(x)][0], set[static_cast<std::size_t>(x)][1]);
  }
  auto half = [&](int x, int s) -> const Vertices& { return set[static_cast<std::size_t>(x)][static_cast<std::size_t>(s - 1)]; };
  auto whole = [&](int x) { return flat(set[static_cast<std::size_t>(x)]); };

  auto classes = noncanonical_classes(set[A], e, 1, seed);
  auto us = copies_with_anchor_edges(a, base, layout.gadget_size, classes, whole(A));

  for (int s = 1; s <= 2; ++s) {
    const int o = 3 - s;
    for (Vertex f : half(F, s)) a.star(f, half(A, o));  // F and G pinned by A
    for (Vertex g : half(G, s)) a.star(g, half(A, o));
    for (Vertex x : half(K, s)) a.star(x, half(G, o));  // K pinned by G
    for (Vertex h : half(H, s)) {                       // H pinned by F
      a.star(h, half(F, o));
      a.fan(h, detail::concat({half(F, s), whole(G)}));
    }
    for (Vertex v : half(A, s)) a.fan(v, detail::concat({half(F, s), half(G, s), whole(H), whole(K)}));
    for (Vertex x : half(K, s)) a.fan(x, detail::concat({half(G, s), whole(F), whole(H)}));
  }
  a.join(whole(F), whole(G));
  for (const auto& u : us)
    for (Vertex v : u) {  // copies pinned by F
      const int c = a.colour(v);
      a.star(v, half(F, 3 - c));
      a.fan(v, detail::concat({half(F, c), whole(G)}));
      a.fan(v, whole(H));
      a.fan(v, whole(K));
    }
  join_copies(a, us);

  Claims c;
  c.provenance = "build_unique_2chromatic";
  c.unique = true;
  c.params = {{"e", e}, {"copies", static_cast<std::int64_t>(layout.copies)}, {"seed", static_cast<std::int64_t>(seed)}};
  return a.finish(std::move(c));
}

ConstructionResult make_unique_kchromatic(const ConstructionResult& base, std::uint64_t seed) {
  const int e = base.system.e();
  const int k = base.colouring.k();
  const Vertex n0 = base.system.n();
  if (k < 3 || e < 3) throw InvalidArgument("make_unique_kchromatic needs k >= 3 and e >= 3");
  if (n0 % (2 * static_cast<Vertex>(e)) != 0) throw InvalidArgument("base order must be = 0 (mod 2e)");
  auto sizes = base.colouring.class_sizes();
  if (std::adjacent_find(sizes.begin(), sizes.end(), std::not_equal_to<>()) != sizes.end())
    throw InvalidArgument("base must be strongly equitable");

  const bool odd = k % 2 == 1;
  const auto layout = unique_kchromatic_layout(k, e, n0);
  const Vertex part = layout.gadget_size / 4;
  const std::size_t nparts = static_cast<std::size_t>(k) + (odd ? 1 : 0);

  auto classes = noncanonical_classes(parts_of(1, k, e), e, k - 1, seed);
  if (classes.size() != layout.copies) throw Error("copy count disagrees with the layout");
  const Vertex n = layout.gadget_size + static_cast<Vertex>(classes.size()) * n0;
  Assembly a(e, n, k);
  a.reserve(expected_block_count(e, n));

  // A', F', G', H': parts X^1..X^k (colour s), then X_0 (colour 1) if k is odd.
  enum { A, F, G, H };
  std::vector<std::vector<Vertices>> set(4);
  for (int x = 0; x < 4; ++x) {
    auto& ps = set[static_cast<std::size_t>(x)];
    ps = parts_of(1 + static_cast<Vertex>(x) * part, static_cast<int>(nparts), e);
    for (std::size_t s = 0; s < nparts; ++s) a.paint(ps[s], s < static_cast<std::size_t>(k) ? static_cast<int>(s) + 1 : 1);
    detail::complete_on_parts(a, ps);
  }
  auto p = [&](int x, int s) -> const Vertices& { return set[static_cast<std::size_t>(x)][static_cast<std::size_t>(s - 1)]; };
  auto main_parts = [&](int x) {
    return std::vector<Vertices>(set[static_cast<std::size_t>(x)].begin(), set[static_cast<std::size_t>(x)].begin() + k);
  };
  auto main = [&](int x) { return flat(set[static_cast<std::size_t>(x)], 0, static_cast<std::size_t>(k)); };
  auto zero = [&](int x) { return odd ? set[static_cast<std::size_t>(x)][static_cast<std::size_t>(k)] : Vertices{}; };
  auto primed = [&](int x) { return flat(set[static_cast<std::size_t>(x)]); };

  const auto a_parts = main_parts(A), f_parts = main_parts(F);
  auto us = copies_with_anchor_edges(a, base, layout.gadget_size, classes, main(A));
  Vertices all_u;
  for (const auto& u : us) all_u.insert(all_u.end(), u.begin(), u.end());

  for (int s = 1; s <= k; ++s) {
    for (Vertex f : p(F, s)) force_from(a, f, a_parts);
    for (Vertex g : p(G, s)) force_from(a, g, a_parts);
    for (Vertex h : p(H, s)) {
      force_from(a, h, f_parts);
      a.fan(h, detail::concat({p(F, s), main(G)}));
    }
    for (Vertex v : p(A, s)) a.fan(v, detail::concat({p(F, s), p(G, s), main(H)}));
  }
  a.join(main(F), main(G));
  for (const auto& u : us)
    for (Vertex v : u) {
      force_from(a, v, f_parts);
      a.fan(v, detail::concat({p(F, a.colour(v)), main(G)}));
      a.fan(v, main(H));
    }
  join_copies(a, us);

  if (odd) {  // the colour-1 extras, each pinned by A (or F, for A_0)
    for (Vertex v : zero(A)) {
      force_from(a, v, f_parts);
      a.fan(v, detail::concat({p(F, 1), main(G), main(H), all_u}));
    }
    for (Vertex v : zero(F)) {
      force_from(a, v, a_parts);
      a.fan(v, detail::concat({p(A, 1), zero(A), main(G), main(H), all_u}));
    }
    for (Vertex v : zero(G)) {
      force_from(a, v, a_parts);
      a.fan(v, detail::concat({p(A, 1), zero(A), primed(F), main(H), all_u}));
    }
    for (Vertex v : zero(H)) {
      force_from(a, v, a_parts);
      a.fan(v, detail::concat({p(A, 1), zero(A), primed(F), primed(G), all_u}));
    }
  }

  Claims c;
  c.provenance = "make_unique_kchromatic";
  c.unique = true;
  c.params = {{"k", k},
              {"e", e},
              {"base_n", n0},
              {"copies", static_cast<std::int64_t>(classes.size())},
              {"seed", static_cast<std::int64_t>(seed)}};
  return a.finish(std::move(c));
}

}  // namespace starlight
