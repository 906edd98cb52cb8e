// Lifts: raise the chromatic number by one using many disjoint copies of a
// base system and a small gadget whose subsets are spread over the copies.

#include <map>

#include "assembly.hpp"
#include "starlight/baranyai.hpp"

namespace starlight {

using detail::Assembly;
using detail::Vertices;
using detail::range;

namespace {

// Base classes renumbered by ascending size; the largest is split in two so
// that each copy carries k nonempty classes. Returns new class per base vertex.
std::vector<int> split_copy_colouring(const Colouring& base) {
  const int km1 = base.k();
  auto sizes = base.class_sizes();
  std::vector<int> order(static_cast<std::size_t>(km1));
  std::iota(order.begin(), order.end(), 1);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return sizes[static_cast<std::size_t>(a - 1)] < sizes[static_cast<std::size_t>(b - 1)];
  });
  std::vector<int> relabel(static_cast<std::size_t>(km1) + 1);
  for (int i = 0; i < km1; ++i) relabel[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] = i + 1;
  std::vector<int> out(base.n() + 1);
  const int largest = order.back();
  const std::size_t keep = sizes[static_cast<std::size_t>(largest - 1)] / 2;
  std::size_t seen = 0;
  for (Vertex v = 1; v <= base.n(); ++v) {
    int c = relabel[static_cast<std::size_t>(base[v])];
    if (base[v] == largest && seen++ >= keep) c = km1 + 1;
    out[v] = c;
  }
  return out;
}

// Copies U_1..U_l after `gadget` ids; returns each copy's vertex list.
std::vector<Vertices> place_copies(Assembly& a, const StarSystem& base, const std::vector<int>& colours, Vertex gadget,
                                   std::size_t copies) {
  std::vector<Vertices> out;
  const Vertex n0 = base.n();
  for (std::size_t i = 1; i <= copies; ++i) {
    Vertices u(n0);
    for (Vertex v = 1; v <= n0; ++v) {
      u[v - 1] = copy_id(n0, static_cast<std::uint32_t>(i), v, gadget);
      a.paint(u[v - 1], colours[v]);
    }
    a.embed(base, u);
    out.push_back(std::move(u));
  }
  return out;
}

// Gadget-to-copy edges: every copy vertex takes the subsets of its class as
// stars; gadget vertices missed by that class fan over the copy instead.
void spread_subsets(Assembly& a, const SubsetPartition& p, const Vertices& ground, const Vertices& extra,
                    const std::vector<Vertices>& copies) {
  for (std::size_t i = 0; i < copies.size(); ++i) {
    std::vector<char> hit(ground.size(), 0);
    std::vector<Vertices> leaves;
    for (const auto& s : p.classes[i]) {
      Vertices t;
      for (int x : s) {
        t.push_back(ground[static_cast<std::size_t>(x - 1)]);
        hit[static_cast<std::size_t>(x - 1)] = 1;
      }
      leaves.push_back(std::move(t));
    }
    for (Vertex u : copies[i])
      for (const auto& t : leaves) a.star(u, t);
    for (std::size_t g = 0; g < ground.size(); ++g)
      if (!hit[g]) a.fan(ground[g], copies[i]);
    for (Vertex x : extra) a.fan(x, copies[i]);
  }
}

void join_copies(Assembly& a, const std::vector<Vertices>& copies) {
  for (std::size_t j = 1; j < copies.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) a.join(copies[j], copies[i]);
}

}  // namespace

ConstructionResult lift_3star(const ConstructionResult& base, std::uint64_t seed) {
  if (base.system.e() != 3) throw InvalidArgument("lift_3star needs a 3-star system");
  if (base.system.n() % 3 != 0) throw InvalidArgument("lift_3star needs a base of order = 0 (mod 3)");
  const int k = base.colouring.k() + 1;
  if (k < 3) throw InvalidArgument("lift_3star needs a base with at least 2 colours");

  // Gadget V and the class sizes of the partition of its 3-subsets.
  Vertex v_size;
  std::vector<int> sizes;
  const int K = k;
  if ((2 * K - 1) % 3 == 0) {
    v_size = static_cast<Vertex>(2 * K - 1);
    sizes.assign(static_cast<std::size_t>((K - 1) * (2 * K - 3)), (2 * K - 1) / 3);
  } else if ((2 * K - 1) % 3 == 1) {
    v_size = static_cast<Vertex>(2 * K - 1);
    const int t = (2 * K - 2) / 3;
    sizes.assign(static_cast<std::size_t>((2 * K - 1) * (K - 2)), t);
    sizes.insert(sizes.end(), static_cast<std::size_t>(2 * K - 1), t / 2);
  } else {
    v_size = static_cast<Vertex>(2 * K);
    sizes.assign(static_cast<std::size_t>((2 * K - 1) * (K - 1)), 2 * K / 3);
  }
  const std::size_t copies = sizes.size();
  const Vertex n0 = base.system.n();
  const Vertex n = v_size + static_cast<Vertex>(copies) * n0;
  auto part = partition_all_subsets(static_cast<int>(v_size), 3, sizes, seed);

  Assembly a(3, n, k);
  a.reserve(expected_block_count(3, n));
  // V: pairs {2s-1, 2s} get colour s; whatever is left gets colour k.
  Vertices ground = range(1, v_size);
  for (Vertex v = 1; v <= v_size; ++v) a.paint(v, std::min<int>(static_cast<int>((v + 1) / 2), k));
  a.embed(build_equitable_3star(v_size).system, ground);

  auto colours = split_copy_colouring(base.colouring);
  auto us = place_copies(a, base.system, colours, v_size, copies);
  spread_subsets(a, part, ground, {}, us);
  join_copies(a, us);

  Claims c;
  c.provenance = "lift_3star";
  c.params = {{"k", k}, {"base_n", n0}, {"copies", static_cast<std::int64_t>(copies)},
              {"seed", static_cast<std::int64_t>(seed)}};
  return a.finish(std::move(c));
}

ConstructionResult lift_estar(const ConstructionResult& base, std::uint64_t seed, std::vector<std::string>* logs) {
  const int e = base.system.e();
  const Vertex two_e = 2 * static_cast<Vertex>(e);
  if (base.system.n() % two_e != 0) throw InvalidArgument("lift_estar needs a base of order = 0 (mod 2e)");
  const int k = base.colouring.k() + 1;
  if (k < 3) throw InvalidArgument("lift_estar needs a base with at least 2 colours");

  const Vertex w_size = static_cast<Vertex>((e - 1) * (k - 1) + 1);
  const Vertex b_size = static_cast<Vertex>(k - 2);
  const Vertex d_size = (k - 1) % 2 ? static_cast<Vertex>(e) : 0;
  const Vertex v_size = w_size + b_size + d_size;

  // a = (k-2) + floor((2-k)/e) subsets per class, unless that is unusable.
  const int num = 2 - k;
  int a_cls = (k - 2) + (num >= 0 ? num / e : -((-num + e - 1) / e));
  const int cap = static_cast<int>(w_size) / e;
  if (a_cls < 1 || a_cls > cap) {
    if (logs)
      logs->push_back("lift_estar: subsets-per-class formula gives " + std::to_string(a_cls) + " for (e,k)=(" +
                      std::to_string(e) + "," + std::to_string(k) + "); using floor(|W|/e) = " + std::to_string(cap));
    a_cls = cap;
  }
  const auto total = static_cast<int>(binomial(w_size, static_cast<std::uint64_t>(e)));
  std::vector<int> sizes(static_cast<std::size_t>(total / a_cls), a_cls);
  if (total % a_cls) sizes.push_back(total % a_cls);
  const std::size_t copies = sizes.size();
  const Vertex n0 = base.system.n();
  const Vertex n = v_size + static_cast<Vertex>(copies) * n0;
  auto part = partition_all_subsets(static_cast<int>(w_size), e, sizes, seed);

  Assembly a(e, n, k);
  a.reserve(expected_block_count(e, n));
  Vertices w = range(1, w_size), b = range(w_size + 1, b_size), d = range(w_size + b_size + 1, d_size);
  // At most e vertices of any colour inside V, so any system on V is proper.
  for (Vertex i = 0; i + 1 < w_size; ++i) a.paint(w[i], static_cast<int>(i) / (e - 1) + 1);
  a.paint(w.back(), k);
  for (Vertex i = 0; i < b_size; ++i) a.paint(b[i], static_cast<int>(i) + 1);
  for (Vertex i = 0; i < d_size; ++i) a.paint(d[i], i == 0 ? k - 1 : k);
  ConstructionResult on_v = build_strong_2chromatic(e);
  if (v_size > two_e) on_v = extend_estar(on_v, v_size);
  a.embed(on_v.system, range(1, v_size));

  auto colours = split_copy_colouring(base.colouring);
  auto us = place_copies(a, base.system, colours, v_size, copies);
  spread_subsets(a, part, w, detail::concat({b, d}), us);
  join_copies(a, us);

  Claims c;
  c.provenance = "lift_estar";
  c.params = {{"k", k},
              {"e", e},
              {"base_n", n0},
              {"subsets_per_class", a_cls},
              {"copies", static_cast<std::int64_t>(copies)},
              {"seed", static_cast<std::int64_t>(seed)}};
  return a.finish(std::move(c));
}

ConstructionResult lift_unique_to_equitable(const ConstructionResult& base) {
  const int e = base.system.e();
  const Vertex n0 = base.system.n();
  if (n0 % (2 * static_cast<Vertex>(e)) != 0) throw InvalidArgument("base order must be = 0 (mod 2e)");
  const int k = base.colouring.k() + 1;
  if (k < 3) throw InvalidArgument("base must be at least 2-chromatic");
  auto sizes = base.colouring.class_sizes();
  if (std::adjacent_find(sizes.begin(), sizes.end(), std::not_equal_to<>()) != sizes.end())
    throw InvalidArgument("base must be strongly equitable");
  if (sizes[0] <= static_cast<std::size_t>(e)) throw InvalidArgument("base classes must have more than e vertices");

  const Vertex n = static_cast<Vertex>(k) * n0;
  Assembly a(e, n, k);
  a.reserve(expected_block_count(e, n));
  std::vector<Vertices> us;
  for (int i = 1; i <= k; ++i) {
    Vertices u(n0);
    for (Vertex v = 1; v <= n0; ++v) {
      u[v - 1] = copy_id(n0, static_cast<std::uint32_t>(i), v);
      int s = base.colouring[v];
      a.paint(u[v - 1], i >= 2 && s == i - 1 ? k : s);
    }
    a.embed(base.system, u);
    us.push_back(std::move(u));
  }

  // D_s: first e vertices of class s inside U_1.
  auto members = base.colouring.members();
  std::vector<Vertices> d(static_cast<std::size_t>(k - 1));
  for (int s = 1; s < k; ++s)
    for (int j = 0; j < e; ++j)
      d[static_cast<std::size_t>(s - 1)].push_back(us[0][members[static_cast<std::size_t>(s - 1)][static_cast<std::size_t>(j)] - 1]);

  // Helper groups of U_1 outside the D sets that a centre has used; keyed by
  // the one class whose D set stays available (0: none).
  std::map<int, std::vector<Vertices>> groups;
  auto groups_for = [&](int spared) -> const std::vector<Vertices>& {
    auto it = groups.find(spared);
    if (it != groups.end()) return it->second;
    Vertices skip;
    for (int t = 1; t < k; ++t)
      if (t != spared) skip.insert(skip.end(), d[static_cast<std::size_t>(t - 1)].begin(), d[static_cast<std::size_t>(t - 1)].end());
    return groups[spared] = detail::mixed_groups(a, detail::minus(us[0], skip));
  };

  // U_1 -- U_i: the D stars pin the colour of each vertex of U_i.
  for (int i = 2; i <= k; ++i) {
    for (Vertex v = 1; v <= n0; ++v) {
      const Vertex c = us[static_cast<std::size_t>(i - 1)][v - 1];
      const int s = base.colouring[v];
      const int spared = s == i - 1 ? 0 : s;
      for (int t = 1; t < k; ++t)
        if (t != spared) a.star(c, d[static_cast<std::size_t>(t - 1)]);
      for (const auto& g : groups_for(spared)) a.star(c, g);
    }
  }
  // U_i -- U_j for 2 <= i < j: mixed groups of U_i.
  for (int i = 2; i <= k; ++i) {
    auto gi = detail::mixed_groups(a, us[static_cast<std::size_t>(i - 1)]);
    for (int j = i + 1; j <= k; ++j)
      for (Vertex u : us[static_cast<std::size_t>(j - 1)])
        for (const auto& g : gi) a.star(u, g);
  }

  Claims c;
  c.provenance = "lift_unique_to_equitable";
  c.params = {{"k", k}, {"e", e}, {"base_n", n0}};
  return a.finish(std::move(c));
}

}  // namespace starlight
