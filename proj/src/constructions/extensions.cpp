// Order extensions that keep the chromatic number (and, for the forcing
// variant, uniqueness of the colouring).

#include <functional>

#include "assembly.hpp"

namespace starlight {

using detail::Assembly;
using detail::Vertices;
using detail::range;

namespace {

// R = C_1..C_split, Y = the rest, swapped so that |R| >= |Y|. New vertices go
// to the highest-numbered class on the Y side, so every fan centred on a new
// vertex sees at least half of the old vertices in other classes.
struct Sides {
  std::vector<char> in_r;  // indexed by class
  int r_colour = 0;        // lowest class on the R side
  int y_colour = 0;
};

Sides split_sides(const Colouring& col, int split) {
  const int k = col.k();
  if (split == 0) split = k - 1;
  if (split < 1 || split >= k) throw InvalidArgument("split must satisfy 1 <= split < k");
  auto sizes = col.class_sizes();
  Sides s;
  s.in_r.assign(static_cast<std::size_t>(k) + 1, 0);
  std::size_t r = 0, y = 0;
  for (int c = 1; c <= k; ++c) {
    bool in_r = c <= split;
    s.in_r[static_cast<std::size_t>(c)] = in_r;
    (in_r ? r : y) += sizes[static_cast<std::size_t>(c - 1)];
  }
  if (r < y)
    for (int c = 1; c <= k; ++c) s.in_r[static_cast<std::size_t>(c)] = !s.in_r[static_cast<std::size_t>(c)];
  for (int c = k; c >= 1 && !s.y_colour; --c)
    if (!s.in_r[static_cast<std::size_t>(c)]) s.y_colour = c;
  for (int c = 1; c <= k && !s.r_colour; ++c)
    if (s.in_r[static_cast<std::size_t>(c)]) s.r_colour = c;
  return s;
}

// Highest id on the R side.
Vertex last_in_r(const Colouring& col, const Sides& s) {
  for (Vertex v = col.n(); v >= 1; --v)
    if (s.in_r[static_cast<std::size_t>(col[v])]) return v;
  throw UnsupportedCase("R side is empty");
}

Claims next_claims(const ConstructionResult& base, const char* name, Vertex target) {
  Claims c;
  c.provenance = name;
  c.unique = false;
  c.params = {{"base_n", base.system.n()}, {"n", target}};
  return c;
}

Assembly start_from(const ConstructionResult& cur, Vertex n, bool copy_blocks = true) {
  Assembly a(cur.system.e(), n, cur.colouring.k());
  a.reserve(expected_block_count(cur.system.e(), n));
  for (Vertex v = 1; v <= cur.system.n(); ++v) a.paint(v, cur.colouring[v]);
  if (copy_blocks) a.embed(cur.system, range(1, cur.system.n()));
  return a;
}

ConstructionResult add_one(const ConstructionResult& cur, int split, const char* name, Vertex target) {
  const Vertex n = cur.system.n();
  auto s = split_sides(cur.colouring, split);
  Assembly a = start_from(cur, n + 1);
  a.paint(n + 1, s.y_colour);
  a.fan(n + 1, range(1, n));
  return a.finish(next_claims(cur, name, target));
}

// 3t -> 3t+3 for 3-stars.
ConstructionResult add_three(const ConstructionResult& cur, int split, Vertex target) {
  const Vertex n = cur.system.n();
  auto s = split_sides(cur.colouring, split);
  const Vertex rho = last_in_r(cur.colouring, s);
  Assembly a = start_from(cur, n + 3);
  const Vertex x[3] = {n + 1, n + 2, n + 3};
  for (Vertex v : x) a.paint(v, s.y_colour);
  a.star(rho, {x[0], x[1], x[2]});
  Vertices rest;
  for (Vertex v = 1; v <= n; ++v)
    if (v != rho) rest.push_back(v);
  for (int i = 0; i < 3; ++i) {
    Vertices leaves = rest;
    leaves.push_back(x[(i + 1) % 3]);
    a.fan(x[i], leaves);
  }
  return a.finish(next_claims(cur, "extend_3star", target));
}

// 3t+1 -> 3t+3 for 3-stars: one star {x; a, b, c} is dismantled and its edges
// re-covered together with those of the two new vertices z1, z2.
ConstructionResult add_two(const ConstructionResult& cur, int split, Vertex target) {
  const Vertex n = cur.system.n();
  const auto& col = cur.colouring;
  auto s = split_sides(col, split);
  std::vector<int> colours = {s.y_colour};
  for (int c = col.k(); c >= 1; --c)
    if (c != s.y_colour) colours.push_back(c);

  for (int z : colours) {
    for (std::size_t bi = cur.system.size(); bi-- > 0;) {
      auto blk = cur.system.block(bi);
      const Vertex x = blk.center;
      for (std::size_t ci = 0; ci < 3; ++ci) {
        const Vertex c = blk.leaves[ci];
        Vertex ab[2];
        for (std::size_t j = 0, t = 0; j < 3; ++j)
          if (j != ci) ab[t++] = blk.leaves[j];
        if (col[ab[0]] == z && col[ab[1]] == z) continue;
        if (col[x] == z && col[c] == z) continue;
        Vertices rest;
        std::size_t safe = 0;
        for (Vertex v = 1; v <= n; ++v) {
          if (v == x || v == c || v == ab[0] || v == ab[1]) continue;
          rest.push_back(v);
          safe += col[v] != z;
        }
        if (3 * safe < rest.size()) continue;

        Assembly a(3, n + 2, col.k());
        a.reserve(expected_block_count(3, n + 2));
        for (Vertex v = 1; v <= n; ++v) a.paint(v, col[v]);
        for (std::size_t i = 0; i < cur.system.size(); ++i) {
          if (i == bi) continue;
          auto b = cur.system.block(i);
          a.star(b.center, b.leaves);
        }
        const Vertex z1 = n + 1, z2 = n + 2;
        a.paint(z1, z);
        a.paint(z2, z);
        a.star(z1, {x, ab[0], ab[1]});
        a.star(z2, {z1, ab[0], ab[1]});
        a.star(c, {z1, x, z2});
        a.star(x, {z2, ab[0], ab[1]});
        a.fan(z1, rest);
        a.fan(z2, rest);
        auto claims = next_claims(cur, "extend_3star", target);
        claims.params.push_back({"dismantled_block", static_cast<std::int64_t>(bi)});
        return a.finish(std::move(claims));
      }
    }
  }
  throw UnsupportedCase("no star of the base can be dismantled for the +2 step");
}

// 2et -> 2et+2e: glue a fresh order-2e block.
ConstructionResult add_block(const ConstructionResult& cur, int split, Vertex target) {
  const Vertex n = cur.system.n();
  const int e = cur.system.e();
  const Vertex ue = static_cast<Vertex>(e);
  auto s = split_sides(cur.colouring, split);
  Assembly a = start_from(cur, n + 2 * ue);
  const auto& block = detail::strong_block(e);
  Vertices fresh = range(n + 1, 2 * ue);
  for (Vertex v = 1; v <= 2 * ue; ++v) a.paint(fresh[v - 1], block.colouring[v] == 1 ? s.r_colour : s.y_colour);
  a.embed(block.system, fresh);
  Vertices lo(fresh.begin(), fresh.begin() + e), hi(fresh.begin() + e, fresh.end());
  for (Vertex v = 1; v <= n; ++v) {
    a.star(v, lo);
    a.star(v, hi);
  }
  return a.finish(next_claims(cur, "extend_estar", target));
}

// 2et+1 -> 2et+2e: order-2e block on the 2e-1 new vertices plus pivot v0.
ConstructionResult add_block_through_pivot(const ConstructionResult& cur, int split, Vertex target) {
  const Vertex n = cur.system.n();
  const int e = cur.system.e();
  const Vertex ue = static_cast<Vertex>(e);
  auto s = split_sides(cur.colouring, split);
  const Vertex v0 = last_in_r(cur.colouring, s);
  const int pivot_colour = cur.colouring[v0];
  Assembly a = start_from(cur, n + 2 * ue - 1);
  const auto& block = detail::strong_block(e);
  // Block vertex 1 -> v0, vertex j -> n + j - 1; odd side shares v0's colour.
  Vertices image(2 * ue);
  image[0] = v0;
  for (Vertex j = 2; j <= 2 * ue; ++j) {
    image[j - 1] = n + j - 1;
    a.paint(n + j - 1, block.colouring[j] == 1 ? pivot_colour : s.y_colour);
  }
  a.embed(block.system, image);
  Vertices first = range(n + 1, ue), second = range(n + ue + 1, ue - 1);
  Vertices old;
  for (Vertex v = 1; v <= n; ++v)
    if (v != v0) old.push_back(v);
  for (Vertex v : old) a.star(v, first);
  a.join(second, old);
  auto claims = next_claims(cur, "extend_estar", target);
  claims.params.push_back({"pivot", v0});
  return a.finish(std::move(claims));
}

void check_target(const ConstructionResult& base, Vertex target, const char* what) {
  const int e = base.system.e();
  if (!is_admissible(e, target)) throw InadmissibleOrder(std::string(what) + ": target order is not admissible");
  if (target <= base.system.n()) throw InvalidArgument(std::string(what) + ": target must exceed the base order");
  if (base.colouring.k() < 2) throw InvalidArgument(std::string(what) + ": base must be at least 2-chromatic");
}

}  // namespace

ConstructionResult extend_3star(const ConstructionResult& base, Vertex target_n, int split) {
  if (base.system.e() != 3) throw InvalidArgument("extend_3star needs a 3-star system");
  check_target(base, target_n, "extend_3star");
  ConstructionResult cur = base;
  if (cur.system.n() % 3 == 1) cur = add_two(cur, split, target_n);
  while (cur.system.n() + 3 <= target_n) cur = add_three(cur, split, target_n);
  if (cur.system.n() + 1 == target_n) cur = add_one(cur, split, "extend_3star", target_n);
  if (cur.system.n() != target_n) throw UnsupportedCase("target order not reachable from the base order");
  cur.claims.k = base.claims.k;
  return cur;
}

ConstructionResult extend_estar(const ConstructionResult& base, Vertex target_n, int split) {
  const Vertex two_e = 2 * static_cast<Vertex>(base.system.e());
  check_target(base, target_n, "extend_estar");
  if (base.system.n() % two_e > 1 || target_n % two_e > 1)
    throw InadmissibleOrder("extend_estar works on orders = 0, 1 (mod 2e)");
  ConstructionResult cur = base;
  if (cur.system.n() % two_e == 1) cur = add_block_through_pivot(cur, split, target_n);
  while (cur.system.n() + two_e <= target_n) cur = add_block(cur, split, target_n);
  if (cur.system.n() + 1 == target_n) cur = add_one(cur, split, "extend_estar", target_n);
  if (cur.system.n() != target_n) throw UnsupportedCase("target order not reachable from the base order");
  return cur;
}

// ---------------------------------------------------------------------------
// Forcing extension: every new vertex gets stars onto e-subsets of each
// other colour class, so its colour is determined by the old vertices.

namespace {

struct Forcing {
  std::vector<Vertices> heads;  // first e vertices of each class
};

Forcing forcing_sets(const Colouring& col, int e, Vertex excluded = 0) {
  Forcing f;
  for (auto& cls : col.members()) {
    Vertices head;
    for (Vertex v : cls) {
      if (head.size() == static_cast<std::size_t>(e)) break;
      if (v != excluded) head.push_back(v);
    }
    if (head.size() < static_cast<std::size_t>(e)) throw UnsupportedCase("a colour class has at most e vertices");
    f.heads.push_back(std::move(head));
  }
  return f;
}

void force_and_fan(Assembly& a, Vertex x, const Forcing& f, const Vertices& pool) {
  const int cx = a.colour(x);
  Vertices used;
  for (int s = 1; s <= static_cast<int>(f.heads.size()); ++s) {
    if (s == cx) continue;
    const auto& h = f.heads[static_cast<std::size_t>(s - 1)];
    a.star(x, h);
    used.insert(used.end(), h.begin(), h.end());
  }
  a.fan(x, detail::minus(pool, used));
}

ConstructionResult unique_add_one(const ConstructionResult& cur, Vertex target) {
  const Vertex n = cur.system.n();
  auto f = forcing_sets(cur.colouring, cur.system.e());
  Assembly a = start_from(cur, n + 1);
  a.paint(n + 1, 1);
  force_and_fan(a, n + 1, f, range(1, n));
  auto c = next_claims(cur, "extend_unique", target);
  c.unique = true;
  return a.finish(std::move(c));
}

ConstructionResult unique_add_block(const ConstructionResult& cur, Vertex target) {
  const Vertex n = cur.system.n();
  const int e = cur.system.e();
  const Vertex ue = static_cast<Vertex>(e);
  const auto members = cur.colouring.members();
  const Vertex v0 = members[0].back();  // in C_1 but outside its first e vertices
  auto f = forcing_sets(cur.colouring, e);
  Assembly a = start_from(cur, n + 2 * ue - 1);
  const auto& block = detail::strong_block(e);
  Vertices image(2 * ue);
  image[0] = v0;
  for (Vertex j = 2; j <= 2 * ue; ++j) {
    image[j - 1] = n + j - 1;
    a.paint(n + j - 1, block.colouring[j]);
  }
  a.embed(block.system, image);
  Vertices pool;
  for (Vertex v = 1; v <= n; ++v)
    if (v != v0) pool.push_back(v);
  for (Vertex x = n + 1; x <= n + 2 * ue - 1; ++x) force_and_fan(a, x, f, pool);
  auto c = next_claims(cur, "extend_unique", target);
  c.unique = true;
  c.params.push_back({"pivot", v0});
  return a.finish(std::move(c));
}

}  // namespace

ConstructionResult extend_unique(const ConstructionResult& base, Vertex target_n) {
  const int e = base.system.e();
  const Vertex two_e = 2 * static_cast<Vertex>(e);
  check_target(base, target_n, "extend_unique");
  if (!base.claims.unique) throw InvalidArgument("extend_unique needs a uniquely colourable base");
  if (base.system.n() % two_e != 0 || target_n % two_e > 1)
    throw InadmissibleOrder("extend_unique goes from an order = 0 (mod 2e) to one = 0, 1 (mod 2e)");
  for (auto s : base.colouring.class_sizes())
    if (s <= static_cast<std::size_t>(e)) throw InvalidArgument("extend_unique needs every class larger than e");
  ConstructionResult cur = base;
  while (cur.system.n() < target_n) {
    cur = unique_add_one(cur, target_n);
    if (cur.system.n() == target_n) break;
    cur = unique_add_block(cur, target_n);
  }
  return cur;
}

}  // namespace starlight
