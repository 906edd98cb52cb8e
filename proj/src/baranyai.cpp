#include "starlight/baranyai.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <tuple>

#include "max_flow.hpp"
#include "starlight/core.hpp"

namespace starlight {

namespace {

using Mask = std::uint64_t;

void check_request(int m, int e, std::span<const int> sizes, int max_m) {
  if (e < 1 || m < e) throw InfeasibleRequest("need 1 <= e <= m");
  if (m > max_m) throw InfeasibleRequest("ground set too large for this partitioner");
  std::uint64_t total = 0;
  for (int s : sizes) {
    if (s < 1) throw InfeasibleRequest("class sizes must be positive");
    if (s > m / e) throw InfeasibleRequest("class size exceeds floor(m/e)");
    total += static_cast<std::uint64_t>(s);
  }
  if (total != binomial(static_cast<std::uint64_t>(m), static_cast<std::uint64_t>(e)))
    throw InfeasibleRequest("class sizes must sum to C(m,e)");
}

Subset to_subset(Mask s) {
  Subset out;
  while (s) {
    out.push_back(std::countr_zero(s) + 1);
    s &= s - 1;
  }
  return out;
}

SubsetPartition finish(int m, int e, const std::vector<std::vector<Mask>>& classes) {
  SubsetPartition p{m, e, {}};
  p.classes.reserve(classes.size());
  for (const auto& cls : classes) {
    std::vector<Subset> c;
    for (Mask s : cls) c.push_back(to_subset(s));
    std::sort(c.begin(), c.end());
    p.classes.push_back(std::move(c));
  }
  return p;
}

}  // namespace

SubsetPartition partition_all_subsets(int m, int e, std::span<const int> sizes, std::uint64_t seed) {
  check_request(m, e, sizes, 64);
  const std::size_t t = sizes.size();
  // Each class holds a_j partial sets; initially all empty.
  std::vector<std::vector<Mask>> cls(t);
  for (std::size_t j = 0; j < t; ++j) cls[j].assign(static_cast<std::size_t>(sizes[j]), 0);

  std::mt19937_64 rng(seed);
  std::vector<std::size_t> class_order(t);
  std::iota(class_order.begin(), class_order.end(), 0);

  for (int i = 0; i < m; ++i) {
    const Mask bit = Mask{1} << i;
    const std::int64_t rest = m - i;  // elements not yet placed, including this one

    // Distinct unfinished partial sets, colex order, one flow node each.
    std::map<Mask, int, bool (*)(Mask, Mask)> set_node(+[](Mask a, Mask b) {
      return std::popcount(a) != std::popcount(b) ? std::popcount(a) < std::popcount(b) : a < b;
    });
    for (const auto& c : cls)
      for (Mask s : c)
        if (std::popcount(s) < e) set_node.emplace(s, 0);

    const int source = 0, sink = 1;
    int next = 2;
    const int first_class = next;
    next += static_cast<int>(t);
    for (auto& [s, id] : set_node) id = next++;
    detail::BoundedFlow flow(next);

    if (seed != 0) std::shuffle(class_order.begin(), class_order.end(), rng);
    struct Arc {
      std::size_t cls;
      Mask set;
      int edge;
    };
    std::vector<Arc> arcs;
    for (std::size_t j : class_order) {
      std::int64_t missing = 0;
      std::map<Mask, std::int64_t> mult;
      for (Mask s : cls[j]) {
        int sz = std::popcount(s);
        missing += e - sz;
        if (sz < e) ++mult[s];
      }
      // Fractional share of class j is missing/rest <= 1; round it either way.
      std::int64_t lo = missing / rest, hi = lo + (missing % rest ? 1 : 0);
      flow.add_edge(source, first_class + static_cast<int>(j), lo, hi);
      std::vector<std::pair<Mask, std::int64_t>> order(mult.begin(), mult.end());
      if (seed != 0) std::shuffle(order.begin(), order.end(), rng);
      for (auto [s, c] : order)
        arcs.push_back({j, s, flow.add_edge(first_class + static_cast<int>(j), set_node.at(s), 0, c)});
    }
    for (auto& [s, id] : set_node) {
      auto need = static_cast<std::int64_t>(
          binomial(static_cast<std::uint64_t>(rest - 1), static_cast<std::uint64_t>(e - std::popcount(s) - 1)));
      flow.add_edge(id, sink, need, need);
    }
    if (!flow.solve(source, sink))
      throw Error("subset partition flow step infeasible (internal invariant broken)");

    for (const Arc& a : arcs) {
      auto y = flow.flow(a.edge);
      for (Mask& s : cls[a.cls]) {
        if (y == 0) break;
        if (s == a.set) {
          s |= bit;
          --y;
        }
      }
    }
  }
  return finish(m, e, cls);
}

SubsetPartition partition_by_exact_cover(int m, int e, std::span<const int> sizes, std::uint64_t max_nodes) {
  check_request(m, e, sizes, 16);
  const Mask all = (Mask{1} << m) - 1;
  std::vector<Mask> subsets;  // lex order of the sorted tuples
  auto gen = [&](auto&& self, int from, int left, Mask acc) -> void {
    if (left == 0) {
      subsets.push_back(acc);
      return;
    }
    for (int x = from; x <= m - left; ++x) self(self, x + 1, left - 1, acc | Mask{1} << x);
  };
  gen(gen, 0, e, 0);
  std::vector<std::vector<std::size_t>> through(static_cast<std::size_t>(m));
  for (std::size_t i = 0; i < subsets.size(); ++i)
    for (Mask f = subsets[i]; f; f &= f - 1) through[static_cast<std::size_t>(std::countr_zero(f))].push_back(i);

  std::vector<std::vector<std::size_t>> apart(subsets.size());  // disjoint pairs
  for (std::size_t i = 0; i < subsets.size(); ++i)
    for (std::size_t k = 0; k < subsets.size(); ++k)
      if (!(subsets[i] & subsets[k])) apart[i].push_back(k);

  const std::size_t t = sizes.size();
  std::vector<int> room(sizes.begin(), sizes.end()), spare(t);
  std::vector<Mask> decided(t, 0);  // covered elements and declared holes
  for (std::size_t j = 0; j < t; ++j) spare[j] = m - e * room[j];
  std::vector<std::vector<Mask>> cls(t);
  std::vector<char> placed(subsets.size(), 0);
  std::vector<int> demand(static_cast<std::size_t>(m));
  for (int x = 0; x < m; ++x) demand[static_cast<std::size_t>(x)] = static_cast<int>(through[static_cast<std::size_t>(x)].size());
  std::uint64_t nodes = 0;

  auto place = [&](std::size_t j, std::size_t s) {
    placed[s] = 1;
    decided[j] |= subsets[s];
    --room[j];
    cls[j].push_back(subsets[s]);
    for (Mask f = subsets[s]; f; f &= f - 1) --demand[static_cast<std::size_t>(std::countr_zero(f))];
  };
  auto unplace = [&](std::size_t j, std::size_t s) {
    for (Mask f = subsets[s]; f; f &= f - 1) ++demand[static_cast<std::size_t>(std::countr_zero(f))];
    cls[j].pop_back();
    ++room[j];
    decided[j] &= ~subsets[s];
    placed[s] = 0;
  };
  auto fits = [&](std::size_t j, std::size_t s) { return room[j] > 0 && (decided[j] & subsets[s]) == 0; };

  // Items, most constrained first: "which class takes subset s" and, for
  // every started or hole-free class j and undecided x, "which subset covers
  // x in j, or is x one of j's holes". Empty classes with holes are only
  // entered through subset items, which branch over distinct class states so
  // identical classes are never tried twice. Subset options are counted over
  // all classes, so loose classes do not look cheap.
  auto rec = [&](auto&& self, std::size_t left) -> bool {
    if (left == 0) return true;
    if (++nodes > max_nodes) throw SearchExhausted("exact-cover subset partition exceeded its node budget");
    for (int x = 0; x < m; ++x) {
      int lo = 0, hi = 0;
      for (std::size_t j = 0; j < t; ++j)
        if (room[j] > 0 && !(decided[j] >> x & 1)) ++hi, lo += spare[j] == 0;
      const int d = demand[static_cast<std::size_t>(x)];
      if (d > hi || d < lo) return false;
    }

    std::size_t best = SIZE_MAX;
    std::size_t hole_class = SIZE_MAX;  // branch also on "x is a hole in this class"
    Mask hole_bit = 0;
    std::vector<std::pair<std::size_t, std::size_t>> options, opts;  // (class, subset)
    for (std::size_t j = 0; j < t && best > 1; ++j) {
      if (room[j] == 0 || (spare[j] > 0 && cls[j].empty())) continue;
      for (Mask f = all & ~decided[j]; f && best > 1; f &= f - 1) {
        opts.clear();
        for (std::size_t s : through[static_cast<std::size_t>(std::countr_zero(f))])
          if (!placed[s] && fits(j, s)) opts.push_back({j, s});
        const std::size_t count = opts.size() + (spare[j] > 0);
        if (count < best) {
          best = count;
          options.swap(opts);
          hole_class = spare[j] > 0 ? j : SIZE_MAX;
          hole_bit = f & (~f + 1);
        }
      }
    }
    auto partners = [&](std::size_t s) {
      std::size_t n = 0;
      for (std::size_t u : apart[s]) n += !placed[u];
      return n;
    };
    std::size_t best_partners = SIZE_MAX;
    for (std::size_t s = 0; s < subsets.size() && best > 1; ++s) {
      if (placed[s]) continue;
      std::size_t count = 0;
      for (std::size_t j = 0; j < t; ++j) count += fits(j, s);
      if (count > best) continue;
      const std::size_t p = partners(s);
      if (count == best && (hole_class != SIZE_MAX || p >= best_partners)) continue;
      best = count;
      best_partners = p;
      hole_class = SIZE_MAX;
      options.clear();
      std::set<std::tuple<int, int, Mask>> states;  // classes in the same state are interchangeable
      for (std::size_t j = 0; j < t; ++j)
        if (fits(j, s) && states.insert({room[j], spare[j], decided[j]}).second) options.push_back({j, s});
    }
    // Lonely subsets first: one with few disjoint partners left is the
    // likeliest to become unplaceable.
    std::stable_sort(options.begin(), options.end(),
                     [&](const auto& a, const auto& b) { return partners(a.second) < partners(b.second); });
    for (auto [j, s] : options) {
      place(j, s);
      if (self(self, left - 1)) return true;
      unplace(j, s);
    }
    if (hole_class != SIZE_MAX) {
      decided[hole_class] |= hole_bit;
      --spare[hole_class];
      if (self(self, left)) return true;
      ++spare[hole_class];
      decided[hole_class] &= ~hole_bit;
    }
    return false;
  };

  // Full classes (size e * room == m) each hold exactly one subset through
  // element 1 and are interchangeable, so hand those subsets out in
  // increasing order before the main search.
  std::vector<std::size_t> full;
  for (std::size_t j = 0; j < t; ++j)
    if (spare[j] == 0) full.push_back(j);
  const auto& zero = through[0];
  auto seed = [&](auto&& self, std::size_t i, std::size_t from) -> bool {
    if (i == full.size()) return rec(rec, subsets.size() - full.size());
    for (std::size_t z = from; z + (full.size() - i) <= zero.size(); ++z) {
      place(full[i], zero[z]);
      if (self(self, i + 1, z + 1)) return true;
      unplace(full[i], zero[z]);
    }
    return false;
  };
  if (!seed(seed, 0, 0)) throw Error("exact-cover subset partition found no solution");
  return finish(m, e, cls);
}

bool verify_partition(const SubsetPartition& p, std::span<const int> sizes) {
  if (p.e < 1 || p.m < p.e || p.m > 64) return false;
  if (p.classes.size() != sizes.size()) return false;
  std::set<Subset> seen;
  for (std::size_t j = 0; j < p.classes.size(); ++j) {
    if (static_cast<int>(p.classes[j].size()) != sizes[j]) return false;
    Mask used = 0;
    for (const Subset& s : p.classes[j]) {
      if (static_cast<int>(s.size()) != p.e) return false;
      Mask mask = 0;
      for (int x : s) {
        if (x < 1 || x > p.m) return false;
        mask |= Mask{1} << (x - 1);
      }
      if (std::popcount(mask) != p.e || (mask & used)) return false;
      used |= mask;
      if (!seen.insert(s).second) return false;
    }
  }
  return seen.size() == binomial(static_cast<std::uint64_t>(p.m), static_cast<std::uint64_t>(p.e));
}

std::string serialize_partition(const SubsetPartition& p) {
  std::ostringstream out;
  for (std::size_t j = 0; j < p.classes.size(); ++j) {
    out << "class " << j + 1 << ":";
    for (const Subset& s : p.classes[j]) {
      out << " {";
      for (std::size_t i = 0; i < s.size(); ++i) out << (i ? " " : "") << s[i];
      out << "}";
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace starlight
