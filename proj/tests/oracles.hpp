#pragma once

// Slow, obviously-correct reference implementations. Nothing here shares code
// with the library beyond the StarSystem / Colouring containers.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "starlight/baranyai.hpp"
#include "starlight/core.hpp"

namespace oracle {

using starlight::Colouring;
using starlight::StarSystem;
using starlight::Vertex;

inline bool proper(const StarSystem& sys, const std::vector<int>& c) {
  for (std::size_t i = 0; i < sys.size(); ++i) {
    auto b = sys.block(i);
    bool mono = true;
    for (Vertex v : b.leaves) mono = mono && c[v - 1] == c[b.center - 1];
    if (mono) return false;
  }
  return true;
}

// Every pair of [1, n] covered exactly once, by an n x n count matrix.
inline bool partitions_edges(const StarSystem& sys) {
  const Vertex n = sys.n();
  std::vector<int> seen(std::size_t{n} * n, 0);
  for (std::size_t i = 0; i < sys.size(); ++i) {
    auto b = sys.block(i);
    for (Vertex v : b.leaves) {
      if (v == b.center || v < 1 || v > n) return false;
      ++seen[(std::min(v, b.center) - 1) * std::size_t{n} + (std::max(v, b.center) - 1)];
    }
  }
  for (Vertex u = 1; u <= n; ++u)
    for (Vertex v = u + 1; v <= n; ++v)
      if (seen[(u - 1) * std::size_t{n} + (v - 1)] != 1) return false;
  return true;
}

struct Census {
  std::uint64_t proper = 0;     // all proper k-colourings
  std::uint64_t orbits = 0;     // up to renaming colours
  std::optional<std::vector<int>> first;
};

// All k^n maps; orbits are counted through their restricted-growth
// representative (colours first appear in order 1, 2, ...).
inline Census brute_force(const StarSystem& sys, int k) {
  const Vertex n = sys.n();
  Census out;
  std::vector<int> c(n, 1);
  for (;;) {
    if (proper(sys, c)) {
      ++out.proper;
      int next = 1;
      bool rgs = true;
      for (int x : c) {
        if (x > next) {
          rgs = false;
          break;
        }
        if (x == next) ++next;
      }
      if (rgs) {
        ++out.orbits;
        if (!out.first) out.first = c;
      }
    }
    std::size_t i = 0;
    while (i < n && c[i] == k) c[i++] = 1;
    if (i == n) break;
    ++c[i];
  }
  return out;
}

// Colour-permutation invariant form of a colouring.
inline std::vector<int> canonical(const std::vector<int>& c) {
  std::vector<int> map(65, 0), out;
  int next = 0;
  for (int x : c) {
    if (!map[x]) map[x] = ++next;
    out.push_back(map[x]);
  }
  return out;
}

// "Solve, forbid the orbit, re-solve" with plain backtracking (no
// propagation): returns the number of orbits found, capped at 2.
inline int orbits_by_exclusion(const StarSystem& sys, int k) {
  const Vertex n = sys.n();
  std::vector<std::vector<std::size_t>> at(n + 1);
  for (std::size_t i = 0; i < sys.size(); ++i) {
    auto b = sys.block(i);
    at[b.center].push_back(i);
    for (Vertex v : b.leaves) at[v].push_back(i);
  }
  std::vector<int> c(n, 0);
  std::set<std::vector<int>> forbidden;
  auto block_ok = [&](std::size_t i) {
    auto b = sys.block(i);
    int first = c[b.center - 1];
    if (!first) return true;
    for (Vertex v : b.leaves)
      if (c[v - 1] != first) return true;  // mixed or open
    return false;
  };
  std::vector<int> found;
  auto solve = [&](auto&& self, Vertex v) -> bool {
    if (v > n) {
      if (forbidden.count(canonical(c))) return false;
      found = c;
      return true;
    }
    for (int x = 1; x <= k; ++x) {
      c[v - 1] = x;
      bool ok = std::all_of(at[v].begin(), at[v].end(), block_ok);
      if (ok && self(self, v + 1)) return true;
    }
    c[v - 1] = 0;
    return false;
  };
  int orbits = 0;
  while (orbits < 2) {
    std::fill(c.begin(), c.end(), 0);
    if (!solve(solve, 1)) break;
    forbidden.insert(canonical(found));
    ++orbits;
  }
  return orbits;
}

// Random e-star system of order n: orient K_n so that every out-degree is a
// multiple of e, then cut each out-neighbourhood into stars.
template <class Rng>
StarSystem random_star_system(int e, Vertex n, Rng& rng) {
  for (;;) {
    std::vector<std::vector<char>> out(n + 1, std::vector<char>(n + 1, 0));
    std::vector<int> deg(n + 1, 0);
    std::bernoulli_distribution coin(0.5);
    for (Vertex u = 1; u <= n; ++u)
      for (Vertex v = u + 1; v <= n; ++v) {
        bool fwd = coin(rng);
        out[fwd ? u : v][fwd ? v : u] = 1;
        ++deg[fwd ? u : v];
      }
    // Random walk: flip an edge at a vertex whose out-degree is off.
    for (int step = 0; step < 20000; ++step) {
      std::vector<Vertex> bad;
      for (Vertex v = 1; v <= n; ++v)
        if (deg[v] % e) bad.push_back(v);
      if (bad.empty()) break;
      Vertex u = bad[std::uniform_int_distribution<std::size_t>(0, bad.size() - 1)(rng)];
      Vertex w = u;
      while (w == u) w = std::uniform_int_distribution<Vertex>(1, n)(rng);
      if (out[u][w]) {
        out[u][w] = 0, out[w][u] = 1, --deg[u], ++deg[w];
      } else {
        out[w][u] = 0, out[u][w] = 1, ++deg[u], --deg[w];
      }
    }
    if (std::any_of(deg.begin() + 1, deg.end(), [&](int d) { return d % e; })) continue;
    StarSystem sys(e, n);
    for (Vertex u = 1; u <= n; ++u) {
      std::vector<Vertex> nb;
      for (Vertex v = 1; v <= n; ++v)
        if (out[u][v]) nb.push_back(v);
      std::shuffle(nb.begin(), nb.end(), rng);
      for (std::size_t i = 0; i < nb.size(); i += static_cast<std::size_t>(e))
        sys.add(u, std::vector<Vertex>(nb.begin() + static_cast<std::ptrdiff_t>(i),
                                       nb.begin() + static_cast<std::ptrdiff_t>(i) + e));
    }
    return sys;
  }
}

// Subset partition check by bitmask bookkeeping.
inline bool partition_ok(const starlight::SubsetPartition& p, const std::vector<int>& sizes) {
  if (p.classes.size() != sizes.size()) return false;
  std::set<std::uint64_t> all;
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    if (static_cast<int>(p.classes[i].size()) != sizes[i]) return false;
    std::uint64_t used = 0;
    for (const auto& s : p.classes[i]) {
      if (static_cast<int>(s.size()) != p.e) return false;
      std::uint64_t mask = 0;
      for (int x : s) {
        if (x < 1 || x > p.m) return false;
        mask |= std::uint64_t{1} << (x - 1);
      }
      if (std::popcount(mask) != p.e || (mask & used) || !all.insert(mask).second) return false;
      used |= mask;
    }
  }
  return all.size() == starlight::binomial(static_cast<std::uint64_t>(p.m), static_cast<std::uint64_t>(p.e));
}

// Random feasible size vector: every class fits in m/e, sizes sum to C(m,e).
template <class Rng>
std::vector<int> random_sizes(int m, int e, Rng& rng) {
  const int cap = m / e;
  int left = static_cast<int>(starlight::binomial(static_cast<std::uint64_t>(m), static_cast<std::uint64_t>(e)));
  std::vector<int> out;
  while (left > 0) {
    int s = std::uniform_int_distribution<int>(1, std::min(cap, left))(rng);
    out.push_back(s);
    left -= s;
  }
  return out;
}

}  // namespace oracle
