// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
// Each check re-derives what it needs; nothing is cached between criteria
// except the systems collected for the round-trip check at the end.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <streambuf>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "starlight/baranyai.hpp"
#include "starlight/chromatic.hpp"
#include "starlight/constructions.hpp"
#include "starlight/io.hpp"

using namespace starlight;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;
  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      notes.push_back("failed: " + what);
    }
  }
  void note(const std::string& s) { notes.push_back(s); }
};

int failures = 0;

void criterion(int id, const std::string& title, double limit_seconds, const std::function<void(Outcome&)>& body) {
  Outcome out;
  auto t0 = Clock::now();
  try {
    body(out);
  } catch (const std::exception& ex) {
    out.pass = false;
    out.notes.push_back(std::string("exception: ") + ex.what());
  }
  const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  if (limit_seconds > 0 && secs > limit_seconds) {
    out.pass = false;
    out.notes.push_back("over the " + std::to_string(static_cast<int>(limit_seconds)) + " s limit");
  }
  failures += !out.pass;
  std::printf("%s %2d  %s (%.2f s)\n", out.pass ? "PASS" : "FAIL", id, title.c_str(), secs);
  for (const auto& n : out.notes) std::printf("         %s\n", n.c_str());
  std::fflush(stdout);
}

// FNV-1a over everything written to it.
class HashBuf : public std::streambuf {
 public:
  std::uint64_t h = 1469598103934665603ull;

 protected:
  int_type overflow(int_type c) override {
    if (c != traits_type::eof()) mix(static_cast<char>(c));
    return c;
  }
  std::streamsize xsputn(const char* s, std::streamsize n) override {
    for (std::streamsize i = 0; i < n; ++i) mix(s[i]);
    return n;
  }

 private:
  void mix(char c) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ull;
  }
};

std::uint64_t fingerprint(const ConstructionResult& r) {
  HashBuf buf;
  std::ostream os(&buf);
  write_system(os, r.system);
  write_colouring(os, r.colouring);
  os << serialize_claims(r.claims);
  os.flush();
  return buf.h;
}

bool has_base_blocks(const StarSystem& base, const StarSystem& big) {
  std::set<std::vector<Vertex>> have;
  for (std::size_t i = 0; i < big.size(); ++i) {
    auto b = big.block(i);
    std::vector<Vertex> key{b.center};
    key.insert(key.end(), b.leaves.begin(), b.leaves.end());
    have.insert(std::move(key));
  }
  for (std::size_t i = 0; i < base.size(); ++i) {
    auto b = base.block(i);
    std::vector<Vertex> key{b.center};
    key.insert(key.end(), b.leaves.begin(), b.leaves.end());
    if (!have.count(key)) return false;
  }
  return true;
}

bool chi_is(const StarSystem& s, int k) {
  auto cert = chromatic_number(s, default_budget(), k + 1);
  return cert.exact() && cert.lower == k;
}

PartialColouring anchored(Vertex n, const GadgetLayout& layout) {
  PartialColouring p(static_cast<int>(layout.anchors.size()), n);
  for (std::size_t s = 0; s < layout.anchors.size(); ++s)
    for (Vertex v : layout.anchors[s]) p.fix(v, static_cast<int>(s) + 1);
  return p;
}

// Small and medium systems checked for round-trip and determinism at the end,
// each with the recipe that rebuilt it.
struct Built {
  std::string name;
  ConstructionResult result;
  std::function<ConstructionResult()> again;
};
std::vector<Built> built;

void keep(const std::string& name, const ConstructionResult& r, std::function<ConstructionResult()> again) {
  built.push_back({name, r, std::move(again)});
}

}  // namespace

int main() {
  criterion(1, "golden order-6 3-star and order-8 4-star systems, block for block", 1, [](Outcome& o) {
    const std::vector<Star> six{{1, {3, 5, 6}}, {2, {1, 3, 6}}, {4, {1, 2, 3}}, {5, {2, 3, 4}}, {6, {3, 4, 5}}};
    const std::vector<Star> eight{{1, {3, 5, 6, 8}}, {2, {1, 3, 6, 8}}, {4, {1, 2, 3, 8}}, {5, {2, 3, 4, 7}},
                                  {6, {3, 4, 5, 7}}, {7, {1, 2, 3, 4}},    {8, {3, 5, 6, 7}}};
    auto a = build_equitable_3star(6);
    auto b = build_strong_2chromatic(4);
    o.require(a.system.stars() == six, "order-6 listing");
    o.require(b.system.stars() == eight, "order-8 listing");
    o.require(validate_decomposition(a.system).ok && validate_decomposition(b.system).ok, "edge partition");
    Colouring r6(2, std::vector<int>{1, 2, 1, 2, 1, 2});  // R = {1,3,5}, Y = {2,4,6}
    Colouring r8(2, std::vector<int>{1, 2, 1, 2, 1, 2, 1, 2});
    auto c6 = check_colouring(a.system, r6), c8 = check_colouring(b.system, r8);
    o.require(c6.proper && c6.strongly_equitable, "order-6 classes proper and strongly equitable");
    o.require(c8.proper && c8.strongly_equitable, "order-8 classes proper and strongly equitable");
    o.require(a.colouring == r6 && b.colouring == r8, "attached colourings are the listed classes");
    keep("order-6 3-star", a, [] { return build_equitable_3star(6); });
    keep("order-8 4-star", b, [] { return build_strong_2chromatic(4); });
  });

  criterion(2, "equitable 2-chromatic 3-star systems for every admissible order 6..33", 30, [](Outcome& o) {
    int count = 0;
    for (Vertex n = 6; n <= 33; ++n) {
      if (!is_admissible(3, n)) continue;
      auto r = build_equitable_3star(n);
      auto rep = check_colouring(r.system, r.colouring);
      const std::string at = " at n=" + std::to_string(n);
      o.require(r.system.n() == n && validate_decomposition(r.system).ok, "edge partition" + at);
      o.require(rep.proper && rep.equitable && r.colouring.used_classes() == 2, "equitable 2-colouring" + at);
      o.require(chi_is(r.system, 2), "chromatic number 2" + at);
      keep("3-star order " + std::to_string(n), r, [n] { return build_equitable_3star(n); });
      ++count;
    }
    o.note(std::to_string(count) + " orders");
  });

  criterion(3, "strongly equitable 2-chromatic e-star systems of order 2e, e = 3..8", 10, [](Outcome& o) {
    for (int e = 3; e <= 8; ++e) {
      auto r = build_strong_2chromatic(e);
      auto rep = check_colouring(r.system, r.colouring);
      const std::string at = " at e=" + std::to_string(e);
      o.require(r.system.n() == static_cast<Vertex>(2 * e) && validate_decomposition(r.system).ok, "edge partition" + at);
      o.require(rep.proper && rep.strongly_equitable, "strongly equitable 2-colouring" + at);
      o.require(chi_is(r.system, 2), "chromatic number 2" + at);
      keep("e-star order 2e, e=" + std::to_string(e), r, [e] { return build_strong_2chromatic(e); });
    }
  });

  criterion(4, "extensions of the order-6 and order-8 systems over three rounds keep the base and chi = 2", 60,
            [](Outcome& o) {
              auto six = build_equitable_3star(6);
              for (Vertex n : {7u, 9u, 10u, 12u, 13u, 15u, 16u}) {
                auto r = extend_3star(six, n);
                const std::string at = " (3-star, n=" + std::to_string(n) + ")";
                o.require(validate_decomposition(r.system).ok, "edge partition" + at);
                o.require(has_base_blocks(six.system, r.system), "base blocks kept" + at);
                o.require(check_colouring(r.system, r.colouring).proper && chi_is(r.system, 2), "chi = 2" + at);
                keep("3-star extension to " + std::to_string(n), r, [n] { return extend_3star(build_equitable_3star(6), n); });
              }
              auto eight = build_strong_2chromatic(4);
              for (Vertex n : {9u, 16u, 17u, 24u, 25u, 32u, 33u}) {
                auto r = extend_estar(eight, n);
                const std::string at = " (4-star, n=" + std::to_string(n) + ")";
                o.require(validate_decomposition(r.system).ok, "edge partition" + at);
                o.require(has_base_blocks(eight.system, r.system), "base blocks kept" + at);
                o.require(check_colouring(r.system, r.colouring).proper && chi_is(r.system, 2), "chi = 2" + at);
                keep("4-star extension to " + std::to_string(n), r,
                     [n] { return extend_estar(build_strong_2chromatic(4), n); });
              }
            });

  criterion(5, "3-chromatic 3-star lift: order 66, 715 blocks, not 2-colourable", 600, [](Outcome& o) {
    auto r = lift_3star(build_equitable_3star(6), 1);
    o.require(r.system.n() == 66, "order 66");
    o.require(r.system.size() == 715, "715 blocks");
    o.require(validate_decomposition(r.system).ok, "edge partition");
    o.require(check_colouring(r.system, r.colouring).proper && r.colouring.used_classes() == 3, "proper 3-colouring");
    auto two = find_colouring(r.system, 2, default_budget());
    o.require(two.verdict == Verdict::NotColourable, std::string("2 colours: ") + to_string(two.verdict));
    o.note("2-colouring refuted in " + std::to_string(two.stats.nodes) + " nodes");
    keep("3-chromatic 3-star lift", r, [] { return lift_3star(build_equitable_3star(6), 1); });
    auto estar = lift_estar(build_strong_2chromatic(3), 1);
    keep("3-chromatic e-star lift", estar, [] { return lift_estar(build_strong_2chromatic(3), 1); });
  });

  criterion(6, "uniquely 2-chromatic 3-star system: order 138, forced from the anchors, solver says Unique", 600,
            [](Outcome& o) {
              auto r = build_unique_2chromatic(3);
              o.require(r.system.n() == 138, "order 138");
              o.require(validate_decomposition(r.system).ok, "edge partition");
              auto forced = propagate_forced(r.system, anchored(r.system.n(), unique_2chromatic_layout(3)));
              o.require(!forced.conflict && forced.result.total(), "anchors force every vertex");
              o.require(forced.result.total() && check_colouring(r.system, forced.result.to_colouring()).proper,
                        "forced colouring is proper");
              auto u = is_uniquely_k_colourable(r.system, 2, default_budget());
              o.require(u.verdict == Uniqueness::Unique, std::string("uniqueness: ") + to_string(u.verdict));
              o.note("search: " + std::to_string(u.stats.nodes) + " nodes");
              keep("uniquely 2-chromatic order 138", r, [] { return build_unique_2chromatic(3); });
            });

  criterion(7, "uniquely 2-chromatic extensions to orders 139 and 144 stay unique", 900, [](Outcome& o) {
    auto base = build_unique_2chromatic(3);
    for (Vertex n : {139u, 144u}) {
      auto r = extend_unique(base, n);
      const std::string at = " at n=" + std::to_string(n);
      o.require(r.system.n() == n && validate_decomposition(r.system).ok, "edge partition" + at);
      auto u = is_uniquely_k_colourable(r.system, 2, default_budget());
      o.require(u.verdict == Uniqueness::Unique, std::string("uniqueness: ") + to_string(u.verdict) + at);
      o.note("n=" + std::to_string(n) + ": " + to_string(u.verdict) + " in " + std::to_string(u.stats.nodes) + " nodes");
      keep("unique extension to " + std::to_string(n), r,
           [n] { return extend_unique(build_unique_2chromatic(3), n); });
    }
  });

  criterion(8, "strongly equitable 3-chromatic system from three unique copies: order 414, classes 138/138/138", 0,
            [](Outcome& o) {
              auto r = lift_unique_to_equitable(build_unique_2chromatic(3));
              o.require(r.system.n() == 414, "order 414");
              o.require(r.colouring.class_sizes() == std::vector<std::size_t>{138, 138, 138}, "class sizes");
              o.require(validate_decomposition(r.system).ok, "edge partition");
              o.require(check_colouring(r.system, r.colouring).proper, "proper 3-colouring");
              auto two = find_colouring(r.system, 2, default_budget());
              o.require(two.verdict != Verdict::Colourable, "must not be 2-colourable");
              o.note(std::string("2 colours: ") + to_string(two.verdict) + " after " + std::to_string(two.stats.nodes) +
                     " nodes");
              keep("equitable 3-chromatic order 414", r,
                   [] { return lift_unique_to_equitable(build_unique_2chromatic(3)); });
            });

  std::uint64_t big_print = 0;
  bool big_roundtrip = false;
  criterion(9, "uniquely 3-chromatic gadget system and its +1 extension: streaming check and forcing chain", 0,
            [&](Outcome& o) {
              auto r = make_unique_kchromatic(lift_unique_to_equitable(build_unique_2chromatic(3)), 0);
              const auto layout = unique_kchromatic_layout(3, 3, 414);
              o.note("order " + std::to_string(r.system.n()) + ", " + std::to_string(r.system.size()) + " blocks");
              o.require(r.system.n() == layout.gadget_size + static_cast<Vertex>(layout.copies) * 414, "order from layout");
              auto dec = validate_decomposition(r.system);
              o.require(dec.streamed, "streaming path used");
              o.require(dec.ok, "edge partition");
              auto forced = propagate_forced(r.system, anchored(r.system.n(), layout));
              o.require(!forced.conflict && forced.result.total(), "anchors force every vertex");
              o.require(forced.result.total() && check_colouring(r.system, forced.result.to_colouring()).proper,
                        "forced 3-colouring is proper");
              o.require(r.claims.unique && r.colouring.used_classes() == 3, "claims");

              big_print = fingerprint(r);
              {  // round trip through a file; the text is too large to hold twice
                auto path = std::filesystem::temp_directory_path() / "starlight_acceptance_big.ess";
                {
                  std::ofstream f(path, std::ios::binary);
                  write_system(f, r.system);
                }
                std::ifstream f(path, std::ios::binary);
                big_roundtrip = read_system(f) == r.system;
                std::filesystem::remove(path);
              }

              auto x = extend_unique(r, r.system.n() + 1);
              r = ConstructionResult{};  // release the base before the next check
              o.note("+1 extension: order " + std::to_string(x.system.n()));
              auto xdec = validate_decomposition(x.system);
              o.require(xdec.streamed && xdec.ok, "extension edge partition (streamed)");
              auto xf = propagate_forced(x.system, anchored(x.system.n(), layout));
              o.require(!xf.conflict && xf.result.total() && check_colouring(x.system, xf.result.to_colouring()).proper,
                        "anchors force a proper 3-colouring of the extension");
            });

  criterion(10, "subset partitions: m <= 12, e in {2,3,4}, 100 seeded size vectors each; exact cover agrees for m <= 9",
            120, [](Outcome& o) {
              std::size_t runs = 0, compared = 0;
              for (int e = 2; e <= 4; ++e)
                for (int m = e; m <= 12; ++m) {
                  std::mt19937_64 rng(static_cast<std::uint64_t>(1000 * m + e));
                  for (int t = 0; t < 100; ++t) {
                    auto sizes = oracle::random_sizes(m, e, rng);
                    auto p = partition_all_subsets(m, e, sizes, static_cast<std::uint64_t>(t));
                    ++runs;
                    const std::string at = " (m=" + std::to_string(m) + ", e=" + std::to_string(e) + ")";
                    if (!verify_partition(p, sizes) || !oracle::partition_ok(p, sizes)) {
                      o.require(false, "flow partition" + at);
                      return;
                    }
                    if (m <= 9) {
                      auto q = partition_by_exact_cover(m, e, sizes);
                      ++compared;
                      if (!verify_partition(q, sizes) || !oracle::partition_ok(q, sizes)) {
                        o.require(false, "exact cover partition" + at);
                        return;
                      }
                    }
                  }
                }
              o.note(std::to_string(runs) + " flow partitions, " + std::to_string(compared) + " exact-cover cross-checks");
            });

  criterion(11, "search against brute force on 200 random star systems with n <= 12, k = 1..3", 300, [](Outcome& o) {
    std::vector<std::pair<int, Vertex>> shapes;
    for (int e = 2; e <= 6; ++e)
      for (Vertex n = static_cast<Vertex>(2 * e); n <= 12; ++n)
        if (is_admissible(e, n)) shapes.push_back({e, n});
    std::mt19937_64 rng(2024);
    int mismatches = 0, unique = 0, multiple = 0, none = 0;
    for (int i = 0; i < 200; ++i) {
      auto [e, n] = shapes[static_cast<std::size_t>(i) % shapes.size()];
      auto sys = oracle::random_star_system(e, n, rng);
      for (int k = 1; k <= 3; ++k) {
        auto census = oracle::brute_force(sys, k);
        auto f = find_colouring(sys, k);
        bool ok = (f.verdict == Verdict::Colourable) == (census.orbits > 0);
        ok = ok && f.verdict != Verdict::BudgetExceeded;
        if (f.colouring) ok = ok && oracle::proper(sys, f.colouring->classes());
        auto u = is_uniquely_k_colourable(sys, k);
        auto want = census.orbits == 0 ? Uniqueness::NotColourable
                    : census.orbits == 1 ? Uniqueness::Unique
                                         : Uniqueness::Multiple;
        ok = ok && u.verdict == want;
        if (u.verdict == Uniqueness::Multiple)
          ok = ok && u.second && oracle::canonical(u.first->classes()) != oracle::canonical(u.second->classes());
        none += want == Uniqueness::NotColourable;
        unique += want == Uniqueness::Unique;
        multiple += want == Uniqueness::Multiple;
        mismatches += !ok;
      }
    }
    o.require(mismatches == 0, std::to_string(mismatches) + " disagreements");
    o.note("oracle verdicts: " + std::to_string(none) + " not colourable, " + std::to_string(unique) + " unique, " +
           std::to_string(multiple) + " multiple");
  });

  criterion(12, "serialization round-trips and fixed-seed runs are byte-identical", 0, [&](Outcome& o) {
    for (const auto& b : built) {
      auto text = serialize_system(b.result.system);
      o.require(parse_system(text) == b.result.system && serialize_system(parse_system(text)) == text,
                "round trip of " + b.name);
      o.require(parse_colouring(serialize_colouring(b.result.colouring)) == b.result.colouring,
                "colouring round trip of " + b.name);
      o.require(fingerprint(b.again()) == fingerprint(b.result), "repeat build of " + b.name);
    }
    o.require(big_roundtrip, "round trip of the uniquely 3-chromatic system");
    o.require(big_print != 0 &&
                  fingerprint(make_unique_kchromatic(lift_unique_to_equitable(build_unique_2chromatic(3)), 0)) ==
                      big_print,
              "repeat build of the uniquely 3-chromatic system");
    o.note(std::to_string(built.size() + 1) + " systems");
  });

  std::printf("%d criteria failed\n", failures);
  return failures ? 1 : 0;
}
