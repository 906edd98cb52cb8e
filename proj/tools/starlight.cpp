// starlight: build, check and search e-star systems from the command line.
//
// Exit codes: 0 ok, 1 check failed (or a construction failed its own
// verification), 2 bad parameters or unparsable input, 3 search budget
// exceeded under --strict.

#include <cstdint>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "starlight/baranyai.hpp"
#include "starlight/chromatic.hpp"
#include "starlight/constructions.hpp"
#include "starlight/core.hpp"
#include "starlight/io.hpp"

namespace {

using namespace starlight;
using nlohmann::json;

constexpr int kOk = 0, kFail = 1, kUsage = 2, kBudget = 3;

struct Params {
  std::string theorem;
  int e = 3;
  int k = 2;
  std::uint64_t n = 0;
  std::uint64_t seed = 0;
  std::string out = "-";
  std::string col_out;
  std::string claims_out;
};

ConstructionResult three_star_base(int k, std::uint64_t seed) {
  if (k < 2) throw InvalidArgument("k must be at least 2");
  if (k == 2) return build_equitable_3star(6);
  return lift_3star(three_star_base(k - 1, seed), seed);
}

ConstructionResult estar_base(int e, int k, std::uint64_t seed) {
  if (k < 2) throw InvalidArgument("k must be at least 2");
  if (k == 2) return build_strong_2chromatic(e);
  return lift_estar(estar_base(e, k - 1, seed), seed);
}

ConstructionResult unique_base(int e, int k, std::uint64_t seed) {
  if (k < 2) throw InvalidArgument("k must be at least 2");
  if (k == 2) return build_unique_2chromatic(e, seed);
  return make_unique_kchromatic(lift_unique_to_equitable(unique_base(e, k - 1, seed)), seed);
}

Vertex target(const Params& p) {
  if (p.n == 0) throw InvalidArgument("--n is required");
  if (p.n > 0xFFFFFFFFull) throw InvalidArgument("--n out of range");
  return static_cast<Vertex>(p.n);
}

void need_k(const Params& p, int lo) {
  if (p.k < lo) throw InvalidArgument("--k must be at least " + std::to_string(lo));
}

ConstructionResult construct(const Params& p) {
  const std::map<std::string, std::function<ConstructionResult()>> by_theorem{
      {"2.1", [&] { return build_equitable_3star(target(p)); }},
      {"2.2", [&] { return extend_3star(three_star_base(p.k, p.seed), target(p)); }},
      {"2.3", [&] { return need_k(p, 3), lift_3star(three_star_base(p.k - 1, p.seed), p.seed); }},
      {"3.1", [&] { return build_strong_2chromatic(p.e); }},
      {"3.2", [&] { return extend_estar(estar_base(p.e, p.k, p.seed), target(p)); }},
      {"3.3", [&] { return need_k(p, 3), lift_estar(estar_base(p.e, p.k - 1, p.seed), p.seed); }},
      {"4.1", [&] { return build_unique_2chromatic(p.e, p.seed); }},
      {"4.2", [&] { return extend_unique(build_unique_2chromatic(p.e, p.seed), target(p)); }},
      {"4.3", [&] { return need_k(p, 3), lift_unique_to_equitable(unique_base(p.e, p.k - 1, p.seed)); }},
      {"4.4",
       [&] {
         return need_k(p, 3), make_unique_kchromatic(lift_unique_to_equitable(unique_base(p.e, p.k - 1, p.seed)), p.seed);
       }},
      {"4.5", [&] { return need_k(p, 3), extend_unique(unique_base(p.e, p.k, p.seed), target(p)); }},
  };
  auto it = by_theorem.find(p.theorem);
  if (it == by_theorem.end()) throw InvalidArgument("unknown --theorem " + p.theorem);
  return it->second();
}

void emit(const std::string& path, const std::string& text) {
  if (path == "-")
    std::cout << text << std::flush;
  else
    write_file(path, text);
}

// A missing input file is a usage error, not a failed check.
std::string slurp(const std::string& path) {
  try {
    return read_file(path);
  } catch (const Error& ex) {
    throw InvalidArgument(ex.what());
  }
}

StarSystem load_system(const std::string& path) { return parse_system(slurp(path)); }

int cmd_construct(const Params& p) {
  auto r = construct(p);
  emit(p.out, serialize_system(r.system));
  std::string col = p.col_out, claims = p.claims_out;
  if (p.out != "-") {
    if (col.empty()) col = p.out + ".col";
    if (claims.empty()) claims = p.out + ".claims.json";
  }
  if (!col.empty()) emit(col, serialize_colouring(r.colouring));
  if (!claims.empty()) emit(claims, serialize_claims(r.claims));
  std::cerr << r.claims.provenance << ": n=" << r.system.n() << " blocks=" << r.system.size() << " k=" << r.claims.k
            << '\n';
  return kOk;
}

int cmd_verify(const std::string& system_path, const std::string& colouring_path) {
  auto sys = load_system(system_path);
  std::optional<Colouring> col;
  if (!colouring_path.empty()) {
    col = parse_colouring(slurp(colouring_path));
    if (col->n() != sys.n()) throw ParseError(0, "colouring and system disagree on n");
  }
  auto dec = validate_decomposition(sys);
  std::cout << "e=" << sys.e() << " n=" << sys.n() << " blocks=" << dec.block_count_actual << " (expected "
            << dec.block_count_expected << ")\n";
  std::cout << "decomposition: " << (dec.ok ? "ok" : "FAILED") << '\n';
  if (!dec.ok) {
    std::cout << "uncovered edges: " << dec.uncovered_count << '\n';
    for (auto [u, v] : dec.uncovered_edges) std::cout << "  " << u << '-' << v << '\n';
    std::cout << "multiply covered edges: " << dec.multiply_covered_count << '\n';
    for (auto [uv, times] : dec.multiply_covered_edges)
      std::cout << "  " << uv.first << '-' << uv.second << " x" << times << '\n';
  }
  bool ok = dec.ok;
  if (col) {
    auto rep = check_colouring(sys, *col);
    std::cout << "colouring: " << (rep.proper ? "proper" : "NOT proper") << ", class sizes";
    for (auto s : rep.class_sizes) std::cout << ' ' << s;
    std::cout << (rep.strongly_equitable ? " (strongly equitable)" : rep.equitable ? " (equitable)" : "") << '\n';
    for (auto b : rep.monochromatic_blocks) std::cout << "  monochromatic block " << b + 1 << '\n';
    ok = ok && rep.proper;
  }
  return ok ? kOk : kFail;
}

SearchBudget budget_from(double seconds, std::uint64_t nodes, int workers) {
  SearchBudget b = default_budget();
  if (seconds > 0) b.max_seconds = seconds;
  if (nodes > 0) b.max_nodes = nodes;
  b.workers = std::max(1, workers);
  return b;
}

json stats_json(const SearchStats& s) { return {{"nodes", s.nodes}, {"seconds", s.seconds}, {"max_depth", s.max_depth}}; }

int cmd_chromatic(const std::string& path, int max_k, const SearchBudget& b, bool strict, const std::string& col_out) {
  auto sys = load_system(path);
  auto cert = chromatic_number(sys, b, max_k);
  json j;
  j["chi"] = cert.exact() ? json(cert.lower) : json(nullptr);
  j["lower"] = cert.lower;
  j["upper"] = cert.upper ? json(cert.upper) : json(nullptr);
  if (cert.below) j["refutation"] = stats_json(*cert.below);
  std::cout << j.dump() << '\n';
  if (!col_out.empty() && cert.colouring) emit(col_out, serialize_colouring(*cert.colouring));
  return !cert.exact() && strict ? kBudget : kOk;
}

int cmd_unique(const std::string& path, int k, const SearchBudget& b, bool strict, const std::string& col_out) {
  auto sys = load_system(path);
  auto u = is_uniquely_k_colourable(sys, k, b);
  json j{{"k", k}, {"verdict", to_string(u.verdict)}, {"search", stats_json(u.stats)}};
  std::cout << j.dump() << '\n';
  if (!col_out.empty() && u.first) {
    std::string text = serialize_colouring(*u.first);
    if (u.second) text += serialize_colouring(*u.second);
    emit(col_out, text);
  }
  return u.verdict == Uniqueness::BudgetExceeded && strict ? kBudget : kOk;
}

std::vector<int> parse_sizes(const std::string& csv) {
  std::vector<int> out;
  std::stringstream s(csv);
  std::string item;
  while (std::getline(s, item, ',')) {
    std::size_t used = 0;
    int v = std::stoi(item, &used);
    if (used != item.size()) throw InvalidArgument("bad size '" + item + "'");
    out.push_back(v);
  }
  if (out.empty()) throw InvalidArgument("--sizes is empty");
  return out;
}

int cmd_baranyai(int m, int e, const std::string& sizes_csv, std::uint64_t seed, bool exact, const std::string& out) {
  std::vector<int> sizes;
  try {
    sizes = parse_sizes(sizes_csv);
  } catch (const std::logic_error&) {
    throw InvalidArgument("--sizes must be a comma-separated list of integers");
  }
  auto p = exact ? partition_by_exact_cover(m, e, sizes) : partition_all_subsets(m, e, sizes, seed);
  if (!verify_partition(p, sizes)) throw Error("partition failed verification");
  emit(out, serialize_partition(p));
  return kOk;
}

int cmd_export(const std::string& path, const std::string& format, const std::string& claims_path,
               const std::string& out) {
  if (format != "json") throw InvalidArgument("only --format json is supported");
  auto sys = load_system(path);
  std::optional<Claims> claims;
  if (!claims_path.empty()) claims = parse_claims(slurp(claims_path));
  emit(out, export_json(sys, claims));
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"e-star systems: constructions, verification and colouring search"};
  app.require_subcommand(1);

  Params p;
  auto* construct_cmd = app.add_subcommand("construct", "build a system and its intended colouring");
  construct_cmd->add_option("--theorem", p.theorem, "construction: 2.1 2.2 2.3 3.1 3.2 3.3 4.1 4.2 4.3 4.4 4.5")
      ->required();
  construct_cmd->add_option("--e", p.e, "star size")->capture_default_str();
  construct_cmd->add_option("--k", p.k, "number of colours")->capture_default_str();
  construct_cmd->add_option("--n", p.n, "target order");
  construct_cmd->add_option("--seed", p.seed, "seed for subset partitions")->capture_default_str();
  construct_cmd->add_option("--out", p.out, "system file ('-' for stdout)")->capture_default_str();
  construct_cmd->add_option("--col-out", p.col_out, "colouring file (default <out>.col)");
  construct_cmd->add_option("--claims-out", p.claims_out, "claims JSON (default <out>.claims.json)");

  std::string system_path, colouring_path, col_out, out = "-", format = "json", claims_path, sizes;
  int max_k = 64, k = 2, workers = 1, m = 0, e = 0;
  double seconds = 0;
  std::uint64_t nodes = 0, seed = 0;
  bool strict = false, exact = false;

  auto* verify_cmd = app.add_subcommand("verify", "check the edge partition (and a colouring)");
  verify_cmd->add_option("system", system_path)->required();
  verify_cmd->add_option("--colouring", colouring_path, "colouring file to check");

  auto add_search = [&](CLI::App* cmd) {
    cmd->add_option("--budget", seconds, "time budget in seconds (default 300 or $STARLIGHT_BUDGET_SECONDS)");
    cmd->add_option("--nodes", nodes, "node budget (default 1e8)");
    cmd->add_option("--workers", workers, "search threads")->capture_default_str();
    cmd->add_flag("--strict", strict, "exit 3 when the budget runs out");
    cmd->add_option("--col-out", col_out, "write the colouring(s) found");
  };
  auto* chromatic_cmd = app.add_subcommand("chromatic", "certify the chromatic number");
  chromatic_cmd->add_option("system", system_path)->required();
  chromatic_cmd->add_option("--max-k", max_k, "largest k tried")->capture_default_str()->check(CLI::Range(1, 64));
  add_search(chromatic_cmd);

  auto* unique_cmd = app.add_subcommand("unique", "decide unique k-colourability");
  unique_cmd->add_option("system", system_path)->required();
  unique_cmd->add_option("--k", k, "number of colours")->required()->check(CLI::Range(1, 64));
  add_search(unique_cmd);

  auto* baranyai_cmd = app.add_subcommand("baranyai", "partition all e-subsets of [m] into near-parallel classes");
  baranyai_cmd->add_option("--m", m)->required();
  baranyai_cmd->add_option("--e", e)->required();
  baranyai_cmd->add_option("--sizes", sizes, "comma-separated class sizes")->required();
  baranyai_cmd->add_option("--seed", seed)->capture_default_str();
  baranyai_cmd->add_flag("--exact-cover", exact, "use the backtracking solver (m <= 16)");
  baranyai_cmd->add_option("--out", out)->capture_default_str();

  auto* export_cmd = app.add_subcommand("export", "convert a system file");
  export_cmd->add_option("system", system_path)->required();
  export_cmd->add_option("--format", format)->capture_default_str();
  export_cmd->add_option("--claims", claims_path, "claims JSON to embed");
  export_cmd->add_option("--out", out)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& ex) {
    int rc = app.exit(ex);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (*construct_cmd) return cmd_construct(p);
    if (*verify_cmd) return cmd_verify(system_path, colouring_path);
    if (*chromatic_cmd) return cmd_chromatic(system_path, max_k, budget_from(seconds, nodes, workers), strict, col_out);
    if (*unique_cmd) return cmd_unique(system_path, k, budget_from(seconds, nodes, workers), strict, col_out);
    if (*baranyai_cmd) return cmd_baranyai(m, e, sizes, seed, exact, out);
    if (*export_cmd) return cmd_export(system_path, format, claims_path, out);
  } catch (const ParseError& ex) {
    std::cerr << "error: " << ex.what() << '\n';
    return kUsage;
  } catch (const InvalidArgument& ex) {
    std::cerr << "error: " << ex.what() << '\n';
    return kUsage;
  } catch (const InadmissibleOrder& ex) {
    std::cerr << "error: " << ex.what() << '\n';
    return kUsage;
  } catch (const UnsupportedCase& ex) {
    std::cerr << "error: " << ex.what() << '\n';
    return kUsage;
  } catch (const InfeasibleRequest& ex) {
    std::cerr << "error: " << ex.what() << '\n';
    return kUsage;
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << '\n';
    return kFail;
  }
  return kUsage;
}
