#include "assembly.hpp"

#include <map>
#include <memory>
#include <mutex>

namespace starlight::detail {

ConstructionResult Assembly::finish(Claims claims) {
  auto dec = validate_decomposition(sys_);
  if (!dec.ok)
    throw Error(claims.provenance + ": output is not an edge partition (" + std::to_string(dec.uncovered_count) +
                " uncovered, " + std::to_string(dec.multiply_covered_count) + " multiply covered, " +
                std::to_string(dec.block_count_actual) + "/" + std::to_string(dec.block_count_expected) + " blocks)");
  std::vector<int> cls(colour_.begin() + 1, colour_.end());
  if (std::any_of(cls.begin(), cls.end(), [&](int c) { return c < 1 || c > k_; }))
    throw Error(claims.provenance + ": intended colouring is incomplete");
  Colouring col(k_, std::move(cls));
  auto rep = check_colouring(sys_, col);
  if (!rep.proper) throw Error(claims.provenance + ": attached colouring is not proper");
  if (col.used_classes() != k_) throw Error(claims.provenance + ": colouring does not use every class");
  claims.k = k_;
  claims.equitable = rep.equitable;
  claims.strongly_equitable = rep.strongly_equitable;
  return {std::move(sys_), std::move(col), std::move(claims)};
}

std::vector<Vertices> mixed_groups(const Assembly& a, std::span<const Vertex> vs) {
  const std::size_t e = static_cast<std::size_t>(a.e());
  if (vs.size() % e) throw UnsupportedCase("vertex set size is not a multiple of e");
  Vertices sorted(vs.begin(), vs.end());
  std::stable_sort(sorted.begin(), sorted.end(), [&](Vertex x, Vertex y) { return a.colour(x) < a.colour(y); });
  const std::size_t g = sorted.size() / e;
  std::vector<Vertices> out(g);
  for (std::size_t i = 0; i < sorted.size(); ++i) out[i % g].push_back(sorted[i]);
  for (auto& grp : out) {
    bool mono = std::all_of(grp.begin(), grp.end(), [&](Vertex v) { return a.colour(v) == a.colour(grp[0]); });
    if (mono) throw UnsupportedCase("cannot split vertex set into groups with two colours each");
    std::sort(grp.begin(), grp.end());
  }
  return out;
}

const ConstructionResult& strong_block(int e) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<ConstructionResult>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[e];
  if (!slot) slot = std::make_unique<ConstructionResult>(build_strong_2chromatic(e));
  return *slot;
}

void complete_pair(Assembly& a, std::span<const Vertex> x1, std::span<const Vertex> x2) {
  const int e = a.e();
  if (x1.size() != static_cast<std::size_t>(e) || x2.size() != static_cast<std::size_t>(e))
    throw InvalidArgument("complete_pair needs two sets of size e");
  Vertices image(2 * static_cast<std::size_t>(e));
  for (std::size_t i = 0; i < x1.size(); ++i) {
    image[2 * i] = x1[i];
    image[2 * i + 1] = x2[i];
  }
  a.embed(strong_block(e).system, image);
}

void complete_on_parts(Assembly& a, const std::vector<Vertices>& parts) {
  if (parts.size() % 2) throw InvalidArgument("complete_on_parts needs an even number of parts");
  std::vector<Vertices> pairs;
  for (std::size_t i = 0; i < parts.size(); i += 2) {
    complete_pair(a, parts[i], parts[i + 1]);
    pairs.push_back(concat({parts[i], parts[i + 1]}));
  }
  for (std::size_t j = 1; j < pairs.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) a.join(pairs[j], pairs[i]);
}

std::vector<Vertices> classes_of(const Colouring& col) { return col.members(); }

}  // namespace starlight::detail
