#include "starlight/core.hpp"

#include <algorithm>
#include <numeric>

namespace starlight {

bool is_admissible(int e, std::uint64_t n) {
  if (e < 1) return false;
  if (n < 2 * static_cast<std::uint64_t>(e)) return false;
  return (n * (n - 1) / 2) % static_cast<std::uint64_t>(e) == 0;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::size_t expected_block_count(int e, Vertex n) {
  std::uint64_t edges = std::uint64_t{n} * (n ? n - 1 : 0) / 2;
  return static_cast<std::size_t>(edges / static_cast<std::uint64_t>(e));
}

StarSystem::StarSystem(int e, Vertex n) : e_(e), n_(n) {
  if (e < 1) throw InvalidArgument("star size e must be >= 1");
}

void StarSystem::add(Vertex center, std::span<const Vertex> leaves) {
  if (leaves.size() != static_cast<std::size_t>(e_))
    throw InvalidArgument("star must have exactly e leaves");
  if (center < 1 || center > n_) throw InvalidArgument("center out of range");
  std::size_t at = data_.size();
  data_.push_back(center);
  data_.insert(data_.end(), leaves.begin(), leaves.end());
  auto first = data_.begin() + static_cast<std::ptrdiff_t>(at + 1);
  std::sort(first, data_.end());
  for (auto it = first; it != data_.end(); ++it) {
    bool bad = *it < 1 || *it > n_ || *it == center || (it != first && *it == *(it - 1));
    if (bad) {
      data_.resize(at);
      throw InvalidArgument("star leaves must be distinct ids in [1, n] other than the center");
    }
  }
}

Star StarSystem::star(std::size_t i) const {
  auto b = block(i);
  return {b.center, {b.leaves.begin(), b.leaves.end()}};
}

std::vector<Star> StarSystem::stars() const {
  std::vector<Star> out;
  out.reserve(size());
  for (std::size_t i = 0; i < size(); ++i) out.push_back(star(i));
  return out;
}

Colouring::Colouring(int k, Vertex n, int fill) : k_(k), assign_(n, fill) {
  if (k < 1) throw InvalidArgument("colouring needs k >= 1");
  if (fill < 1 || fill > k) throw InvalidArgument("class index out of range");
}

Colouring::Colouring(int k, std::vector<int> classes) : k_(k), assign_(std::move(classes)) {
  if (k < 1) throw InvalidArgument("colouring needs k >= 1");
  for (int c : assign_)
    if (c < 1 || c > k) throw InvalidArgument("class index out of range");
}

void Colouring::set(Vertex v, int c) {
  if (v < 1 || v > n()) throw InvalidArgument("vertex out of range");
  if (c < 1 || c > k_) throw InvalidArgument("class index out of range");
  assign_[v - 1] = c;
}

std::vector<std::size_t> Colouring::class_sizes() const {
  std::vector<std::size_t> s(static_cast<std::size_t>(k_), 0);
  for (int c : assign_) ++s[static_cast<std::size_t>(c - 1)];
  return s;
}

std::vector<std::vector<Vertex>> Colouring::members() const {
  std::vector<std::vector<Vertex>> m(static_cast<std::size_t>(k_));
  for (Vertex v = 1; v <= n(); ++v) m[static_cast<std::size_t>((*this)[v] - 1)].push_back(v);
  return m;
}

int Colouring::used_classes() const {
  auto s = class_sizes();
  return static_cast<int>(std::count_if(s.begin(), s.end(), [](std::size_t x) { return x > 0; }));
}

ColouringReport check_colouring(const StarSystem& sys, const Colouring& col) {
  if (col.n() < sys.n()) throw InvalidArgument("colouring does not cover every vertex");
  ColouringReport r;
  for (std::size_t i = 0; i < sys.size(); ++i) {
    auto b = sys.block(i);
    int c = col[b.center];
    bool mono = std::all_of(b.leaves.begin(), b.leaves.end(), [&](Vertex v) { return col[v] == c; });
    if (mono) r.monochromatic_blocks.push_back(i);
  }
  r.proper = r.monochromatic_blocks.empty();
  r.class_sizes = col.class_sizes();
  auto [lo, hi] = std::minmax_element(r.class_sizes.begin(), r.class_sizes.end());
  r.equitable = *hi - *lo <= 1;
  r.strongly_equitable = *hi == *lo;
  return r;
}

namespace {

// Index of pair a<b (0-based) in row-major upper-triangle order.
inline std::uint64_t pair_index(std::uint64_t n, std::uint64_t a, std::uint64_t b) {
  return a * (2 * n - a - 1) / 2 + (b - a - 1);
}

struct PairLister {
  DecompositionReport& r;
  std::size_t max_listed;
  void count(Vertex u, Vertex v, std::uint32_t c) {
    if (c == 0) {
      if (r.uncovered_edges.size() < max_listed) r.uncovered_edges.emplace_back(u, v);
      ++r.uncovered_count;
    } else if (c > 1) {
      if (r.multiply_covered_edges.size() < max_listed) r.multiply_covered_edges.push_back({{u, v}, c});
      ++r.multiply_covered_count;
    }
  }
};

// Counts, for 0-based rows [row_lo, row_hi), how often each pair {a<b} is hit.
// Saturates at 255 which is plenty to distinguish 0 / 1 / many.
void count_rows(const StarSystem& sys, std::uint64_t row_lo, std::uint64_t row_hi, std::vector<std::uint8_t>& cnt) {
  const std::uint64_t n = sys.n();
  const std::uint64_t base = pair_index(n, row_lo, row_lo + 1);
  std::fill(cnt.begin(), cnt.end(), 0);
  auto raw = sys.raw();
  const std::size_t w = static_cast<std::size_t>(sys.e()) + 1;
  for (std::size_t i = 0; i < raw.size(); i += w) {
    std::uint64_t c = raw[i] - 1;
    for (std::size_t j = 1; j < w; ++j) {
      std::uint64_t l = raw[i + j] - 1;
      std::uint64_t a = std::min(c, l), b = std::max(c, l);
      if (a < row_lo || a >= row_hi) continue;
      auto& slot = cnt[pair_index(n, a, b) - base];
      if (slot != 255) ++slot;
    }
  }
}

void scan_rows(const StarSystem& sys, std::uint64_t row_lo, std::uint64_t row_hi, const std::vector<std::uint8_t>& cnt,
               PairLister& out) {
  const std::uint64_t n = sys.n();
  std::size_t idx = 0;
  for (std::uint64_t a = row_lo; a < row_hi; ++a)
    for (std::uint64_t b = a + 1; b < n; ++b)
      out.count(static_cast<Vertex>(a + 1), static_cast<Vertex>(b + 1), cnt[idx++]);
}

}  // namespace

DecompositionReport validate_decomposition(const StarSystem& sys, const ValidateOptions& opt) {
  DecompositionReport r;
  const std::uint64_t n = sys.n();
  r.block_count_expected = expected_block_count(sys.e(), sys.n());
  r.block_count_actual = sys.size();
  PairLister out{r, opt.max_listed};
  if (n < 2) {
    r.ok = r.block_count_actual == r.block_count_expected;
    return r;
  }

  if (n <= opt.streaming_threshold) {
    std::vector<std::uint8_t> cnt(n * (n - 1) / 2);
    count_rows(sys, 0, n - 1, cnt);
    scan_rows(sys, 0, n - 1, cnt, out);
  } else {
    r.streamed = true;
    // Pass 1: a decomposition gives every vertex degree n-1. A mismatch is
    // already fatal, but we still run pass 2 so the report lists the edges.
    std::vector<std::uint64_t> deg(n, 0);
    auto raw = sys.raw();
    const std::size_t w = static_cast<std::size_t>(sys.e()) + 1;
    for (std::size_t i = 0; i < raw.size(); i += w) {
      deg[raw[i] - 1] += w - 1;
      for (std::size_t j = 1; j < w; ++j) ++deg[raw[i + j] - 1];
    }
    // Pass 2: exact pair counts, a band of rows at a time.
    std::vector<std::uint8_t> cnt;
    std::uint64_t row = 0;
    while (row < n - 1) {
      std::uint64_t end = row, pairs = 0;
      while (end < n - 1 && (pairs == 0 || pairs + (n - 1 - end) <= opt.chunk_pairs)) {
        pairs += n - 1 - end;
        ++end;
      }
      cnt.resize(pairs);
      count_rows(sys, row, end, cnt);
      scan_rows(sys, row, end, cnt, out);
      row = end;
    }
  }
  r.ok = r.uncovered_count == 0 && r.multiply_covered_count == 0 && r.block_count_actual == r.block_count_expected;
  return r;
}

StarSystem relabel(const StarSystem& sys, std::span<const Vertex> f) {
  if (f.size() != sys.n()) throw InvalidArgument("relabelling must have one image per vertex");
  std::vector<char> seen(sys.n() + 1, 0);
  for (Vertex x : f) {
    if (x < 1 || x > sys.n() || seen[x]) throw InvalidArgument("relabelling is not a bijection");
    seen[x] = 1;
  }
  StarSystem out(sys.e(), sys.n());
  out.reserve(sys.size());
  std::vector<Vertex> leaves(static_cast<std::size_t>(sys.e()));
  for (std::size_t i = 0; i < sys.size(); ++i) {
    auto b = sys.block(i);
    for (std::size_t j = 0; j < leaves.size(); ++j) leaves[j] = f[b.leaves[j] - 1];
    out.add(f[b.center - 1], leaves);
  }
  return out;
}

Vertex copy_id(Vertex n_base, std::uint32_t i, Vertex v, Vertex offset) {
  return offset + (i - 1) * n_base + v;
}

StarSystem disjoint_copy(const StarSystem& sys, std::uint32_t i, Vertex offset) {
  if (i < 1) throw InvalidArgument("copy index starts at 1");
  const Vertex n = sys.n();
  StarSystem out(sys.e(), copy_id(n, i, n, offset));
  out.reserve(sys.size());
  std::vector<Vertex> leaves(static_cast<std::size_t>(sys.e()));
  for (std::size_t b = 0; b < sys.size(); ++b) {
    auto s = sys.block(b);
    for (std::size_t j = 0; j < leaves.size(); ++j) leaves[j] = copy_id(n, i, s.leaves[j], offset);
    out.add(copy_id(n, i, s.center, offset), leaves);
  }
  return out;
}

}  // namespace starlight
