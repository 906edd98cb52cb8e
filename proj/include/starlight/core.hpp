#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace starlight {

using Vertex = std::uint32_t;  // 1-based everywhere in the public API

// Error taxonomy shared by every module.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct InvalidArgument : Error {
  using Error::Error;
};
struct InadmissibleOrder : Error {
  using Error::Error;
};
struct UnsupportedCase : Error {
  using Error::Error;
};
struct InfeasibleRequest : Error {
  using Error::Error;
};
struct SearchExhausted : Error {
  using Error::Error;
};

// e | n(n-1)/2 and n >= 2e.
bool is_admissible(int e, std::uint64_t n);

std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

// Non-owning view of one block {center; leaves...}.
struct StarView {
  Vertex center;
  std::span<const Vertex> leaves;
};

// Owning block, handy for literals and tests.
struct Star {
  Vertex center = 0;
  std::vector<Vertex> leaves;
  friend bool operator==(const Star&, const Star&) = default;
};

// A list of e-stars on [1, n]. Blocks live in one flat buffer of (e+1)-tuples
// (center first, leaves ascending) so that systems with tens of millions of
// blocks stay compact.
class StarSystem {
 public:
  StarSystem() = default;
  StarSystem(int e, Vertex n);

  int e() const { return e_; }
  Vertex n() const { return n_; }
  std::size_t size() const { return e_ ? data_.size() / width() : 0; }
  bool empty() const { return data_.empty(); }

  StarView block(std::size_t i) const {
    const Vertex* p = data_.data() + i * width();
    return {p[0], std::span<const Vertex>(p + 1, static_cast<std::size_t>(e_))};
  }
  Star star(std::size_t i) const;
  std::vector<Star> stars() const;

  // Leaves are sorted on insertion; throws InvalidArgument on a malformed star.
  void add(Vertex center, std::span<const Vertex> leaves);
  void add(Vertex center, std::initializer_list<Vertex> leaves) {
    add(center, std::span<const Vertex>(leaves.begin(), leaves.size()));
  }
  void add(const Star& s) { add(s.center, s.leaves); }
  void reserve(std::size_t blocks) { data_.reserve(blocks * width()); }

  // Raw (e+1)-tuples, center first.
  std::span<const Vertex> raw() const { return data_; }

  friend bool operator==(const StarSystem&, const StarSystem&) = default;

 private:
  std::size_t width() const { return static_cast<std::size_t>(e_) + 1; }
  int e_ = 0;
  Vertex n_ = 0;
  std::vector<Vertex> data_;
};

std::size_t expected_block_count(int e, Vertex n);

// Total map vertex -> class in [1, k]; empty classes are allowed.
class Colouring {
 public:
  Colouring() = default;
  Colouring(int k, Vertex n, int fill = 1);
  Colouring(int k, std::vector<int> classes);  // classes[v-1] is the class of v

  int k() const { return k_; }
  Vertex n() const { return static_cast<Vertex>(assign_.size()); }
  int operator[](Vertex v) const { return assign_[v - 1]; }
  void set(Vertex v, int c);
  const std::vector<int>& classes() const { return assign_; }

  std::vector<std::size_t> class_sizes() const;
  std::vector<std::vector<Vertex>> members() const;  // members()[c-1], ascending
  int used_classes() const;

  friend bool operator==(const Colouring&, const Colouring&) = default;

 private:
  int k_ = 0;
  std::vector<int> assign_;
};

struct ColouringReport {
  bool proper = false;
  std::vector<std::size_t> monochromatic_blocks;
  std::vector<std::size_t> class_sizes;
  bool equitable = false;
  bool strongly_equitable = false;
};

struct DecompositionReport {
  bool ok = false;
  std::vector<std::pair<Vertex, Vertex>> uncovered_edges;
  std::vector<std::pair<std::pair<Vertex, Vertex>, std::uint32_t>> multiply_covered_edges;
  std::uint64_t uncovered_count = 0;  // lists are truncated at max_listed, counts are not
  std::uint64_t multiply_covered_count = 0;
  std::size_t block_count_expected = 0;
  std::size_t block_count_actual = 0;
  bool streamed = false;
};

struct ValidateOptions {
  Vertex streaming_threshold = 5000;  // above this n, use the chunked two-pass count
  std::size_t max_listed = 1000;
  std::size_t chunk_pairs = std::size_t{1} << 26;  // pair slots per streaming chunk
};

DecompositionReport validate_decomposition(const StarSystem& sys, const ValidateOptions& opt = {});
ColouringReport check_colouring(const StarSystem& sys, const Colouring& col);

// f[v-1] is the image of v; throws InvalidArgument unless f is a bijection of [1, n].
StarSystem relabel(const StarSystem& sys, std::span<const Vertex> f);

// Copy number i (i >= 1) of sys: vertex v becomes offset + (i-1)*n + v.
StarSystem disjoint_copy(const StarSystem& sys, std::uint32_t i, Vertex offset = 0);
Vertex copy_id(Vertex n_base, std::uint32_t i, Vertex v, Vertex offset = 0);

}  // namespace starlight
