#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "starlight/core.hpp"

namespace starlight {

struct SearchBudget {
  std::uint64_t max_nodes = 100'000'000;
  double max_seconds = 300.0;
  int workers = 1;
};

struct SearchStats {
  std::uint64_t nodes = 0;  // branching decisions taken
  std::size_t max_depth = 0;
  double seconds = 0.0;
};

enum class Verdict { Colourable, NotColourable, BudgetExceeded };

struct SearchOutcome {
  Verdict verdict = Verdict::BudgetExceeded;
  std::optional<Colouring> colouring;  // set iff Colourable
  SearchStats stats;                    // for NotColourable this is the exhaustion record
};

enum class Uniqueness { Unique, Multiple, NotColourable, BudgetExceeded };

struct UniquenessOutcome {
  Uniqueness verdict = Uniqueness::BudgetExceeded;
  std::optional<Colouring> first;   // canonical representative (Unique, Multiple)
  std::optional<Colouring> second;  // orbit-distinct witness (Multiple)
  SearchStats stats;
};

struct ChromaticCertificate {
  int lower = 1;  // not colourable with fewer than `lower` colours
  int upper = 0;  // colourable with `upper` colours (0: none found up to max_k)
  std::optional<Colouring> colouring;
  std::optional<SearchStats> below;  // exhaustion record at lower-1 colours
  bool exact() const { return upper != 0 && lower == upper; }
};

const char* to_string(Verdict v);
const char* to_string(Uniqueness u);

// Reads STARLIGHT_BUDGET_SECONDS if set.
SearchBudget default_budget();

// Backtracking with not-all-equal propagation, first-use colour symmetry
// breaking and conflict-directed backjumping. Branching follows weighted
// block degree (blocks that caused conflicts weigh more), starting from
// descending block membership.
SearchOutcome find_colouring(const StarSystem& sys, int k, const SearchBudget& budget = {});

ChromaticCertificate chromatic_number(const StarSystem& sys, const SearchBudget& budget = {}, int max_k = 64);

// Enumerates colourings in canonical form (class labels first used in
// increasing order) and stops at the second one.
UniquenessOutcome is_uniquely_k_colourable(const StarSystem& sys, int k, const SearchBudget& budget = {});

// Per-vertex candidate colour sets as bitmasks (bit c-1 <=> colour c), k <= 64.
class PartialColouring {
 public:
  PartialColouring() = default;
  PartialColouring(int k, Vertex n);  // everything open

  int k() const { return k_; }
  Vertex n() const { return static_cast<Vertex>(cand_.size()); }
  std::uint64_t candidates(Vertex v) const { return cand_[v - 1]; }
  void restrict(Vertex v, std::uint64_t mask) { cand_[v - 1] &= mask; }
  void fix(Vertex v, int c) { cand_[v - 1] = std::uint64_t{1} << (c - 1); }
  bool decided(Vertex v) const;
  int colour(Vertex v) const;  // 0 unless decided
  bool total() const;
  Colouring to_colouring() const;  // requires total()

  friend bool operator==(const PartialColouring&, const PartialColouring&) = default;

 private:
  int k_ = 0;
  std::vector<std::uint64_t> cand_;
};

struct Propagation {
  bool conflict = false;
  std::size_t conflict_block = 0;
  PartialColouring result;  // the fixpoint (or the state at the conflict)
};

// Fixpoint of: when every vertex of a block but one is decided with one
// shared colour c, drop c from the last vertex. Sweeps the block list, so no
// incidence index is built and it scales to very large systems.
Propagation propagate_forced(const StarSystem& sys, PartialColouring partial);

}  // namespace starlight
