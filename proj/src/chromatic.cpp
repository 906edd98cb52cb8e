#include "starlight/chromatic.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <cstdlib>
#include <iterator>
#include <numeric>
#include <string>
#include <thread>

namespace starlight {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Colourable: return "Colourable";
    case Verdict::NotColourable: return "NotColourable";
    case Verdict::BudgetExceeded: return "BudgetExceeded";
  }
  return "?";
}

const char* to_string(Uniqueness u) {
  switch (u) {
    case Uniqueness::Unique: return "Unique";
    case Uniqueness::Multiple: return "Multiple";
    case Uniqueness::NotColourable: return "NotColourable";
    case Uniqueness::BudgetExceeded: return "BudgetExceeded";
  }
  return "?";
}

SearchBudget default_budget() {
  SearchBudget b;
  if (const char* s = std::getenv("STARLIGHT_BUDGET_SECONDS")) {
    try {
      double v = std::stod(s);
      if (v > 0) b.max_seconds = v;
    } catch (const std::exception&) {
    }
  }
  return b;
}

namespace {

using Clock = std::chrono::steady_clock;
using Decision = std::pair<Vertex, int>;

struct BudgetHit {};

struct Shared {
  const SearchBudget& budget;
  Clock::time_point start = Clock::now();
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<bool> out_of_budget{false};

  double elapsed() const { return std::chrono::duration<double>(Clock::now() - start).count(); }
  void tick() {
    std::uint64_t n = nodes.fetch_add(1, std::memory_order_relaxed) + 1;
    if (out_of_budget.load(std::memory_order_relaxed)) throw BudgetHit{};
    if (n > budget.max_nodes || ((n & 1023) == 0 && elapsed() > budget.max_seconds)) {
      out_of_budget = true;
      throw BudgetHit{};
    }
  }
};

// Not-all-equal search state for one worker.
class Engine {
 public:
  Engine(const StarSystem& sys, int k) : sys_(sys), k_(k), n_(sys.n()), w_(static_cast<std::size_t>(sys.e()) + 1) {
    std::vector<std::uint32_t> deg(n_ + 1, 0);
    auto raw = sys.raw();
    for (Vertex v : raw) ++deg[v];
    start_.assign(n_ + 2, 0);
    for (Vertex v = 1; v <= n_; ++v) start_[v + 1] = start_[v] + deg[v];
    inc_.resize(raw.size());
    auto fill = start_;
    for (std::size_t i = 0; i < raw.size(); ++i) inc_[fill[raw[i]]++] = static_cast<std::uint32_t>(i / w_);

    order_.resize(n_);
    std::iota(order_.begin(), order_.end(), Vertex{1});
    std::stable_sort(order_.begin(), order_.end(), [&](Vertex a, Vertex b) { return deg[a] > deg[b]; });
    deg_.assign(deg.begin(), deg.end());

    full_ = k >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << k) - 1;
    dom_.assign(n_ + 1, full_);
    val_.assign(n_ + 1, 0);
    level_.assign(n_ + 1, 0);
    decision_.assign(n_ + 1, 0);
    reason_.assign((std::size_t{n_} + 1) * static_cast<std::size_t>(k), 0);
    stamp_.assign(n_ + 1, 0);
    cnt_.assign(sys.size(), 0);
    col_.assign(sys.size(), 0);
    same_.assign(sys.size(), 0);
    reset_weights();
  }

  // Enumerate canonical colourings below `prefix`, calling on_solution for
  // each; on_solution returns false to stop. Returns false if stopped early.
  template <class F>
  bool run(const std::vector<Decision>& prefix, Shared& shared, F&& on_solution) {
    shared_ = &shared;
    reset_weights();
    const Mark root = save();
    bool go_on = true;
    try {
      bool ok = true;
      level_now_ = 0;
      for (auto [v, c] : prefix) {
        ++level_now_;
        if (val_[v] == c) continue;
        if (val_[v] != 0 || !(dom_[v] & bit(c)) || !assign_and_propagate(v, c)) {
          ok = false;
          break;
        }
      }
      if (ok) go_on = !dfs(static_cast<std::uint32_t>(prefix.size()), on_solution).stop;
    } catch (...) {
      restore(root);
      throw;
    }
    restore(root);
    return go_on;
  }

  // Breadth-limited expansion used to split work: returns decision prefixes
  // of open subtrees at depth `cut`, in DFS order.
  void split(std::vector<Decision>& path, std::size_t cut, std::vector<std::vector<Decision>>& out) {
    Vertex v = next_vertex();
    if (path.size() == cut || v == 0) {
      out.push_back(path);
      return;
    }
    level_now_ = static_cast<std::uint32_t>(path.size()) + 1;
    for (int c : choices(v)) {
      auto mark = save();
      if (assign_and_propagate(v, c)) {
        path.push_back({v, c});
        split(path, cut, out);
        path.pop_back();
      }
      restore(mark);
    }
  }

  Colouring current() const {
    std::vector<int> a(val_.begin() + 1, val_.end());
    return Colouring(k_, std::move(a));
  }

  std::size_t max_depth = 0;

 private:
  static std::uint64_t bit(int c) { return std::uint64_t{1} << (c - 1); }

  struct Mark {
    std::size_t assigned, trail;
    int max_used;
  };
  Mark save() const { return {assigned_.size(), trail_.size(), max_used_}; }
  void restore(const Mark& m) {
    while (assigned_.size() > m.assigned) {
      Vertex v = assigned_.back();
      assigned_.pop_back();
      int c = val_[v];
      for (std::size_t i = start_[v]; i < start_[v + 1]; ++i) {
        std::uint32_t b = inc_[i];
        const bool was_mixed = same_[b] != cnt_[b];
        if (col_[b] == c) --same_[b];
        --cnt_[b];
        if (was_mixed && same_[b] == cnt_[b]) add_score(b, weight_[b]);
      }
      val_[v] = 0;
    }
    while (trail_.size() > m.trail) {
      dom_[trail_.back().first] = trail_.back().second;
      trail_.pop_back();
    }
    max_used_ = m.max_used;
    queue_.clear();
  }

  void set_dom(Vertex v, std::uint64_t d) {
    trail_.push_back({v, dom_[v]});
    dom_[v] = d;
  }

  // Assign (as the decision of the current level), then run the NAE unit rule
  // to a fixpoint. False on conflict.
  bool assign_and_propagate(Vertex v, int c) {
    queue_.clear();
    decision_[v] = 1;
    if (!assign(v, c)) return false;
    while (!queue_.empty()) {
      Vertex w = queue_.back();
      queue_.pop_back();
      if (val_[w] != 0) continue;
      decision_[w] = 0;
      if (!assign(w, std::countr_zero(dom_[w]) + 1)) return false;
    }
    return true;
  }

  bool assign(Vertex v, int c) {
    if (dom_[v] != bit(c)) set_dom(v, bit(c));
    val_[v] = c;
    level_[v] = level_now_;
    assigned_.push_back(v);
    max_used_ = std::max(max_used_, c);
    for (std::size_t i = start_[v]; i < start_[v + 1]; ++i) {
      std::uint32_t b = inc_[i];
      if (cnt_[b]++ == 0) col_[b] = c;
      if (col_[b] == c)
        ++same_[b];
      else if (same_[b] + 1 == cnt_[b])  // just became mixed
        add_score(b, -weight_[b]);
    }
    for (std::size_t i = start_[v]; i < start_[v + 1]; ++i) {
      std::uint32_t b = inc_[i];
      if (same_[b] != cnt_[b]) continue;  // already mixed
      if (cnt_[b] == w_) {                // monochromatic block
        conflict_block_ = b;
        conflict_vertex_ = 0;
        return false;
      }
      if (cnt_[b] + 1 != w_) continue;
      const Vertex* p = sys_.raw().data() + std::size_t{b} * w_;
      Vertex last = 0;
      for (std::size_t j = 0; j < w_; ++j)
        if (val_[p[j]] == 0) last = p[j];
      std::uint64_t d = dom_[last];
      if (!(d & bit(col_[b]))) continue;
      d &= ~bit(col_[b]);
      set_dom(last, d);
      reason_[std::size_t{last} * static_cast<std::size_t>(k_) + static_cast<std::size_t>(col_[b] - 1)] = b;
      if (d == 0) {
        conflict_vertex_ = last;
        return false;
      }
      if (std::has_single_bit(d)) queue_.push_back(last);
    }
    return true;
  }

  // Weighted degree: the open vertex in the most (conflict-weighted) blocks
  // that are not yet two-coloured. Ties go to the static order, which with
  // unit weights is descending block membership.
  Vertex next_vertex() const {
    Vertex best = 0;
    std::int64_t top = -1;
    for (Vertex v : order_)
      if (val_[v] == 0 && score_[v] > top) {
        top = score_[v];
        best = v;
      }
    return best;
  }

  void reset_weights() {
    weight_.assign(sys_.size(), 1);
    score_.assign(n_ + 1, 0);
    for (Vertex v = 1; v <= n_; ++v) score_[v] = deg_[v];
    for (std::size_t b = 0; b < cnt_.size(); ++b)
      if (same_[b] != cnt_[b]) add_score(static_cast<std::uint32_t>(b), -1);
  }
  void add_score(std::uint32_t b, std::int64_t delta) {
    const Vertex* p = sys_.raw().data() + std::size_t{b} * w_;
    for (std::size_t j = 0; j < w_; ++j) score_[p[j]] += delta;
  }
  void bump(std::uint32_t b) {
    ++weight_[b];
    if (same_[b] == cnt_[b]) add_score(b, 1);
  }

  // Candidate colours with first-use symmetry breaking: unused colours are
  // interchangeable (propagation only ever removes used ones), so try one.
  std::vector<int> choices(Vertex v) const {
    std::vector<int> out;
    for (int c = 1; c <= std::min(k_, max_used_ + 1); ++c)
      if (dom_[v] & bit(c)) out.push_back(c);
    return out;
  }

  // Decision levels an assignment or a removal depends on, found by walking
  // the reason blocks back to decisions.
  using Levels = std::vector<std::uint32_t>;

  void blame_vertex(Vertex u) {
    if (stamp_[u] == epoch_) return;
    stamp_[u] = epoch_;
    walk_.push_back(u);
  }
  void blame_removal(Vertex u, int c) {
    const std::uint32_t b = reason_[std::size_t{u} * static_cast<std::size_t>(k_) + static_cast<std::size_t>(c - 1)];
    const Vertex* p = sys_.raw().data() + std::size_t{b} * w_;
    for (std::size_t j = 0; j < w_; ++j)
      if (p[j] != u) blame_vertex(p[j]);
  }
  Levels close_blame() {
    Levels out;
    while (!walk_.empty()) {
      Vertex u = walk_.back();
      walk_.pop_back();
      if (decision_[u]) {
        out.push_back(level_[u]);
        continue;
      }
      for (int c = 1; c <= k_; ++c)
        if (c != val_[u]) blame_removal(u, c);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }
  void new_epoch() {
    if (++epoch_ == 0) {
      std::fill(stamp_.begin(), stamp_.end(), 0);
      epoch_ = 1;
    }
    walk_.clear();
  }
  Levels conflict_levels() {
    new_epoch();
    if (conflict_vertex_ != 0) {
      stamp_[conflict_vertex_] = epoch_;
      for (int c = 1; c <= k_; ++c) {
        bump(reason_[std::size_t{conflict_vertex_} * static_cast<std::size_t>(k_) + static_cast<std::size_t>(c - 1)]);
        blame_removal(conflict_vertex_, c);
      }
    } else {
      bump(conflict_block_);
      const Vertex* p = sys_.raw().data() + std::size_t{conflict_block_} * w_;
      for (std::size_t j = 0; j < w_; ++j) blame_vertex(p[j]);
    }
    return close_blame();
  }
  // Colours taken out of v's domain before branching on it.
  Levels pruned_levels(Vertex v) {
    new_epoch();
    stamp_[v] = epoch_;
    for (int c = 1; c <= std::min(k_, max_used_ + 1); ++c)
      if (!(dom_[v] & bit(c))) blame_removal(v, c);
    return close_blame();
  }

  static void merge_into(Levels& acc, const Levels& add, std::uint32_t drop) {
    Levels out;
    out.reserve(acc.size() + add.size());
    std::set_union(acc.begin(), acc.end(), add.begin(), add.end(), std::back_inserter(out));
    out.erase(std::remove(out.begin(), out.end(), drop), out.end());
    acc.swap(out);
  }

  // Outcome of a subtree: stopped by the callback, or exhausted. When
  // exhausted without a solution, `levels` is a set of decision levels whose
  // assignments alone rule the subtree out; the search backjumps over any
  // level not in it. After a solution no jump is allowed (`all`).
  struct Exhausted {
    bool stop = false;
    bool all = false;
    Levels levels;
  };

  template <class F>
  Exhausted dfs(std::uint32_t depth, F& on_solution) {
    max_depth = std::max<std::size_t>(max_depth, depth);
    Vertex v = next_vertex();
    if (v == 0) {
      Exhausted r;
      r.stop = !on_solution(current());
      r.all = true;
      return r;
    }
    const std::uint32_t here = depth + 1;
    Exhausted acc;
    acc.levels = pruned_levels(v);
    for (int c : choices(v)) {
      shared_->tick();
      auto mark = save();
      level_now_ = here;
      Exhausted sub;
      if (assign_and_propagate(v, c)) {
        sub = dfs(here, on_solution);
        if (sub.stop) {
          restore(mark);
          return sub;
        }
      } else {
        sub.levels = conflict_levels();
      }
      restore(mark);
      if (sub.all) {
        acc.all = true;
        continue;
      }
      if (!std::binary_search(sub.levels.begin(), sub.levels.end(), here)) {
        // The failure does not involve v, so its other values fail too.
        if (acc.all) break;
        return sub;
      }
      merge_into(acc.levels, sub.levels, here);
    }
    if (acc.all) acc.levels.clear();
    return acc;
  }

  const StarSystem& sys_;
  int k_;
  Vertex n_;
  std::size_t w_;
  std::vector<std::size_t> start_;
  std::vector<std::uint32_t> inc_;
  std::vector<Vertex> order_;
  std::uint64_t full_ = 0;
  std::vector<std::uint64_t> dom_;
  std::vector<int> val_;
  std::vector<std::uint32_t> cnt_;
  std::vector<int> col_;
  std::vector<std::uint32_t> same_;
  std::vector<Vertex> assigned_;
  std::vector<std::pair<Vertex, std::uint64_t>> trail_;
  std::vector<Vertex> queue_;
  int max_used_ = 0;
  Shared* shared_ = nullptr;
  // Backjumping bookkeeping.
  std::uint32_t level_now_ = 0;
  std::vector<std::uint32_t> level_;
  std::vector<char> decision_;
  std::vector<std::uint32_t> reason_;  // [v*k + c-1]: block that removed colour c from v
  std::vector<std::uint32_t> stamp_;
  std::uint32_t epoch_ = 0;
  std::vector<Vertex> walk_;
  std::uint32_t conflict_block_ = 0;
  Vertex conflict_vertex_ = 0;
  // Branching weights (reset per run so results do not depend on what else
  // this engine searched before).
  std::vector<std::uint32_t> deg_;
  std::vector<std::int64_t> weight_;
  std::vector<std::int64_t> score_;
};

struct Enumeration {
  std::vector<Colouring> solutions;
  bool budget_hit = false;
  SearchStats stats;
};

// Collect up to `want` canonical colourings in DFS order. The top of the
// tree is always cut into the same prefixes and every prefix starts from
// fresh branching weights; with several workers the per-prefix results are
// concatenated in prefix order, so the answer does not depend on the number
// of workers or on scheduling.
constexpr std::size_t kSplitDepth = 4;

Enumeration enumerate(const StarSystem& sys, int k, const SearchBudget& budget, std::size_t want) {
  if (k < 1 || k > 64) throw InvalidArgument("k must be in [1, 64]");
  Shared shared{budget};
  Enumeration out;
  auto finish = [&] {
    out.stats.nodes = shared.nodes.load();
    out.stats.seconds = shared.elapsed();
  };

  std::vector<std::vector<Decision>> prefixes;
  {
    Engine eng(sys, k);
    std::vector<Decision> path;
    eng.split(path, kSplitDepth, prefixes);
  }

  if (budget.workers <= 1) {
    Engine eng(sys, k);
    for (const auto& prefix : prefixes) {
      try {
        eng.run(prefix, shared, [&](Colouring c) {
          out.solutions.push_back(std::move(c));
          return out.solutions.size() < want;
        });
      } catch (const BudgetHit&) {
        out.budget_hit = true;
      }
      out.stats.max_depth = std::max(out.stats.max_depth, eng.max_depth);
      if (out.budget_hit || out.solutions.size() >= want) break;
    }
    finish();
    return out;
  }

  std::vector<std::vector<Colouring>> found(prefixes.size());
  std::vector<char> hit(prefixes.size(), 0);
  std::vector<std::size_t> depth(prefixes.size(), 0);
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> first_found{prefixes.size()};  // lowest index holding a solution (want==1)
  auto worker = [&] {
    Engine local(sys, k);
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= prefixes.size()) return;
      if (want == 1 && i > first_found.load()) continue;
      local.max_depth = 0;
      try {
        local.run(prefixes[i], shared, [&](Colouring c) {
          found[i].push_back(std::move(c));
          return found[i].size() < want;
        });
      } catch (const BudgetHit&) {
        hit[i] = 1;
      }
      depth[i] = local.max_depth;
      if (!found[i].empty()) {
        std::size_t cur = first_found.load();
        while (i < cur && !first_found.compare_exchange_weak(cur, i)) {
        }
      }
    }
  };
  std::vector<std::thread> pool;
  for (int t = 0; t < budget.workers; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();

  // Deterministic reduction: walk prefixes in order. A budget hit only
  // matters if it happened before `want` solutions were secured.
  for (std::size_t i = 0; i < prefixes.size() && out.solutions.size() < want; ++i) {
    out.stats.max_depth = std::max(out.stats.max_depth, depth[i]);
    for (auto& c : found[i])
      if (out.solutions.size() < want) out.solutions.push_back(std::move(c));
    if (hit[i] && out.solutions.size() < want) {
      out.budget_hit = true;
      break;
    }
    if (want == 1 && i > first_found.load()) break;
  }
  if (shared.out_of_budget && out.solutions.size() < want) out.budget_hit = true;
  finish();
  return out;
}

}  // namespace

SearchOutcome find_colouring(const StarSystem& sys, int k, const SearchBudget& budget) {
  auto en = enumerate(sys, k, budget, 1);
  SearchOutcome out;
  out.stats = en.stats;
  if (!en.solutions.empty()) {
    out.verdict = Verdict::Colourable;
    out.colouring = std::move(en.solutions.front());
  } else {
    out.verdict = en.budget_hit ? Verdict::BudgetExceeded : Verdict::NotColourable;
  }
  return out;
}

UniquenessOutcome is_uniquely_k_colourable(const StarSystem& sys, int k, const SearchBudget& budget) {
  auto en = enumerate(sys, k, budget, 2);
  UniquenessOutcome out;
  out.stats = en.stats;
  if (en.solutions.size() >= 2) {
    out.verdict = Uniqueness::Multiple;
    out.first = std::move(en.solutions[0]);
    out.second = std::move(en.solutions[1]);
  } else if (en.budget_hit) {
    out.verdict = Uniqueness::BudgetExceeded;
    if (!en.solutions.empty()) out.first = std::move(en.solutions[0]);
  } else if (en.solutions.size() == 1) {
    out.verdict = Uniqueness::Unique;
    out.first = std::move(en.solutions[0]);
  } else {
    out.verdict = Uniqueness::NotColourable;
  }
  return out;
}

ChromaticCertificate chromatic_number(const StarSystem& sys, const SearchBudget& budget, int max_k) {
  if (sys.empty()) throw InvalidArgument("chromatic number needs at least one block");
  ChromaticCertificate cert;
  bool lower_open = true;  // still climbing through proven NotColourable values
  for (int k = 1; k <= std::min(max_k, 64); ++k) {
    auto r = find_colouring(sys, k, budget);
    if (r.verdict == Verdict::Colourable) {
      cert.upper = k;
      cert.colouring = std::move(r.colouring);
      if (lower_open) cert.lower = k;
      break;
    }
    if (r.verdict == Verdict::NotColourable && lower_open) {
      cert.lower = k + 1;
      cert.below = r.stats;
    } else {
      lower_open = false;
    }
  }
  return cert;
}

// ---------------------------------------------------------------------------

PartialColouring::PartialColouring(int k, Vertex n) : k_(k) {
  if (k < 1 || k > 64) throw InvalidArgument("k must be in [1, 64]");
  cand_.assign(n, k == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << k) - 1);
}

bool PartialColouring::decided(Vertex v) const { return std::has_single_bit(cand_[v - 1]); }

int PartialColouring::colour(Vertex v) const { return decided(v) ? std::countr_zero(cand_[v - 1]) + 1 : 0; }

bool PartialColouring::total() const {
  return std::all_of(cand_.begin(), cand_.end(), [](std::uint64_t c) { return std::has_single_bit(c); });
}

Colouring PartialColouring::to_colouring() const {
  if (!total()) throw InvalidArgument("partial colouring is not total");
  std::vector<int> a;
  a.reserve(cand_.size());
  for (auto c : cand_) a.push_back(std::countr_zero(c) + 1);
  return Colouring(k_, std::move(a));
}

Propagation propagate_forced(const StarSystem& sys, PartialColouring partial) {
  if (partial.n() < sys.n()) throw InvalidArgument("partial colouring does not cover every vertex");
  Propagation out;
  auto raw = sys.raw();
  const std::size_t w = static_cast<std::size_t>(sys.e()) + 1;
  for (Vertex v = 1; v <= partial.n(); ++v)
    if (partial.candidates(v) == 0) throw InvalidArgument("candidate sets must be nonempty");

  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < raw.size(); i += w) {
      Vertex open = 0;
      std::size_t open_count = 0;
      std::uint64_t shared_colour = 0;
      bool mixed = false;
      for (std::size_t j = 0; j < w && !mixed && open_count < 2; ++j) {
        Vertex v = raw[i + j];
        std::uint64_t c = partial.candidates(v);
        if (!std::has_single_bit(c)) {
          open = v;
          ++open_count;
        } else if (shared_colour == 0) {
          shared_colour = c;
        } else if (c != shared_colour) {
          mixed = true;
        }
      }
      if (mixed || open_count >= 2) continue;
      if (open_count == 0) {
        out.conflict = true;
        out.conflict_block = i / w;
        out.result = std::move(partial);
        return out;
      }
      if (partial.candidates(open) & shared_colour) {
        partial.restrict(open, ~shared_colour);
        changed = true;
        if (partial.candidates(open) == 0) {
          out.conflict = true;
          out.conflict_block = i / w;
          out.result = std::move(partial);
          return out;
        }
      }
    }
  }
  out.result = std::move(partial);
  return out;
}

}  // namespace starlight
