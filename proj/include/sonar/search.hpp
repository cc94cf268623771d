#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "sonar/classic.hpp"
#include "sonar/error.hpp"
#include "sonar/fold.hpp"
#include "sonar/number_theory.hpp"
#include "sonar/sequence.hpp"
#include "sonar/verify.hpp"

namespace sonar {

struct SearchBudget {
  std::optional<std::uint64_t> max_nodes;
  std::optional<std::chrono::milliseconds> max_time;
};

struct SearchOptions {
  Mode mode = Mode::Modular;
  SearchBudget budget;
  /// Modular mode only: fix f(1) = 0, valid because adding a constant to
  /// every value leaves all differences unchanged.
  bool prune_symmetry = true;
  unsigned threads = 1;
};

struct SearchResult {
  std::int64_t m = 0;
  Mode mode = Mode::Modular;
  std::int64_t best_n = 0;
  std::optional<SonarSeq> example;
  bool exhaustive = false;
  std::uint64_t nodes_explored = 0;
  std::chrono::duration<double> wall_time{0};
};

/// Longest length the counting argument allows: row h = 1 holds n-1
/// distinct differences out of m (modular) or 2m-1 (plain) values.
inline std::int64_t length_upper_bound(std::int64_t m, Mode mode) {
  return mode == Mode::Modular ? m + 1 : 2 * m;
}

namespace detail {

struct SharedSearchState {
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<bool> budget_cut{false};
  // Smallest subtree index that reached the counting bound; later subtrees
  // can stop since they cannot produce a lexicographically smaller winner.
  std::atomic<std::size_t> saturated_subtree{std::numeric_limits<std::size_t>::max()};
  std::chrono::steady_clock::time_point deadline = std::chrono::steady_clock::time_point::max();
  std::optional<std::uint64_t> max_nodes;
};

class Explorer {
 public:
  Explorer(std::int64_t m, Mode mode, SharedSearchState& shared)
      : m_(m),
        modular_(mode == Mode::Modular),
        limit_(length_upper_bound(m, mode)),
        lo_(modular_ ? 0 : 1),
        hi_(modular_ ? m - 1 : m),
        width_(modular_ ? m : 2 * m - 1),
        offset_(modular_ ? 0 : m - 1),
        shared_(shared),
        used_(static_cast<std::size_t>(limit_), std::vector<char>(static_cast<std::size_t>(width_), 0)) {}

  /// Explores every extension of the prefix. Returns false when stopped early
  /// by the budget.
  bool run(const std::vector<std::int64_t>& prefix, std::size_t subtree) {
    subtree_ = subtree;
    for (auto v : prefix)
      if (!push(v)) return true;  // infeasible prefix: nothing to explore
    record();
    dfs();
    return !stopped_;
  }

  std::int64_t best_n() const { return static_cast<std::int64_t>(best_.size()); }
  const std::vector<std::int64_t>& best() const { return best_; }
  std::uint64_t local_nodes() const { return local_nodes_; }

 private:
  std::int64_t slot(std::int64_t v, std::int64_t u) const {
    return modular_ ? nt::mod(v - u, m_) : v - u + offset_;
  }

  bool push(std::int64_t v) {
    const auto k = static_cast<std::int64_t>(f_.size());
    for (std::int64_t h = 1; h <= k; ++h)
      if (used_[h][slot(v, f_[k - h])]) return false;
    for (std::int64_t h = 1; h <= k; ++h) used_[h][slot(v, f_[k - h])] = 1;
    f_.push_back(v);
    return true;
  }

  void pop() {
    const std::int64_t v = f_.back();
    f_.pop_back();
    const auto k = static_cast<std::int64_t>(f_.size());
    for (std::int64_t h = 1; h <= k; ++h) used_[h][slot(v, f_[k - h])] = 0;
  }

  void record() {
    if (f_.size() > best_.size()) {
      best_ = f_;
      if (best_n() == limit_) {
        std::size_t cur = shared_.saturated_subtree.load();
        while (subtree_ < cur && !shared_.saturated_subtree.compare_exchange_weak(cur, subtree_)) {
        }
      }
    }
  }

  bool should_stop() {
    if (stopped_) return true;
    if (best_n() == limit_ || shared_.saturated_subtree.load(std::memory_order_relaxed) < subtree_) {
      done_early_ = true;
      return true;
    }
    const auto total = shared_.nodes.fetch_add(1, std::memory_order_relaxed) + 1;
    ++local_nodes_;
    if (shared_.max_nodes && total > *shared_.max_nodes) return cut();
    if ((local_nodes_ & 1023) == 0 && std::chrono::steady_clock::now() >= shared_.deadline) return cut();
    return false;
  }

  bool cut() {
    stopped_ = true;
    shared_.budget_cut = true;
    return true;
  }

  void dfs() {
    if (static_cast<std::int64_t>(f_.size()) >= limit_) return;
    for (std::int64_t v = lo_; v <= hi_; ++v) {
      if (should_stop()) return;
      if (!push(v)) continue;
      record();
      dfs();
      pop();
      if (stopped_ || done_early_) return;
    }
  }

  std::int64_t m_;
  bool modular_;
  std::int64_t limit_;
  std::int64_t lo_, hi_, width_, offset_;
  SharedSearchState& shared_;
  std::vector<std::vector<char>> used_;
  std::vector<std::int64_t> f_;
  std::vector<std::int64_t> best_;
  std::size_t subtree_ = 0;
  std::uint64_t local_nodes_ = 0;
  bool stopped_ = false;
  bool done_early_ = false;
};

}  // namespace detail

/// Depth-first search for the longest m x n (modular) sonar sequence.
///
/// The tree is split into subtrees by the first free value and explored in
/// lexicographic order, so the returned example is the lexicographically
/// least sequence of maximal length whenever the search is exhaustive.
/// Reaching the counting bound ends the search early and still certifies
/// the maximum.
inline SearchResult search_max(std::int64_t m, const SearchOptions& options = {}) {
  if (m < 1) throw Error(Errc::InvalidArgument, "m must be >= 1");
  if (options.budget.max_nodes && *options.budget.max_nodes == 0)
    throw Error(Errc::InvalidArgument, "node budget must be positive");
  if (options.budget.max_time && options.budget.max_time->count() <= 0)
    throw Error(Errc::InvalidArgument, "time budget must be positive");

  const auto start = std::chrono::steady_clock::now();
  const bool modular = options.mode == Mode::Modular;
  const bool pruned = modular && options.prune_symmetry;

  detail::SharedSearchState shared;
  shared.max_nodes = options.budget.max_nodes;
  if (options.budget.max_time) shared.deadline = start + *options.budget.max_time;

  const std::int64_t lo = modular ? 0 : 1;
  const std::int64_t hi = modular ? m - 1 : m;
  std::vector<std::vector<std::int64_t>> prefixes;
  for (std::int64_t v = lo; v <= hi; ++v)
    prefixes.push_back(pruned ? std::vector<std::int64_t>{0, v} : std::vector<std::int64_t>{v});

  struct Outcome {
    std::vector<std::int64_t> best;
    bool complete = false;
    bool ran = false;
  };
  std::vector<Outcome> outcomes(prefixes.size());
  std::atomic<std::size_t> next{0};

  auto worker = [&] {
    for (;;) {
      const std::size_t k = next.fetch_add(1);
      if (k >= prefixes.size()) return;
      if (shared.saturated_subtree.load() < k) {
        outcomes[k].complete = true;
        continue;
      }
      detail::Explorer ex(m, options.mode, shared);
      outcomes[k].complete = ex.run(prefixes[k], k);
      outcomes[k].best = ex.best();
      outcomes[k].ran = true;
    }
  };

  const unsigned threads = std::max(1u, options.threads);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  SearchResult result;
  result.m = m;
  result.mode = options.mode;
  result.exhaustive = true;
  const std::vector<std::int64_t>* winner = nullptr;
  for (const auto& o : outcomes) {
    result.exhaustive = result.exhaustive && o.complete;
    if (!winner || o.best.size() > winner->size()) winner = &o.best;
  }
  // A budget cut anywhere voids the certificate unless the bound was hit.
  if (winner && static_cast<std::int64_t>(winner->size()) == length_upper_bound(m, options.mode))
    result.exhaustive = true;
  else if (shared.budget_cut)
    result.exhaustive = false;

  if (winner && !winner->empty()) {
    result.best_n = static_cast<std::int64_t>(winner->size());
    SonarSeq seq(*winner, m, modular,
                 Provenance{"search", {{"m", m}, {"modular", modular ? 1 : 0}}});
    const auto report = modular ? check_modular(seq, m) : check_plain(seq);
    if (!report)
      throw Error(Errc::InternalInvariant, "search produced a sequence that fails verification");
    result.example = std::move(seq);
  }
  result.nodes_explored = shared.nodes.load();
  result.wall_time = std::chrono::steady_clock::now() - start;
  return result;
}

enum class RelationStatus { Agrees, Inconclusive, Disagrees };

inline std::string_view relation_status_name(RelationStatus s) {
  switch (s) {
    case RelationStatus::Agrees: return "agrees";
    case RelationStatus::Inconclusive: return "inconclusive";
    case RelationStatus::Disagrees: return "disagrees";
  }
  return "unknown";
}

struct RelationRow {
  std::string claim;
  std::string observed;
  RelationStatus status = RelationStatus::Inconclusive;
};

/// Checks G(mod p) = p+1 => G(p) >= p+1 for primes and
/// G(mod(q-1)) = q => G(q-1) >= q for prime powers. Equalities combine a
/// construction witness with the counting bound, and are cross-checked by
/// exhaustive search when m <= max_search_m.
inline std::vector<RelationRow> verify_relations(const std::vector<std::int64_t>& values,
                                                       const SearchOptions& options = {},
                                                       std::int64_t max_search_m = 7) {
  std::vector<RelationRow> rows;

  auto equality_row = [&](std::int64_t m, std::int64_t claimed,
                          const std::optional<SonarSeq>& witness, const std::string& label) {
    RelationRow row;
    row.claim = "G(mod " + std::to_string(m) + ") = " + std::to_string(claimed);
    std::string observed;
    bool witnessed = false;
    if (witness) {
      witnessed = witness->n() == claimed && check_modular(*witness, m).pass;
      observed = label + " gives n=" + std::to_string(witness->n());
    }
    const bool bounded = length_upper_bound(m, Mode::Modular) == claimed;
    if (bounded) observed += std::string(observed.empty() ? "" : "; ") + "counting bound n<=" + std::to_string(claimed);
    std::optional<bool> searched;
    if (m <= max_search_m) {
      SearchOptions o = options;
      o.mode = Mode::Modular;
      const auto r = search_max(m, o);
      observed += std::string(observed.empty() ? "" : "; ") + "search best_n=" + std::to_string(r.best_n) +
                  (r.exhaustive ? " (exhaustive)" : " (budget cut)");
      if (r.exhaustive) searched = r.best_n == claimed;
      else if (r.best_n > claimed) searched = false;
    }
    if (searched.has_value() && !*searched)
      row.status = RelationStatus::Disagrees;
    else if ((witnessed && bounded) || searched.value_or(false))
      row.status = RelationStatus::Agrees;
    else
      row.status = RelationStatus::Inconclusive;
    row.observed = observed;
    rows.push_back(std::move(row));
  };

  auto plain_row = [&](std::int64_t m, std::int64_t claimed, const std::optional<SonarSeq>& witness,
                       const std::string& label) {
    RelationRow row;
    row.claim = "G(" + std::to_string(m) + ") >= " + std::to_string(claimed);
    if (!witness) {
      row.observed = "no construction witness";
      rows.push_back(std::move(row));
      return;
    }
    std::vector<std::int64_t> lifted;
    for (auto v : witness->values()) lifted.push_back(v + 1);
    const bool ok = static_cast<std::int64_t>(lifted.size()) >= claimed && check_plain(lifted).pass;
    row.observed = label + " shifted into [1," + std::to_string(m) + "] gives n=" +
                   std::to_string(lifted.size()) + (ok ? ", plain check passes" : ", plain check fails");
    row.status = ok ? RelationStatus::Agrees : RelationStatus::Disagrees;
    rows.push_back(std::move(row));
  };

  for (auto x : values) {
    if (nt::is_prime(x)) {
      std::optional<SonarSeq> w;
      std::string label = "none";
      if (x > 2) {
        w = quadratic(x, 1, 0, 0);
        label = "quadratic";
      }
      equality_row(x, x + 1, w, label);
      plain_row(x, x + 1, w, label);
    }
    if (nt::is_prime_power(x)) {
      const auto pp = *nt::prime_power(x);
      const Field big(pp.p, 2 * pp.r);
      const auto w = sonar_from_bose(big, big.primitive(), canonical_bose_alpha(big));
      equality_row(x - 1, x, w, "bose-fold");
      plain_row(x - 1, x, w, "bose-fold");
    }
  }
  return rows;
}

}  // namespace sonar
