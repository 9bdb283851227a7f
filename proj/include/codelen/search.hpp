#pragma once

// Exhaustive search for e-error-correcting codes in systematic form. A code
// [n, k, d >= 2e+1] exists iff some r x n check matrix (r = n - k) has every
// subset of up to 2e columns linearly independent, and column permutations
// plus row reduction bring any such matrix to [I | A]. The search fixes the
// identity block and backtracks over the k remaining columns in ascending
// value order; a candidate is admissible iff it is not the XOR of up to
// 2e - 1 already-placed columns. Work is metered in nodes (candidates
// examined), and exceeding the node budget is a first-class outcome, never
// silently treated as refutation.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "codelen/errors.hpp"
#include "codelen/gf2.hpp"

namespace codelen::search {

inline constexpr std::int64_t default_node_budget = 100'000'000;

struct SearchQuery {
  std::int64_t k;
  std::int64_t e;
  std::int64_t n_max = gf2::max_word_bits;
  std::int64_t budget = default_node_budget;
  bool symmetry_pruning = true;
};

enum class SearchStatus { found, none_up_to_n_max, budget_exceeded };

inline const char* status_name(SearchStatus s) {
  switch (s) {
    case SearchStatus::found: return "found";
    case SearchStatus::none_up_to_n_max: return "none_up_to_n_max";
    case SearchStatus::budget_exceeded: return "budget_exceeded";
  }
  throw std::logic_error("unknown search status");
}

struct ExistsOutcome {
  bool exists = false;
  bool budget_exceeded = false;
  std::optional<gf2::BinaryMatrix> certificate;  // check matrix when exists
  std::int64_t nodes = 0;
};

namespace detail {

class Searcher {
 public:
  Searcher(int r, std::int64_t k, std::int64_t e, std::int64_t budget, bool pruning)
      : r_(r), k_(k), max_subset_(2 * e - 1), budget_(budget), pruning_(pruning) {
    cols_.reserve(static_cast<std::size_t>(r + k));
    for (int j = 0; j < r; ++j) cols_.push_back(std::uint64_t{1} << j);
  }

  bool run() { return dfs(0, 1); }

  bool exceeded() const { return exceeded_; }
  std::int64_t nodes() const { return nodes_; }
  const std::vector<std::uint64_t>& columns() const { return cols_; }

 private:
  // Is cand the XOR of a subset of cols_[start..] of size depth+1..max_subset_?
  bool conflicts(std::uint64_t cand, std::size_t start, int depth, std::uint64_t acc) const {
    for (std::size_t i = start; i < cols_.size(); ++i) {
      const std::uint64_t next = acc ^ cols_[i];
      if (next == cand) return true;
      if (depth + 1 < max_subset_ && conflicts(cand, i + 1, depth + 1, next)) return true;
    }
    return false;
  }

  bool dfs(std::int64_t placed, std::uint64_t lo) {
    if (placed == k_) return true;
    const std::uint64_t top = std::uint64_t{1} << r_;
    for (std::uint64_t cand = lo; cand < top; ++cand) {
      if (++nodes_ > budget_) {
        exceeded_ = true;
        return false;
      }
      if (conflicts(cand, 0, 0, 0)) continue;
      cols_.push_back(cand);
      if (dfs(placed + 1, pruning_ ? cand + 1 : 1)) return true;
      cols_.pop_back();
      if (exceeded_) return false;
    }
    return false;
  }

  int r_;
  std::int64_t k_;
  std::int64_t max_subset_;
  std::int64_t budget_;
  bool pruning_;
  std::vector<std::uint64_t> cols_;
  std::int64_t nodes_ = 0;
  bool exceeded_ = false;
};

}  // namespace detail

inline ExistsOutcome exists_code(std::int64_t n, std::int64_t k, std::int64_t e,
                                 std::int64_t budget = default_node_budget,
                                 bool symmetry_pruning = true) {
  if (e < 1) throw DomainError("error count e must be >= 1, got " + std::to_string(e));
  if (k < 1) throw DomainError("dimension k must be >= 1, got " + std::to_string(k));
  if (n <= k) throw DomainError("length n must exceed dimension k");
  if (n > gf2::max_word_bits)
    throw CapError("length " + std::to_string(n) + " exceeds the 64-coordinate word size");
  if (budget < 1) throw DomainError("node budget must be >= 1");

  detail::Searcher searcher(static_cast<int>(n - k), k, e, budget, symmetry_pruning);
  ExistsOutcome out;
  out.exists = searcher.run();
  out.budget_exceeded = searcher.exceeded();
  out.nodes = searcher.nodes();
  if (out.exists)
    out.certificate = gf2::BinaryMatrix::from_columns(static_cast<int>(n - k), searcher.columns());
  return out;
}

struct SearchOutcome {
  SearchStatus status;
  std::optional<std::int64_t> n;                 // minimal length when found
  std::optional<gf2::BinaryMatrix> certificate;  // its check matrix
  std::int64_t nodes_explored = 0;
  std::int64_t refuted_up_to = 0;  // all lengths <= this admit no such code
};

// Minimal n in [k + 2e, n_max] admitting an [n, k, 2e+1] code, by exhaustive
// search at each length with one cumulative node budget. Lengths below
// k + 2e need no search: d <= n - k + 1 rules them out.
inline SearchOutcome nl_search(const SearchQuery& q) {
  if (q.e < 1) throw DomainError("error count e must be >= 1, got " + std::to_string(q.e));
  if (q.k < 1) throw DomainError("dimension k must be >= 1, got " + std::to_string(q.k));
  if (q.budget < 1) throw DomainError("node budget must be >= 1");
  if (q.n_max > gf2::max_word_bits)
    throw CapError("n_max " + std::to_string(q.n_max) + " exceeds the 64-coordinate word size");
  const std::int64_t start = q.k + 2 * q.e;
  SearchOutcome out;
  out.refuted_up_to = start - 1;
  for (std::int64_t n = start; n <= q.n_max; ++n) {
    if (out.nodes_explored >= q.budget) {
      out.status = SearchStatus::budget_exceeded;
      return out;
    }
    const auto res =
        exists_code(n, q.k, q.e, q.budget - out.nodes_explored, q.symmetry_pruning);
    out.nodes_explored += res.nodes;
    if (res.exists) {
      out.status = SearchStatus::found;
      out.n = n;
      out.certificate = res.certificate;
      return out;
    }
    if (res.budget_exceeded) {
      out.status = SearchStatus::budget_exceeded;
      return out;
    }
    out.refuted_up_to = n;
  }
  out.status = SearchStatus::none_up_to_n_max;
  return out;
}

}  // namespace codelen::search
