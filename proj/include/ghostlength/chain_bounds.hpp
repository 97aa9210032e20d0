#pragma once

// Ghost-length bounds for real projective spaces from chains of Steenrod
// squares: longest paths in the cell DAG of RP^n.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ghostlength/steenrod.hpp"

namespace ghostlength {

inline constexpr std::int64_t kDefaultCellBudget = std::int64_t{1} << 22;

class CapacityError : public std::length_error {
 public:
  CapacityError(std::int64_t requested, std::int64_t budget);
  std::int64_t requested() const { return requested_; }
  std::int64_t budget() const { return budget_; }

 private:
  std::int64_t requested_;
  std::int64_t budget_;
};

// Cells 1..n of RP^n with their Sq^{2^k} arrows. Edges are generated from
// the binary-digit rule on demand; the DAG is never materialized unless
// `edges()` is called.
class CellDag {
 public:
  std::int64_t n() const { return n_; }

  template <typename Fn>
  void for_each_out_edge(std::int64_t m, Fn&& fn) const {
    for (int k = 0; k < 62 && (std::int64_t{1} << k) <= m; ++k)
      if (sq_edge_exists(k, m, n_)) fn(make_edge(m, k));
  }

  std::vector<SqEdge> out_edges(std::int64_t m) const;
  // Every edge, ordered by source then k.
  std::vector<SqEdge> edges() const;

 private:
  friend CellDag build_dag(std::int64_t n, std::int64_t budget);
  explicit CellDag(std::int64_t n) : n_(n) {}
  std::int64_t n_;
};

CellDag build_dag(std::int64_t n, std::int64_t budget = kDefaultCellBudget);

// best[m] = maximum number (or total weight) of edges on a path ending at
// cell m; index 0 is unused and stays 0. One pass in increasing cell order.
std::vector<std::int64_t> longest_path_to(const CellDag& dag, bool weighted);

// One more than the longest Steenrod chain in H*(RP^n_+); 0 for n = -1.
std::int64_t stl(std::int64_t n, std::int64_t budget = kDefaultCellBudget);

// As stl, counting Sq^{2^k} with k >= 4 twice.
std::int64_t weighted_bound(std::int64_t n, std::int64_t budget = kDefaultCellBudget);

inline std::int64_t default_horizon(std::int64_t n) { return 2 * n + 64; }

// length(RP^n) >= length(RP^m) - (m - n) for every m >= n, applied to the
// weighted bound over m in [n, horizon].
std::int64_t monotone_bound(std::int64_t n, std::int64_t horizon,
                            std::int64_t budget = kDefaultCellBudget);

// floor(n/4) + 2; defined for n >= 0.
std::int64_t upper_bound(std::int64_t n);

struct FundamentalSequence {
  // values[m - 1]: 1 + longest chain ending at cell m.
  std::vector<std::int64_t> values;
  // last_step[m - 1]: k of the final Sq^{2^k} in a longest chain ending at
  // m (largest k among optimal predecessors), or -1 if nothing hits m.
  std::vector<int> last_step;
};

FundamentalSequence fundamental_sequence(std::int64_t n_max,
                                         std::int64_t budget = kDefaultCellBudget);

// stl(-1), stl(0), ..., stl(n_max) from a single pass.
std::vector<std::int64_t> stl_sequence(std::int64_t n_max,
                                       std::int64_t budget = kDefaultCellBudget);

struct RunBreak {
  std::size_t run_index = 0;
  std::int64_t value = 0;  // the Stl value held during the run
  std::int64_t expected = 0;
  std::int64_t actual = 0;
};

struct VakilReport {
  std::int64_t n_max = 0;
  std::vector<std::int64_t> runs;  // last entry may be a partial run
  // runs before the last, plus the last one if it already has full length
  std::size_t completed = 0;
  std::optional<RunBreak> failure;
  bool ok() const { return !failure.has_value(); }
  std::vector<std::int64_t> completed_runs() const {
    return {runs.begin(), runs.begin() + static_cast<std::ptrdiff_t>(completed)};
  }
};

// Run-length encodes stl(-1..n_max) and checks the runs against
// 1, 2, 2, 4, 4, 4, 8, 8, 8, 8, ... (2^k repeated k + 1 times).
VakilReport vakil_runs(std::int64_t n_max, std::int64_t budget = kDefaultCellBudget);

// The expected run lengths 2^k (k + 1 times), first `count` of them.
std::vector<std::int64_t> vakil_pattern(std::size_t count);

struct BoundsReport {
  std::int64_t n = 0;
  std::int64_t steenrod = 0;
  std::int64_t weighted = 0;
  std::int64_t monotone = 0;
  std::int64_t horizon = 0;
  std::optional<std::int64_t> upper;
};

BoundsReport bounds_report(std::int64_t n, std::optional<std::int64_t> horizon = std::nullopt,
                           std::int64_t budget = kDefaultCellBudget);

inline constexpr std::int64_t kOracleMaxN = 24;

// Exhaustive enumeration of every path, edges decided by exact binomial
// parity. Independent of the DP; refuses n > 24.
std::int64_t oracle_longest_path(std::int64_t n, bool weighted);

}  // namespace ghostlength
