#include "ghostlength/chain_bounds.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <limits>

namespace ghostlength {

CapacityError::CapacityError(std::int64_t requested, std::int64_t budget)
    : std::length_error("dimension " + std::to_string(requested) +
                        " exceeds the cell budget of " + std::to_string(budget)),
      requested_(requested),
      budget_(budget) {}

std::vector<SqEdge> CellDag::out_edges(std::int64_t m) const {
  std::vector<SqEdge> out;
  for_each_out_edge(m, [&](const SqEdge& e) { out.push_back(e); });
  return out;
}

std::vector<SqEdge> CellDag::edges() const {
  std::vector<SqEdge> out;
  for (std::int64_t m = 1; m <= n_; ++m)
    for_each_out_edge(m, [&](const SqEdge& e) { out.push_back(e); });
  return out;
}

CellDag build_dag(std::int64_t n, std::int64_t budget) {
  if (n < 0) return CellDag(0);
  if (n > budget) throw CapacityError(n, budget);
  return CellDag(n);
}

std::vector<std::int64_t> longest_path_to(const CellDag& dag, bool weighted) {
  const std::int64_t n = dag.n();
  std::vector<std::int64_t> best(static_cast<std::size_t>(n) + 1, 0);
  for (std::int64_t m = 1; m <= n; ++m) {
    const std::int64_t here = best[m];
    dag.for_each_out_edge(m, [&](const SqEdge& e) {
      const std::int64_t cand = here + (weighted ? e.weight : 1);
      if (cand > best[e.target]) best[e.target] = cand;
    });
  }
  return best;
}

namespace {

void require_dimension(std::int64_t n) {
  if (n < -1) throw std::invalid_argument("dimension must be >= -1, got " + std::to_string(n));
}

std::int64_t bound_from_dp(std::int64_t n, std::int64_t budget, bool weighted) {
  require_dimension(n);
  if (n == -1) return 0;
  auto best = longest_path_to(build_dag(n, budget), weighted);
  return 1 + *std::max_element(best.begin(), best.end());
}

}  // namespace

std::int64_t stl(std::int64_t n, std::int64_t budget) { return bound_from_dp(n, budget, false); }

std::int64_t weighted_bound(std::int64_t n, std::int64_t budget) {
  return bound_from_dp(n, budget, true);
}

std::int64_t monotone_bound(std::int64_t n, std::int64_t horizon, std::int64_t budget) {
  require_dimension(n);
  if (horizon < n)
    throw std::invalid_argument("horizon " + std::to_string(horizon) + " is below n = " +
                                std::to_string(n));
  // A chain inside RP^m ending at cell c <= m is also a chain of RP^c, so
  // the prefix maximum of best[] gives weighted_bound for every m <= horizon.
  auto best = longest_path_to(build_dag(horizon, budget), true);
  std::int64_t result = n == -1 ? 0 : std::numeric_limits<std::int64_t>::min();
  std::int64_t prefix = 0;
  for (std::int64_t m = 0; m <= horizon; ++m) {
    prefix = std::max(prefix, best[m]);
    if (m < n) continue;
    result = std::max(result, 1 + prefix - (m - n));
  }
  return result;
}

std::int64_t upper_bound(std::int64_t n) {
  if (n < 0) throw std::invalid_argument("upper bound needs n >= 0");
  return n / 4 + 2;
}

FundamentalSequence fundamental_sequence(std::int64_t n_max, std::int64_t budget) {
  if (n_max < 1) throw std::invalid_argument("fundamental sequence needs n_max >= 1");
  CellDag dag = build_dag(n_max, budget);
  const auto size = static_cast<std::size_t>(n_max);
  std::vector<std::int64_t> best(size + 1, 0);
  std::vector<int> step(size + 1, -1);
  for (std::int64_t m = 1; m <= n_max; ++m) {
    dag.for_each_out_edge(m, [&](const SqEdge& e) {
      const std::int64_t cand = best[m] + 1;
      // ties keep the largest k
      if (cand > best[e.target] || (cand == best[e.target] && e.k > step[e.target])) {
        best[e.target] = cand;
        step[e.target] = e.k;
      }
    });
  }
  FundamentalSequence out;
  out.values.reserve(size);
  out.last_step.reserve(size);
  for (std::size_t m = 1; m <= size; ++m) {
    out.values.push_back(1 + best[m]);
    out.last_step.push_back(step[m]);
  }
  return out;
}

std::vector<std::int64_t> stl_sequence(std::int64_t n_max, std::int64_t budget) {
  require_dimension(n_max);
  std::vector<std::int64_t> out{0};
  if (n_max == -1) return out;
  auto best = longest_path_to(build_dag(n_max, budget), false);
  std::int64_t prefix = 0;
  for (std::int64_t m = 0; m <= n_max; ++m) {
    prefix = std::max(prefix, best[m]);
    out.push_back(1 + prefix);
  }
  return out;
}

std::vector<std::int64_t> vakil_pattern(std::size_t count) {
  std::vector<std::int64_t> out;
  for (int k = 0; out.size() < count; ++k)
    for (int r = 0; r <= k && out.size() < count; ++r) out.push_back(std::int64_t{1} << k);
  return out;
}

VakilReport vakil_runs(std::int64_t n_max, std::int64_t budget) {
  if (n_max < 0) throw std::invalid_argument("vakil_runs needs n_max >= 0");
  auto values = stl_sequence(n_max, budget);
  VakilReport report;
  report.n_max = n_max;
  std::vector<std::int64_t> run_values;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i == 0 || values[i] != values[i - 1]) {
      report.runs.push_back(0);
      run_values.push_back(values[i]);
    }
    ++report.runs.back();
  }
  auto expected = vakil_pattern(report.runs.size());
  // a final run that already has its full length counts as completed
  report.completed = report.runs.size() - 1;
  if (report.runs.back() == expected.back()) ++report.completed;
  for (std::size_t r = 0; r < report.runs.size(); ++r) {
    const bool last = r + 1 == report.runs.size();
    const bool broken = last ? report.runs[r] > expected[r] : report.runs[r] != expected[r];
    if (broken) {
      report.failure = RunBreak{r, run_values[r], expected[r], report.runs[r]};
      break;
    }
  }
  return report;
}

BoundsReport bounds_report(std::int64_t n, std::optional<std::int64_t> horizon,
                           std::int64_t budget) {
  require_dimension(n);
  BoundsReport r;
  r.n = n;
  r.horizon = horizon.value_or(default_horizon(n));
  r.steenrod = stl(n, budget);
  r.weighted = weighted_bound(n, budget);
  r.monotone = monotone_bound(n, r.horizon, budget);
  if (n >= 0) r.upper = upper_bound(n);
  return r;
}

namespace {

// Pascal's triangle mod 2, no bit tricks.
bool binomial_is_odd(std::int64_t m, std::int64_t i) {
  std::vector<std::array<std::uint8_t, 64>> rows(static_cast<std::size_t>(m) + 1);
  for (std::int64_t a = 0; a <= m; ++a) {
    rows[a].fill(0);
    rows[a][0] = 1;
    for (std::int64_t b = 1; b <= a && b < 64; ++b)
      rows[a][b] = static_cast<std::uint8_t>((rows[a - 1][b - 1] + (b < a ? rows[a - 1][b] : 0)) % 2);
  }
  return i <= m && rows[m][i] == 1;
}

}  // namespace

std::int64_t oracle_longest_path(std::int64_t n, bool weighted) {
  if (n > kOracleMaxN)
    throw std::invalid_argument("oracle_longest_path refuses n > " + std::to_string(kOracleMaxN));
  if (n < 1) return 0;

  // adjacency via Sq^{2^k} x^m = C(m, 2^k) x^{m + 2^k}
  std::vector<std::vector<std::pair<std::int64_t, int>>> adj(static_cast<std::size_t>(n) + 1);
  for (std::int64_t m = 1; m <= n; ++m)
    for (int k = 0; m + (std::int64_t{1} << k) <= n; ++k)
      if (binomial_is_odd(m, std::int64_t{1} << k))
        adj[m].emplace_back(m + (std::int64_t{1} << k), weighted && k >= 4 ? 2 : 1);

  std::int64_t best = 0;
  std::function<void(std::int64_t, std::int64_t)> walk = [&](std::int64_t cell, std::int64_t len) {
    best = std::max(best, len);
    for (const auto& [next, w] : adj[cell]) walk(next, len + w);
  };
  for (std::int64_t start = 1; start <= n; ++start) walk(start, 0);
  return best;
}

}  // namespace ghostlength
