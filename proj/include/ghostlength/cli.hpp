#pragma once

// Command implementations behind the `ghostlength` executable. Each runner
// returns a report document and the exit code it implies; run_cli does the
// argument parsing and output.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>

#include "ghostlength/chain_bounds.hpp"
#include "ghostlength/report.hpp"

namespace ghostlength::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitFalsified = 2;

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Outcome {
  ReportDocument doc;
  int exit_code = kExitOk;
};

Outcome rpn_table(std::int64_t from, std::int64_t to, std::int64_t budget = kDefaultCellBudget);
Outcome rpn_bounds(std::int64_t n, std::optional<std::int64_t> horizon = std::nullopt,
                   std::int64_t budget = kDefaultCellBudget);
Outcome rpn_vakil(std::int64_t max_n, std::int64_t budget = kDefaultCellBudget);
Outcome rpn_fundamental(std::int64_t max_n, std::int64_t budget = kDefaultCellBudget);

Outcome complex_homology(const std::string& file);
Outcome complex_ghost_check(const std::string& file);
Outcome complex_resolve(const std::string& file, int depth);

struct KellyOptions {
  std::uint64_t seed = 0;
  std::size_t trials = 200;
  int k = 2;
  // Where a counterexample bundle is written if any composite is essential.
  std::string bundle = "kelly-counterexample.json";
};
Outcome complex_kelly(const KellyOptions& options);

Outcome complex_pure_check(const std::string& file);

// Parses argv, runs the command, writes the report to `out` and
// diagnostics to `err`. Returns the process exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ghostlength::cli
