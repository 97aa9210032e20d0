#include "ghostlength/random.hpp"

namespace ghostlength {

std::int64_t Rng::uniform(std::int64_t lo, std::int64_t hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  if (span == 0) return static_cast<std::int64_t>(next());
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
  std::uint64_t x;
  do {
    x = next();
  } while (x >= limit);
  return lo + static_cast<std::int64_t>(x % span);
}

bool Rng::chance(std::uint64_t numerator, std::uint64_t denominator) {
  return static_cast<std::uint64_t>(uniform(0, static_cast<std::int64_t>(denominator) - 1)) <
         numerator;
}

std::uint64_t split_seed(std::uint64_t master, std::uint64_t index) {
  std::uint64_t z = master + (index + 1) * 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

IntMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, int bound) {
  IntMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rng.uniform(-bound, bound);
  return m;
}

GradedComplex random_complex(Rng& rng, const RandomComplexParams& params) {
  const auto degrees = static_cast<std::size_t>(rng.uniform(1, params.max_degrees));
  const int min_degree = static_cast<int>(rng.uniform(-1, 1));
  std::vector<std::size_t> ranks(degrees);
  for (auto& r : ranks) r = static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(params.max_rank)));

  std::vector<IntMatrix> diffs;
  for (std::size_t i = 0; i + 1 < degrees; ++i) {
    const std::size_t rows = ranks[i];
    const std::size_t cols = ranks[i + 1];
    if (i == 0) {
      diffs.push_back(random_matrix(rng, rows, cols, params.entry_bound));
      continue;
    }
    // columns must be cycles for the previous differential
    const IntMatrix cycles = kernel_basis(diffs.back());
    IntMatrix d(rows, cols);
    for (std::size_t c = 0; c < cols && cycles.cols() > 0; ++c) {
      for (int attempt = 0; attempt < 8; ++attempt) {
        IntVector coeff(cycles.cols());
        for (auto& x : coeff) x = rng.uniform(-2, 2);
        IntVector col = cycles * coeff;
        bool small = true;
        for (const auto& x : col) small = small && abs(x) <= params.entry_bound;
        if (small) {
          d.set_column(c, col);
          break;
        }
      }
    }
    diffs.push_back(std::move(d));
  }
  return GradedComplex(min_degree, std::move(ranks), std::move(diffs));
}

}  // namespace ghostlength
