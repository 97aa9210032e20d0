#pragma once

// Seeded randomness with platform-independent output, and generators of
// random test objects built on it.

#include <cstdint>
#include <random>

#include "ghostlength/complex.hpp"

namespace ghostlength {

// mt19937_64 has a standardized output sequence; the bounded draws below
// avoid std::uniform_int_distribution, whose mapping is implementation-defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  // Uniform on [lo, hi], inclusive.
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);
  bool chance(std::uint64_t numerator, std::uint64_t denominator);

 private:
  std::mt19937_64 engine_;
};

// splitmix64 of master + (index + 1) * golden ratio: per-trial seeds.
std::uint64_t split_seed(std::uint64_t master, std::uint64_t index);

struct RandomComplexParams {
  int max_degrees = 4;
  std::size_t max_rank = 3;
  int entry_bound = 3;
};

// Bounded free complex; each differential's columns are drawn from the
// kernel of the previous one, so d o d = 0 by construction.
GradedComplex random_complex(Rng& rng, const RandomComplexParams& params = {});

IntMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, int bound);

}  // namespace ghostlength
