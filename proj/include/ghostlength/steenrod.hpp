#pragma once

// Action of the Steenrod squares on H*(RP^n; F_2) = F_2[x]/(x^{n+1}).

#include <cstdint>

namespace ghostlength {

// Sq^{2^k} from cell `source` to cell `target = source + 2^k`.
struct SqEdge {
  std::int64_t source = 0;
  int k = 0;
  std::int64_t target = 0;
  int weight = 1;

  friend bool operator==(const SqEdge&, const SqEdge&) = default;
};

// Sq^1, Sq^2, Sq^4 and Sq^8 have ghost filtration exactly one; every
// higher Sq^{2^k} has filtration at least two.
constexpr int filtration_weight(int k) { return k >= 4 ? 2 : 1; }

// C(m, i) mod 2 by Lucas: odd exactly when the bits of i are a subset of m's.
constexpr int binomial_mod2(std::uint64_t m, std::uint64_t i) { return (i & m) == i ? 1 : 0; }

// Sq^{2^k} x^m = x^{m + 2^k} is non-zero in H*(RP^n) iff bit k of m is set
// and the target cell exists.
constexpr bool sq_edge_exists(int k, std::int64_t m, std::int64_t n) {
  if (m < 1 || k < 0 || k >= 62) return false;
  return ((m >> k) & 1) != 0 && m + (std::int64_t{1} << k) <= n;
}

constexpr SqEdge make_edge(std::int64_t source, int k) {
  return SqEdge{source, k, source + (std::int64_t{1} << k), filtration_weight(k)};
}

}  // namespace ghostlength
