#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "ghostlength/int_matrix.hpp"
#include "ghostlength/random.hpp"

namespace testing {

inline ghostlength::IntMatrix random_shape_matrix(ghostlength::Rng& rng, std::size_t max_dim, int bound) {
  const auto r = static_cast<std::size_t>(rng.uniform(1, static_cast<std::int64_t>(max_dim)));
  const auto c = static_cast<std::size_t>(rng.uniform(1, static_cast<std::int64_t>(max_dim)));
  return ghostlength::random_matrix(rng, r, c, bound);
}

// Calls fn on every k-subset of {0, ..., n - 1}, in lexicographic order.
inline void for_each_subset(std::size_t n, std::size_t k,
                            const std::function<void(const std::vector<std::size_t>&)>& fn) {
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  if (k > n) return;
  while (true) {
    fn(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace testing
