#pragma once

#include <cstdint>
#include <stdexcept>

namespace hyperlag::detail {

/// C(n, k), zero outside 0 <= k <= n.
inline std::int64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  std::int64_t c = 1;
  for (std::int64_t i = 0; i < k; ++i) {
    std::int64_t next = 0;
    if (__builtin_mul_overflow(c, n - i, &next)) throw std::overflow_error("binomial overflow");
    c = next / (i + 1);
  }
  return c;
}

}  // namespace hyperlag::detail
