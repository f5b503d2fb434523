#pragma once

#include <cmath>
#include <cstdint>
#include <limits>

namespace goldbach::detail {

inline std::uint64_t isqrt(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
  while (r > 0 && r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

// p^k <= x without overflow.
inline bool pow_le(std::uint64_t p, int k, std::uint64_t x) {
  std::uint64_t acc = 1;
  for (int i = 0; i < k; ++i) {
    if (acc > x / p) return false;
    acc *= p;
  }
  return acc <= x;
}

inline bool is_prime_trial(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

}  // namespace goldbach::detail
