#pragma once

// Independent reference computations for the tests. Nothing here calls into
// the sieve, the li series or the closed-form integrals.

#include <cmath>
#include <cstdint>
#include <vector>

#include "goldbach/numerics.hpp"

namespace oracle {

template <typename U>
inline bool trial_is_prime_odd(U n) {
  for (U d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

inline bool trial_is_prime(std::uint64_t n) {
  if (n < 4) return n >= 2;
  if (n % 2 == 0) return false;
  if (n <= 0x7FFF'FFFFu) return trial_is_prime_odd(static_cast<std::uint32_t>(n));
  return trial_is_prime_odd(n);
}

// Primality flags for [0, limit] by trial division against earlier primes.
inline std::vector<char> trial_flags(std::uint64_t limit) {
  std::vector<char> flags(limit + 1, 0);
  std::vector<std::uint64_t> found;
  for (std::uint64_t n = 2; n <= limit; ++n) {
    bool prime = true;
    for (auto d : found) {
      if (d * d > n) break;
      if (n % d == 0) {
        prime = false;
        break;
      }
    }
    if (prime) {
      flags[n] = 1;
      found.push_back(n);
    }
  }
  return flags;
}

// Loop over every split k + (2n - k), k <= n.
inline std::uint64_t brute_gp(std::uint64_t two_n, const std::vector<char>& flags) {
  std::uint64_t c = 0;
  for (std::uint64_t k = 1; k <= two_n / 2; ++k) {
    if (flags[k] && flags[two_n - k]) ++c;
  }
  return c;
}

// 1/ln t - 1/(t-1), smooth through t = 1.
inline double li_regular_part(double t) {
  const double h = t - 1.0;
  if (std::abs(h) < 1e-4) return 0.5 - h / 12.0 + h * h / 24.0 - 19.0 * h * h * h / 720.0;
  if (t <= 0.0) return 1.0;
  return 1.0 / std::log(t) - 1.0 / h;
}

// li(x) = int_0^x (1/ln t - 1/(t-1)) dt + ln(x-1): the principal value of
// the pole is carried by the log term, the integrand left over is regular.
inline double li_by_quadrature(double x) {
  using goldbach::numerics::quadrature;
  const double upto_one = quadrature(li_regular_part, 0.0, 1.0, 1e-12);
  const double rest = quadrature(li_regular_part, 1.0, x, 1e-12);
  return upto_one + rest + std::log(x - 1.0);
}

}  // namespace oracle
