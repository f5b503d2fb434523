#include "goldbach/estimator.hpp"

#include <cmath>
#include <string>

#include "goldbach/error.hpp"
#include "goldbach/numerics.hpp"
#include "int_math.hpp"

namespace goldbach {

using numerics::kExpGamma;
using numerics::li;

namespace {

void require_even(std::uint64_t two_n) {
  if (two_n < 4 || two_n % 2 != 0) {
    throw InvalidArgument("expected an even number >= 4, got " + std::to_string(two_n));
  }
}

void require_prime(std::uint64_t p) {
  if (!detail::is_prime_trial(p)) throw InvalidArgument(std::to_string(p) + " is not prime");
}

}  // namespace

double f_h(std::uint64_t p) {
  require_prime(p);
  double acc = 1.0;
  for (auto k : small_primes(p - 1)) acc *= static_cast<double>(k - 1) / static_cast<double>(k);
  return acc;
}

double egp(std::uint64_t two_n) {
  require_even(two_n);
  return egp(two_n, small_primes(detail::isqrt(two_n)));
}

double egp(std::uint64_t two_n, std::span<const std::uint64_t> primes) {
  require_even(two_n);
  const double n = static_cast<double>(two_n / 2);
  double prod = 1.0;
  for (auto p : primes) {
    if (p * p > two_n) break;
    if (p == 2) continue;
    const double f = (two_n % p == 0) ? static_cast<double>(p - 1) : static_cast<double>(p - 2);
    prod *= f / static_cast<double>(p);
  }
  return 0.5 * n * prod;
}

double integral_2f(std::uint64_t two_n, std::uint64_t p) {
  if (p < 2 || !detail::pow_le(p, 2, two_n)) {
    throw DomainError("integral_2f needs p^2 <= 2n (p=" + std::to_string(p) +
                      ", 2n=" + std::to_string(two_n) + ")");
  }
  if (p * p == two_n) return 0.0;
  const double pd = static_cast<double>(p);
  return kExpGamma * std::log(pd) * pd * (li(static_cast<double>(two_n) / pd) - li(pd));
}

double integral_3f(std::uint64_t two_n, std::uint64_t p) {
  if (p < 2 || !detail::pow_le(p, 3, two_n)) {
    throw DomainError("integral_3f needs p^3 <= 2n (p=" + std::to_string(p) +
                      ", 2n=" + std::to_string(two_n) + ")");
  }
  return integral_3f(two_n, p, small_primes(detail::isqrt(two_n / p)));
}

double integral_3f(std::uint64_t two_n, std::uint64_t p, std::span<const std::uint64_t> primes) {
  if (p < 2 || !detail::pow_le(p, 3, two_n)) {
    throw DomainError("integral_3f needs p^3 <= 2n (p=" + std::to_string(p) +
                      ", 2n=" + std::to_string(two_n) + ")");
  }
  const double x = static_cast<double>(two_n);
  const double pd = static_cast<double>(p);
  double sum = 0.0;
  for (auto r : primes) {
    if (r < p) continue;
    if (r * r > two_n / p) break;
    const double rd = static_cast<double>(r);
    if (p * r * r == two_n) continue;
    sum += li(x / (pd * rd)) - li(rd);
  }
  return kExpGamma * std::log(pd) * pd * sum;
}

double integral_3f_printed(std::uint64_t two_n, std::uint64_t p) {
  if (p < 3 || !detail::pow_le(p, 3, two_n)) {
    throw DomainError("integral_3f needs p^3 <= 2n (p=" + std::to_string(p) +
                      ", 2n=" + std::to_string(two_n) + ")");
  }
  const double pd = static_cast<double>(p);
  const auto antiderivative = [pd](double x) {
    const double a = x / pd;
    const double b = x / (pd * pd);
    return (numerics::offset_li(a) - numerics::offset_li(b)) -
           x * (std::log(std::log(a)) + std::log(2.0) - std::log(std::log(b)));
  };
  const double lower = pd * pd * pd;
  return kExpGamma * std::log(pd) * (antiderivative(static_cast<double>(two_n)) - antiderivative(lower));
}

std::string_view to_string(AlphaCase c) noexcept {
  switch (c) {
    case AlphaCase::one: return "one";
    case AlphaCase::i2_i3: return "i2+i3";
    case AlphaCase::i2: return "i2";
    case AlphaCase::zero: return "zero";
  }
  return "zero";
}

AlphaValue alpha_detail(std::uint64_t upper, std::uint64_t p, std::span<const std::uint64_t> primes) {
  if (p == 2) throw InvalidArgument("alpha is defined for odd pen primes only");
  if (upper < 1) throw InvalidArgument("alpha needs a positive upper limit");
  // The log_p thresholds are decided on integers: log_p(u) >= k <=> p^k <= u.
  if (detail::pow_le(p, 4, upper)) return {1.0, AlphaCase::one};
  const double u = static_cast<double>(upper);
  if (detail::pow_le(p, 3, upper)) {
    return {(integral_2f(upper, p) + integral_3f(upper, p, primes)) / u, AlphaCase::i2_i3};
  }
  if (detail::pow_le(p, 2, upper)) return {integral_2f(upper, p) / u, AlphaCase::i2};
  return {0.0, AlphaCase::zero};
}

double alpha(std::uint64_t upper, std::uint64_t p) {
  require_prime(p);
  return alpha_detail(upper, p, small_primes(detail::isqrt(upper))).value;
}

AlphaProfile alpha_profile(std::uint64_t two_n) {
  require_even(two_n);
  const auto primes = small_primes(detail::isqrt(two_n));
  AlphaProfile profile{two_n, {}};
  const std::uint64_t n = two_n / 2;
  for (auto p : primes) {
    if (p == 2) continue;
    AlphaEntry e;
    e.p = p;
    const auto a = alpha_detail(two_n, p, primes);
    e.alpha = a.value;
    e.kind = a.kind;
    e.divides = two_n % p == 0;
    if (e.divides) e.alpha_at_n = alpha_detail(n, p, primes).value;
    profile.entries.push_back(e);
  }
  return profile;
}

IgpResult igp_detail(std::uint64_t two_n, std::span<const std::uint64_t> primes) {
  require_even(two_n);
  const std::uint64_t n = two_n / 2;
  IgpResult out;
  double prod = 1.0;
  for (auto p : primes) {
    if (p * p > two_n) break;
    if (p == 2) continue;
    const double pd = static_cast<double>(p);
    double f;
    if (two_n % p == 0) {
      f = pd - alpha_detail(n, p, primes).value;
      if (p * p > n) out.inert_divisors.push_back(p);
    } else {
      f = pd - 2.0 * alpha_detail(two_n, p, primes).value;
    }
    prod *= f / pd;
  }
  out.value = 0.5 * static_cast<double>(n) * prod;
  return out;
}

double igp(std::uint64_t two_n) {
  require_even(two_n);
  return igp_detail(two_n, small_primes(detail::isqrt(two_n))).value;
}

double igp(std::uint64_t two_n, std::span<const std::uint64_t> primes) {
  return igp_detail(two_n, primes).value;
}

double egp_b2_closed(double two_n, double C) {
  if (!(two_n >= 4.0)) throw DomainError("egp_b2_closed needs 2n >= 4");
  const double l = std::log(two_n);
  return C * two_n / (l * l);
}

B2Constants mertens_partial(std::uint64_t cutoff, const PrimalityTable& table) {
  if (cutoff < 9 || cutoff > table.limit()) {
    throw OutOfRange("mertens cutoff must lie in [9, sieve limit]");
  }
  double prod = 1.0;
  for (std::uint64_t p = 3; p <= cutoff; p += 2) {
    if (table.test(p)) prod *= static_cast<double>(p - 2) / static_cast<double>(p - 1);
  }
  B2Constants k;
  k.cutoff = cutoff;
  k.c_partial = std::log(static_cast<double>(cutoff)) * prod;
  k.C_partial = 2.0 * k.c_partial / kExpGamma;
  return k;
}

}  // namespace goldbach
