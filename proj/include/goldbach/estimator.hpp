#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "goldbach/primes.hpp"

namespace goldbach {

// Several estimator entry points take `primes`: an ascending list of primes
// starting at 2 that covers at least sqrt(two_n). The overloads without it
// build a small list on the fly, which is fine for one-off calls and wasteful
// inside a scan.

// Density of H_p: product over primes k < p of (k-1)/k.
double f_h(std::uint64_t p);

// First-order pair estimate: (n/2) * prod over odd p, p^2 <= 2n, of f/p with
// f = p-1 when p | 2n and p-2 otherwise.
double egp(std::uint64_t two_n);
double egp(std::uint64_t two_n, std::span<const std::uint64_t> primes);

// Two-factor relative probability factor; 0 below p^2.
double rpf_2f(double x, double p);

enum class PrimeSource { real, simulated };

// The values a multiplicative chain p <= r1 <= r2 <= ... may draw from:
// actual primes >= p, or the simulated series that starts at p.
class ChainSource {
 public:
  static ChainSource real_primes(std::uint64_t p, double bound);
  static ChainSource simulated(double start, double bound);
  static ChainSource make(double p, double bound, PrimeSource kind);

  PrimeSource kind() const noexcept { return kind_; }
  double start() const noexcept { return start_; }
  double bound() const noexcept { return bound_; }
  std::span<const double> values() const noexcept { return values_; }

 private:
  PrimeSource kind_ = PrimeSource::real;
  double start_ = 0.0;
  double bound_ = 0.0;
  std::vector<double> values_;
};

// Largest chain value trpf can touch for (x, p, k).
double trpf_chain_bound(double x, double p, int k);

/// Total relative probability factor for k-factor multiples of p at x.
///
/// Sums (e^gamma / prod r) / log_p(x / (p prod r)) over nondecreasing chains
/// p <= r_1 <= ... <= r_{k-2} drawn from `source`, where the j-th chain value
/// must satisfy p * r_1 ... r_{j-1} * r_j^(k-1-j) <= x (the square-root bound
/// on the last free variable, the cube root on the one before, and so on).
/// k = 2 has no chain and reduces to rpf_2f. Zero for x < p^k.
double trpf(double x, double p, int k, const ChainSource& source);
double trpf(double x, double p, int k, PrimeSource kind);

struct GridSpec {
  double lo = 1.0;
  double hi = 5.0;
  std::size_t steps = 401;
};

struct TrpfCurve {
  double p = 0.0;
  std::vector<double> grid;                       // log_p(x)
  std::array<std::vector<double>, 4> per_factor;  // k = 2..5
  std::vector<double> total;

  const std::vector<double>& factor(int k) const { return per_factor.at(static_cast<std::size_t>(k - 2)); }
};

// Samples factor counts in [k_lo, k_hi] (subset of 2..5); others stay zero.
TrpfCurve trpf_curve(double p, const GridSpec& grid, PrimeSource kind, int k_lo = 2, int k_hi = 5);

// Closed-form integral of rpf_2f over [p^2, two_n]:
// e^gamma ln(p) p (li(two_n/p) - li(p)).
double integral_2f(std::uint64_t two_n, std::uint64_t p);

/// Integral of the three-factor TRPF over [p^3, two_n] for real primes.
///
/// Swapping sum and integral, each chain prime r contributes on
/// [p r^2, two_n] and integrates to p*r*(li(two_n/(pr)) - li(r)), so
///   I3 = e^gamma ln(p) * sum_{p <= r <= sqrt(two_n/p)} p (li(two_n/(pr)) - li(r)).
double integral_3f(std::uint64_t two_n, std::uint64_t p);
double integral_3f(std::uint64_t two_n, std::uint64_t p, std::span<const std::uint64_t> primes);

// The three-factor closed form exactly as usually printed:
// e^g ln p [(Li(x/p) - Li(x/p^2)) - x(ln ln(x/p) + ln 2 - ln ln(x/p^2))] from p^3 to two_n.
// Kept for comparison only; it is not an antiderivative of the TRPF sum.
double integral_3f_printed(std::uint64_t two_n, std::uint64_t p);

enum class AlphaCase { one, i2_i3, i2, zero };

std::string_view to_string(AlphaCase c) noexcept;

struct AlphaValue {
  double value = 0.0;
  AlphaCase kind = AlphaCase::zero;
};

// Piecewise average TRPF up to `upper`, keyed on log_p(upper). `upper` is the
// integration limit: 2n in general, n for the divisor case of the improved
// estimate, so it need not be even.
AlphaValue alpha_detail(std::uint64_t upper, std::uint64_t p, std::span<const std::uint64_t> primes);
double alpha(std::uint64_t upper, std::uint64_t p);

struct AlphaEntry {
  std::uint64_t p = 0;
  double alpha = 0.0;
  AlphaCase kind = AlphaCase::zero;
  bool divides = false;
  double alpha_at_n = 0.0;  // only meaningful when divides
};

struct AlphaProfile {
  std::uint64_t two_n = 0;
  std::vector<AlphaEntry> entries;  // odd pen primes, ascending
};

AlphaProfile alpha_profile(std::uint64_t two_n);

struct IgpResult {
  double value = 0.0;
  // Pen divisors p with p^2 > n: alpha(n, p) = 0 so they eliminate nothing,
  // unlike the (p-1)/p factor of the first-order estimate.
  std::vector<std::uint64_t> inert_divisors;
};

// Improved estimate: f = p - alpha(n, p) when p | 2n, else p - 2 alpha(2n, p).
IgpResult igp_detail(std::uint64_t two_n, std::span<const std::uint64_t> primes);
double igp(std::uint64_t two_n);
double igp(std::uint64_t two_n, std::span<const std::uint64_t> primes);

double egp_b2_closed(double two_n, double C);

struct B2Constants {
  double c_partial = 0.0;
  double C_partial = 0.0;
  std::uint64_t cutoff = 0;
};

// c = ln(cutoff) prod_{odd p <= cutoff} (p-2)/(p-1), C = 2 c e^-gamma.
B2Constants mertens_partial(std::uint64_t cutoff, const PrimalityTable& table);

}  // namespace goldbach
