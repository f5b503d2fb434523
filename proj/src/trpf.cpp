#include <cmath>
#include <string>

#include "goldbach/error.hpp"
#include "goldbach/estimator.hpp"
#include "goldbach/numerics.hpp"
#include "int_math.hpp"

namespace goldbach {

using numerics::kExpGamma;

double rpf_2f(double x, double p) {
  if (!(x >= 1.0)) throw InvalidArgument("rpf_2f needs x >= 1");
  if (!(p > 2.0)) throw InvalidArgument("rpf_2f needs p > 2");
  if (x < p * p) return 0.0;
  return kExpGamma / (std::log(x / p) / std::log(p));
}

ChainSource ChainSource::real_primes(std::uint64_t p, double bound) {
  if (!detail::is_prime_trial(p)) throw InvalidArgument(std::to_string(p) + " is not prime");
  ChainSource s;
  s.kind_ = PrimeSource::real;
  s.start_ = static_cast<double>(p);
  s.bound_ = bound;
  const auto top = bound < 2.0 ? std::uint64_t{0} : static_cast<std::uint64_t>(std::floor(bound));
  for (auto q : small_primes(top)) {
    if (q >= p) s.values_.push_back(static_cast<double>(q));
  }
  return s;
}

ChainSource ChainSource::simulated(double start, double bound) {
  ChainSource s;
  s.kind_ = PrimeSource::simulated;
  s.start_ = start;
  s.bound_ = bound;
  s.values_ = simulated_primes_through(start, bound).values;
  return s;
}

ChainSource ChainSource::make(double p, double bound, PrimeSource kind) {
  if (kind == PrimeSource::simulated) return simulated(p, bound);
  if (!(p >= 2.0) || p != std::floor(p)) {
    throw InvalidArgument("a real-prime chain needs an integer prime p");
  }
  return real_primes(static_cast<std::uint64_t>(p), bound);
}

double trpf_chain_bound(double x, double p, int k) {
  if (k <= 2) return 0.0;
  return std::sqrt(x / std::pow(p, k - 2));
}

namespace {

// Depth-first walk over nondecreasing chains. `prod` is p * r_1 ... r_depth,
// `inv` is 1 / (r_1 ... r_depth).
double chain_sum(double x, double log_p, int k, std::span<const double> vals, int depth,
                 std::size_t first, double prod, double inv) {
  if (depth == k - 2) return kExpGamma * inv * log_p / std::log(x / prod);
  const int remaining = k - 1 - depth;
  double acc = 0.0;
  for (std::size_t i = first; i < vals.size(); ++i) {
    const double r = vals[i];
    double rm = r;
    for (int j = 1; j < remaining; ++j) rm *= r;
    if (prod * rm > x) break;
    acc += chain_sum(x, log_p, k, vals, depth + 1, i, prod * r, inv / r);
  }
  return acc;
}

}  // namespace

double trpf(double x, double p, int k, const ChainSource& source) {
  if (k < 2 || k > 5) throw InvalidArgument("factor count must be in 2..5, got " + std::to_string(k));
  if (!(x >= 1.0)) throw InvalidArgument("trpf needs x >= 1");
  if (!(p > 2.0)) throw InvalidArgument("trpf needs p > 2");
  if (x < std::pow(p, k)) return 0.0;
  if (k == 2) return rpf_2f(x, p);
  if (source.start() != p) throw InvalidArgument("chain source does not start at p");
  const double need = trpf_chain_bound(x, p, k);
  if (source.bound() < need) {
    throw InvalidArgument("chain source does not reach the bound needed at this x");
  }
  return chain_sum(x, std::log(p), k, source.values(), 0, 0, p, 1.0);
}

double trpf(double x, double p, int k, PrimeSource kind) {
  if (k < 2 || k > 5) throw InvalidArgument("factor count must be in 2..5, got " + std::to_string(k));
  if (!(p > 2.0)) throw InvalidArgument("trpf needs p > 2");
  if (k == 2 || x < std::pow(p, k)) return trpf(x, p, k, ChainSource{});
  return trpf(x, p, k, ChainSource::make(p, trpf_chain_bound(x, p, k), kind));
}

TrpfCurve trpf_curve(double p, const GridSpec& grid, PrimeSource kind, int k_lo, int k_hi) {
  if (!(grid.lo >= 1.0) || !(grid.lo < grid.hi)) throw InvalidArgument("grid needs 1 <= lo < hi");
  if (grid.steps < 2) throw InvalidArgument("grid needs at least 2 steps");
  if (k_lo < 2 || k_hi > 5 || k_lo > k_hi) throw InvalidArgument("factor range must lie in 2..5");
  if (!(p > 2.0)) throw InvalidArgument("trpf needs p > 2");

  TrpfCurve curve;
  curve.p = p;
  curve.grid.resize(grid.steps);
  for (std::size_t i = 0; i < grid.steps; ++i) {
    curve.grid[i] = grid.lo + (grid.hi - grid.lo) * static_cast<double>(i) / static_cast<double>(grid.steps - 1);
  }
  for (auto& v : curve.per_factor) v.assign(grid.steps, 0.0);
  curve.total.assign(grid.steps, 0.0);

  ChainSource source;
  if (k_hi >= 3) {
    const double x_max = std::pow(p, grid.hi);
    source = ChainSource::make(p, trpf_chain_bound(x_max, p, 3), kind);
  } else if (kind == PrimeSource::real) {
    ChainSource::make(p, 0.0, kind);  // validates p
  }

  for (std::size_t i = 0; i < grid.steps; ++i) {
    const double g = curve.grid[i];
    const double x = std::pow(p, g);
    double total = 0.0;
    for (int k = k_lo; k <= k_hi; ++k) {
      const double v = g < k ? 0.0 : trpf(x, p, k, source);
      curve.per_factor[static_cast<std::size_t>(k - 2)][i] = v;
      total += v;
    }
    curve.total[i] = total;
  }
  return curve;
}

}  // namespace goldbach
