#pragma once

#include <functional>

namespace goldbach::numerics {

inline constexpr double kEulerGamma = 0.57721566490153286060651209008240243;
inline constexpr double kExpGamma = 1.78107241799019798523650410310717954;
inline constexpr double kLiOfTwo = 1.04516378011749278484458888919461313;

struct Constants {
  double gamma;
  double e_gamma;
  double li2;
};

constexpr Constants constants() noexcept { return {kEulerGamma, kExpGamma, kLiOfTwo}; }

/// Logarithmic integral li(x) = PV integral of dt/ln t from 0 to x, for x > 1.
///
/// Evaluated with Ramanujan's series
///   li(x) = gamma + ln ln x + sqrt(x) * sum_n (-1)^(n-1) (ln x)^n / (n! 2^(n-1))
///                                      * sum_{k <= (n-1)/2} 1/(2k+1)
/// which converges for every x > 1 and needs roughly e*ln(x)/2 terms.
double li(double x);

// Offset form li(x) - li(2), defined for x >= 2.
double offset_li(double x);

using RealFunction = std::function<double(double)>;

/// Adaptive Gauss-Kronrod (7/15) integration of f over [a, b]. The interval
/// with the largest error estimate is bisected until the summed estimate is
/// within rel_tol of the integral (or at the rounding floor).
double quadrature(const RealFunction& f, double a, double b, double rel_tol);

}  // namespace goldbach::numerics
