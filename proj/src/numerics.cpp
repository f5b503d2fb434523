#include "goldbach/numerics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <sstream>
#include <vector>

#include "goldbach/error.hpp"

namespace goldbach::numerics {

double li(double x) {
  if (!(x > 1.0)) {
    std::ostringstream msg;
    msg << "li(x) requires x > 1, got " << x;
    throw DomainError(msg.str());
  }
  const double lx = std::log(x);
  double term = 1.0;  // (-1)^(n-1) (ln x)^n / (n! 2^(n-1)), built incrementally
  double inner = 0.0;
  double sum = 0.0;
  for (int n = 1; n < 1000; ++n) {
    term *= (n == 1) ? lx : -lx / (2.0 * n);
    if (n % 2 == 1) inner += 1.0 / n;
    const double contrib = term * inner;
    sum += contrib;
    if (n > lx && std::abs(contrib) <= std::numeric_limits<double>::epsilon() * std::abs(sum) * 0.5) {
      break;
    }
  }
  return kEulerGamma + std::log(lx) + std::sqrt(x) * sum;
}

double offset_li(double x) {
  if (!(x >= 2.0)) {
    std::ostringstream msg;
    msg << "offset li requires x >= 2, got " << x;
    throw DomainError(msg.str());
  }
  if (x == 2.0) return 0.0;
  return li(x) - kLiOfTwo;
}

namespace {

// Kronrod 15-point abscissae/weights with the embedded 7-point Gauss rule.
constexpr std::array<double, 8> kXk{
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWk{
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg{
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
  double a;
  double b;
  double value;
  double error;
  double abs_value;
  bool operator<(const Segment& o) const { return error < o.error; }
};

double sample(const RealFunction& f, double x) {
  const double y = f(x);
  if (!std::isfinite(y)) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "integrand is not finite at x = " << x;
    throw NumericError(msg.str());
  }
  return y;
}

Segment kronrod(const RealFunction& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  const double fc = sample(f, c);
  double k15 = fc * kWk[7];
  double g7 = fc * kWg[3];
  double abs15 = std::abs(k15);
  for (int i = 0; i < 7; ++i) {
    const double dx = h * kXk[static_cast<std::size_t>(i)];
    const double f1 = sample(f, c - dx);
    const double f2 = sample(f, c + dx);
    k15 += kWk[static_cast<std::size_t>(i)] * (f1 + f2);
    abs15 += kWk[static_cast<std::size_t>(i)] * (std::abs(f1) + std::abs(f2));
    if (i % 2 == 1) g7 += kWg[static_cast<std::size_t>(i / 2)] * (f1 + f2);
  }
  return {a, b, k15 * h, std::abs((k15 - g7) * h), abs15 * std::abs(h)};
}

}  // namespace

double quadrature(const RealFunction& f, double a, double b, double rel_tol) {
  if (!(a <= b)) throw InvalidArgument("quadrature requires a <= b");
  if (!(rel_tol >= 1e-12 && rel_tol <= 1e-3)) {
    throw InvalidArgument("quadrature rel_tol must lie in [1e-12, 1e-3]");
  }
  if (a == b) return 0.0;

  constexpr int kMaxSegments = 4000;
  std::priority_queue<Segment> heap;
  Segment first = kronrod(f, a, b);
  double total = first.value;
  double error = first.error;
  double abs_total = first.abs_value;
  heap.push(first);

  const double eps = std::numeric_limits<double>::epsilon();
  for (int n = 1; n < kMaxSegments; ++n) {
    const double target = std::max(rel_tol * std::abs(total), 50.0 * eps * abs_total);
    if (error <= target) return total;
    Segment worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (mid <= worst.a || mid >= worst.b) break;  // interval exhausted at double resolution
    Segment left = kronrod(f, worst.a, mid);
    Segment right = kronrod(f, mid, worst.b);
    total += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    abs_total += left.abs_value + right.abs_value - worst.abs_value;
    heap.push(left);
    heap.push(right);
  }
  // Recompute sums in a fixed order to shed the drift of incremental updates.
  std::vector<Segment> parts;
  while (!heap.empty()) {
    parts.push_back(heap.top());
    heap.pop();
  }
  std::sort(parts.begin(), parts.end(), [](const Segment& x, const Segment& y) { return x.a < y.a; });
  total = 0.0;
  error = 0.0;
  abs_total = 0.0;
  for (const auto& s : parts) {
    total += s.value;
    error += s.error;
    abs_total += s.abs_value;
  }
  if (error <= std::max(rel_tol * std::abs(total), 50.0 * eps * abs_total)) return total;
  std::ostringstream msg;
  msg << "quadrature did not reach rel_tol " << rel_tol << " on [" << a << ", " << b
      << "]; error estimate " << error << " for value " << total;
  throw NumericError(msg.str());
}

}  // namespace goldbach::numerics
