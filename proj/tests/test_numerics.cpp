#include <doctest.h>

#include <cmath>
#include <limits>

#include "goldbach/error.hpp"
#include "goldbach/numerics.hpp"
#include "oracles.hpp"

using namespace goldbach::numerics;
using goldbach::DomainError;
using goldbach::InvalidArgument;
using goldbach::NumericError;

TEST_CASE("constants") {
  const auto k = constants();
  CHECK(k.gamma > 0.5772156);
  CHECK(k.gamma < 0.5772157);
  CHECK(k.e_gamma > 1.78107);
  CHECK(k.e_gamma < 1.78108);
  CHECK(std::abs(k.e_gamma - std::exp(k.gamma)) / k.e_gamma < 1e-12);
  CHECK(k.li2 == doctest::Approx(1.0451637801).epsilon(1e-10));
}

TEST_CASE("li frozen values") {
  // Reference digits from a 30-digit evaluation; the quadrature cross-check
  // below re-derives them independently.
  CHECK(li(2.0) == doctest::Approx(1.04516378011749278).epsilon(1e-12));
  CHECK(li(10.0) == doctest::Approx(6.16559950478729794).epsilon(1e-12));
  CHECK(li(1000.0) == doctest::Approx(177.609657990152227).epsilon(1e-12));
  CHECK(li(1e6) == doctest::Approx(78627.5491594621819).epsilon(1e-12));
  CHECK(li(1e12) == doctest::Approx(37607950280.8048655).epsilon(1e-10));
  CHECK(li(1.0000001) == doctest::Approx(-15.5408799360567873).epsilon(1e-10));
  CHECK(li(1.000001) == doctest::Approx(-13.2382943930627829).epsilon(1e-10));
  CHECK(std::isfinite(li(1.0000001)));
  CHECK_THROWS_AS(li(1.0), DomainError);
  CHECK_THROWS_AS(li(0.5), DomainError);
}

TEST_CASE("li series agrees with principal-value quadrature") {
  for (double x : {2.0, 10.0, 1e3, 1e6}) {
    const double series = li(x);
    const double quad = oracle::li_by_quadrature(x);
    CHECK_MESSAGE(std::abs(series - quad) <= 1e-9 * std::abs(quad), "x = " << x << " series " << series
                                                                          << " quad " << quad);
  }
}

TEST_CASE("offset li") {
  CHECK(offset_li(2.0) == 0.0);
  CHECK(offset_li(10.0) == doctest::Approx(5.1204357247).epsilon(1e-10));
  CHECK(offset_li(1000.0) == doctest::Approx(176.564494210034734).epsilon(1e-12));
  CHECK_THROWS_AS(offset_li(1.9), DomainError);

  double prev = offset_li(2.0);
  for (int i = 1; i <= 100; ++i) {
    const double x = 2.0 * std::pow(10.0, i * 0.08);
    const double v = offset_li(x);
    REQUIRE(v > prev);
    prev = v;
  }
}

TEST_CASE("quadrature") {
  CHECK(quadrature([](double x) { return x * x; }, 0.0, 1.0, 1e-9) == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
  CHECK(quadrature([](double t) { return 1.0 / std::log(t); }, 2.0, 10.0, 1e-9) ==
        doctest::Approx(5.1204357247).epsilon(1e-9));
  CHECK(quadrature([](double) { return 1.0; }, 5.0, 5.0, 1e-9) == 0.0);

  // Cubics are integrated exactly.
  for (int i = 0; i < 20; ++i) {
    const double a = -1.0 + 0.3 * i, b = a + 0.7 + 0.11 * i;
    const double c3 = 0.5 - 0.07 * i, c2 = -1.3 + 0.2 * i, c1 = 0.9, c0 = -2.0 + 0.1 * i;
    auto f = [=](double x) { return ((c3 * x + c2) * x + c1) * x + c0; };
    auto prim = [=](double x) { return ((c3 / 4 * x + c2 / 3) * x + c1 / 2) * x * x + c0 * x; };
    const double exact = prim(b) - prim(a);
    CHECK(quadrature(f, a, b, 1e-12) == doctest::Approx(exact).epsilon(1e-12));
  }

  CHECK_THROWS_AS(quadrature([](double x) { return x; }, 1.0, 0.0, 1e-9), InvalidArgument);
  CHECK_THROWS_AS(quadrature([](double x) { return x; }, 0.0, 1.0, 1e-2), InvalidArgument);
  CHECK_THROWS_AS(quadrature([](double x) { return x; }, 0.0, 1.0, 1e-13), InvalidArgument);
  try {
    quadrature([](double x) { return x > 0.5 ? std::numeric_limits<double>::infinity() : 1.0; }, 0.0, 1.0, 1e-9);
    FAIL("expected a numeric error");
  } catch (const NumericError& e) {
    CHECK(std::string(e.what()).find("x = ") != std::string::npos);
  }
}
