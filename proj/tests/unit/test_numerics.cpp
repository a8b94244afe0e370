#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "relresp/numerics.hpp"

using namespace relresp;

TEST_CASE("interior logarithmic singularity") {
  const double bp[] = {0.5};
  const auto r = integrate_adaptive([](double x) { return std::log(std::abs(x - 0.5)); }, 0.0, 1.0, bp);
  CHECK(r.value == doctest::Approx(-1.0 - std::log(2.0)).epsilon(1e-10));
  CHECK(r.error_estimate >= 0.0);
  CHECK(r.evaluations > 0);
}

TEST_CASE("constant and polynomials") {
  CHECK(integrate_adaptive([](double) { return 1.0; }, 0.0, 3.0).value == doctest::Approx(3.0).epsilon(1e-15));
  // GK15 integrates degree 22 exactly on a single panel.
  const auto r = integrate_adaptive([](double x) { return std::pow(x, 20) - 3.0 * x * x; }, -1.0, 2.0);
  const double exact = (std::pow(2.0, 21) + 1.0) / 21.0 - 9.0;
  CHECK(std::abs(r.value - exact) < 1e-14 * std::abs(exact) * 10);
}

TEST_CASE("mass-shell integral") {
  const auto r = integrate_adaptive([](double x) { return std::sqrt(x * x - 1.0); }, 1.0, 2.0);
  CHECK(r.value == doctest::Approx(0.5 * (2.0 * std::sqrt(3.0) - std::log(2.0 + std::sqrt(3.0)))).epsilon(1e-11));
}

TEST_CASE("breakpoints are never evaluated") {
  const std::vector<double> bp = {0.25, 0.7};
  bool touched = false;
  integrate_adaptive(
      [&](double x) {
        if (x == 0.0 || x == 1.0 || x == 0.25 || x == 0.7) touched = true;
        return std::log(std::abs((x - 0.25) * (x - 0.7)));
      },
      0.0, 1.0, bp);
  CHECK_FALSE(touched);
}

TEST_CASE("empty interval") {
  CHECK(integrate_adaptive([](double) { return 1.0; }, 2.0, 2.0).value == 0.0);
  CHECK(integrate_adaptive([](double) { return 1.0; }, 2.0, 1.0).value == 0.0);
}

TEST_CASE("NaN integrand is reported with its abscissa") {
  try {
    integrate_adaptive([](double x) { return x > 0.5 ? std::nan("") : 1.0; }, 0.0, 1.0);
    FAIL("expected IntegrandNaN");
  } catch (const IntegrandNaN& e) {
    CHECK(e.abscissa() > 0.5);
  }
}

TEST_CASE("tolerance failure carries the best estimate") {
  QuadratureOptions opts;
  opts.max_panels = 20;
  try {
    integrate_adaptive([](double x) { return std::sin(1.0 / x) / x; }, 1e-6, 1.0, {}, opts);
    FAIL("expected ToleranceNotReached");
  } catch (const ToleranceNotReached& e) {
    CHECK(std::isfinite(e.best().value));
    CHECK(e.best().error_estimate > 0.0);
  }
}

TEST_CASE("tighter tolerance does not raise the error estimate") {
  auto f = [](double x) { return std::log(std::abs(x * x - 2.0)) * std::exp(-x); };
  const double bp[] = {std::sqrt(2.0)};
  QuadratureOptions loose, tight;
  loose.rel_tol = 1e-6;
  tight.rel_tol = 5e-7;
  const auto a = integrate_adaptive(f, 1.0, 3.0, bp, loose);
  const auto b = integrate_adaptive(f, 1.0, 3.0, bp, tight);
  CHECK(b.error_estimate <= a.error_estimate);
}

TEST_CASE("sign scan") {
  const std::vector<double> g1 = {0.0, 0.5, 1.5, 2.0};
  const auto s1 = scan_sign_changes([](double x) { return x * x - 1.0; }, g1);
  REQUIRE(s1.brackets.size() == 1);
  CHECK(s1.brackets[0].lo == 0.5);
  CHECK(s1.brackets[0].hi == 1.5);

  CHECK(scan_sign_changes([](double) { return 1.0; }, g1).brackets.empty());

  const std::vector<double> g2 = {1, 2, 3, 4, 5, 6, 7};
  const auto s2 = scan_sign_changes([](double x) { return std::sin(x); }, g2);
  REQUIRE(s2.brackets.size() == 2);
  CHECK(s2.brackets[0].lo == 3.0);
  CHECK(s2.brackets[1].lo == 6.0);

  const auto s3 = scan_sign_changes([](double x) { return x == 2.0 ? std::nan("") : x - 4.5; }, g2);
  CHECK(s3.nan_count == 1);
  CHECK(s3.brackets.size() == 1);

  const std::vector<double> bad = {1.0, 1.0};
  CHECK_THROWS_AS(scan_sign_changes([](double x) { return x; }, bad), InvalidArgument);
}

TEST_CASE("bracketed roots") {
  CHECK(find_root_bracketed([](double x) { return x * x - 2.0; }, {1.0, 2.0}) ==
        doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
  CHECK(std::abs(find_root_bracketed([](double x) { return x; }, {-1.0, 1.0})) < 1e-12);
  CHECK(find_root_bracketed([](double x) { return std::cos(x); }, {1.0, 2.0}) ==
        doctest::Approx(std::numbers::pi / 2).epsilon(1e-12));
  CHECK_THROWS_AS(find_root_bracketed([](double x) { return x * x + 1.0; }, {-1.0, 1.0}), InvalidArgument);
}

TEST_CASE("root finder stays inside the bracket") {
  bool outside = false;
  find_root_bracketed(
      [&](double x) {
        if (x < 0.2 || x > 3.0) outside = true;
        return std::tanh(10.0 * (x - 0.3));
      },
      {0.2, 3.0});
  CHECK_FALSE(outside);
}
