#include <doctest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "relresp/errors.hpp"
#include "relresp/vacuum.hpp"

using namespace relresp;

namespace {
const MediumState kMs = MediumState::make(0.0, 1.0);
const double kE2 = kMs.e2();
}  // namespace

TEST_CASE("frozen values") {
  for (const auto& f : oracle::kFrozenVacuum) {
    const auto v = c_star(f.c2, kMs).value;
    CHECK(v.real() == doctest::Approx(f.re).epsilon(1e-11));
    CHECK(v.imag() == doctest::Approx(f.im).epsilon(1e-11));
  }
}

TEST_CASE("matches the Feynman-parameter integral on all branches") {
  for (double c2 : {-50.0, -3.0, -0.5, -0.11, -0.05, -1e-3, 1e-3, 0.05, 0.11, 0.3, 0.7, 0.99,
                    1.01, 1.5, 4.0, 100.0}) {
    const auto v = c_star(c2, kMs).value;
    const auto ref = oracle::feynman_c_star(c2, kE2);
    CAPTURE(c2);
    CHECK(std::abs(v - ref) <= 1e-10 * std::abs(ref));
  }
}

TEST_CASE("branches") {
  CHECK(c_star(-1.0, kMs).branch == VacuumBranch::spacelike);
  CHECK(c_star(0.5, kMs).branch == VacuumBranch::subthreshold);
  CHECK(c_star(2.0, kMs).branch == VacuumBranch::above_threshold);
  CHECK(c_star(0.5, kMs).value.imag() == 0.0);
  CHECK(c_star(-0.5, kMs).value.imag() == 0.0);
}

TEST_CASE("absorption above threshold") {
  for (double c2 : {1.1, 2.0, 10.0}) {
    const double kappa = std::sqrt(1.0 - 1.0 / c2);
    const double expected = kE2 / (12.0 * std::numbers::pi) * (1.0 + 0.5 / c2) * kappa;
    CHECK(c_star(c2, kMs).value.imag() == doctest::Approx(expected).epsilon(1e-14));
  }
}

TEST_CASE("series and closed form agree where they meet") {
  const double lo = std::nextafter(0.1, 0.0);
  for (double c2 : {0.1, -0.1}) {
    const double below = c_star(c2 > 0 ? lo : -lo, kMs).value.real();
    const double at = c_star(c2, kMs).value.real();
    CHECK(below == doctest::Approx(at).epsilon(1e-12));
  }
}

TEST_CASE("vanishes at the light cone") {
  CHECK(std::abs(c_star(1e-8, kMs).value) < 1e-10);
  CHECK(std::abs(c_star(-1e-8, kMs).value) < 1e-10);
  CHECK(c_star(1e-4, kMs).value.real() ==
        doctest::Approx(kE2 * 1e-4 / (15.0 * std::numbers::pi * std::numbers::pi)).epsilon(1e-3));
}

TEST_CASE("monotone in the spacelike region") {
  double prev = c_star(-1e-6, kMs).value.real();
  for (double c2 = -0.01; c2 > -100.0; c2 *= 1.3) {
    const double v = c_star(c2, kMs).value.real();
    CHECK(v < prev);
    prev = v;
  }
}

TEST_CASE("rejections") {
  CHECK_THROWS_AS(c_star(0.0, kMs), KinematicError);
  CHECK_THROWS_AS(c_star(1.0, kMs), KinematicError);
  try {
    c_star(1.0 + 1e-12, kMs);
  } catch (const KinematicError& e) {
    CHECK(e.fault() == KinematicFault::pair_threshold);
  }
}
