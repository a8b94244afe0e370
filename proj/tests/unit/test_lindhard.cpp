#include <doctest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "relresp/errors.hpp"
#include "relresp/lindhard.hpp"
#include "relresp/zero_temperature.hpp"

using namespace relresp;

namespace {
const MediumState kMs = MediumState::make(0.0, 1.0);
const double kE2 = kMs.e2();
}  // namespace

TEST_CASE("case labels") {
  CHECK(nr_case(NRPoint::make(0.002, 0.1, 0.3)) == NRCase::c2c);
  CHECK(nr_case(NRPoint::make(0.002, 0.1, 0.01)) == NRCase::c2a);
  // omega = 2 eps_q: thresholds eps_q/q = q/2 and 3 eps_q/q = 3q/2.
  CHECK(nr_case(NRPoint::make(0.01, 0.1, 0.1)) == NRCase::c1b);
  CHECK(nr_case(NRPoint::make(0.01, 0.1, 0.01)) == NRCase::c1a);
  CHECK(nr_case(NRPoint::make(0.01, 0.1, 0.5)) == NRCase::c1c);
  CHECK(nr_case(NRPoint::make(0.004, 0.1, 0.05)) == NRCase::c2b);
  CHECK(to_string(NRCase::c2c) == "2c");
}

TEST_CASE("values") {
  CHECK(nr_im_B(NRPoint::make(0.002, 0.1, 0.3), kMs) ==
        doctest::Approx(kE2 / std::numbers::pi).epsilon(1e-13));
  CHECK(nr_im_B(NRPoint::make(0.002, 0.1, 0.01), kMs) == 0.0);
  CHECK(nr_im_B(NRPoint::make(0.01, 0.1, 0.01), kMs) == 0.0);
}

TEST_CASE("agrees with the momentum-window integral") {
  for (double w = 1e-4; w < 0.03; w *= 1.7) {
    for (double q = 1e-3; q < 0.4; q *= 1.9) {
      for (double pF : {0.01, 0.05, 0.2}) {
        const double ref = oracle::lindhard_window(w, q, pF, kE2);
        CHECK(nr_im_B(NRPoint::make(w, q, pF), kMs) ==
              doctest::Approx(ref).epsilon(1e-12).scale(kE2 / (q * q * q) * 1e-20));
      }
    }
  }
}

TEST_CASE("continuous across the b/c boundary") {
  // Cases b and c meet where pF = (omega + eps_q)/q.
  const double q = 0.1, pF = 0.2;
  const double omega = q * pF - 0.5 * q * q;
  const double below = nr_im_B(NRPoint::make(omega * (1 - 1e-12), q, pF), kMs);
  const double above = nr_im_B(NRPoint::make(omega * (1 + 1e-12), q, pF), kMs);
  CHECK(below == doctest::Approx(above).epsilon(1e-9));
}

TEST_CASE("labels change on the Fig. 3 curves") {
  const double q = 0.08, pF = 0.1, eq = 0.5 * q * q;
  const double upper = q * pF - eq;  // omega where pF = (omega + eps_q)/q
  CHECK(nr_case(NRPoint::make(upper * 0.999, q, pF)) != nr_case(NRPoint::make(upper * 1.001, q, pF)));
  const double lower = q * pF + eq;  // omega where pF = (omega - eps_q)/q
  CHECK(nr_case(NRPoint::make(lower * 0.999, q, pF)) == NRCase::c1b);
  CHECK(nr_case(NRPoint::make(lower * 1.001, q, pF)) == NRCase::c1a);
}

TEST_CASE("relativistic closed form reduces to the NR value") {
  const double xF = 1.0005;
  const FermiSurface fs = FermiSurface::from_energy(xF);
  const double pF = fs.yF;
  for (double q : {0.3 * pF, pF, 1.5 * pF}) {
    const double omega = 0.4 * (q * pF + 0.5 * q * q);
    const double rel = im_B_zero(derive_point(omega / 2, q / 2), fs, kE2);
    const double nr = nr_im_B(NRPoint::make(omega, q, pF), kMs);
    REQUIRE(nr > 0.0);
    CHECK(rel == doctest::Approx(nr).epsilon(0.02));
  }
}

TEST_CASE("validation") {
  CHECK_THROWS_AS(NRPoint::make(0.1, 0.0, 0.1), InvalidArgument);
  CHECK_THROWS_AS(NRPoint::make(-0.1, 0.1, 0.1), InvalidArgument);
  CHECK_THROWS_AS(NRPoint::make(0.1, 0.1, -0.1), InvalidArgument);
}
