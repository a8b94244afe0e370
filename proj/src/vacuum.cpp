#include "relresp/vacuum.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "relresp/errors.hpp"
#include "relresp/kinematics.hpp"

namespace relresp {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSeriesRadius = 0.1;

// C*(c^2) = e^2/(2 pi^2) sum_n (4c^2)^n / n * ((n+1)!)^2 / (2n+3)!, |c^2| < 1.
double c_star_series(double c2, double e2) {
  const double z = 4.0 * c2;
  double coeff = 1.0 / 30.0;  // ((n+1)!)^2/(2n+3)! at n = 1
  double power = z;
  double sum = 0.0;
  for (int n = 1; n < 200; ++n) {
    const double term = power * coeff / n;
    sum += term;
    if (std::abs(term) <= 1e-18 * std::abs(sum)) break;
    coeff *= (n + 2.0) / (2.0 * (2.0 * n + 5.0));
    power *= z;
  }
  return e2 / (2.0 * kPi * kPi) * sum;
}

}  // namespace

VacuumScalar c_star(double c2, const MediumState& ms) {
  if (std::abs(c2) < kLightConeCutoff) {
    std::ostringstream msg;
    msg << "on light cone: |c^2| = " << std::abs(c2);
    throw KinematicError(KinematicFault::on_light_cone, msg.str());
  }
  if (std::abs(c2 - 1.0) < kLightConeCutoff) {
    std::ostringstream msg;
    msg << "pair threshold: c^2 = " << c2;
    throw KinematicError(KinematicFault::pair_threshold, msg.str());
  }

  const double e2 = ms.e2();
  VacuumScalar out;
  out.branch = c2 < 0.0   ? VacuumBranch::spacelike
               : c2 < 1.0 ? VacuumBranch::subthreshold
                          : VacuumBranch::above_threshold;

  if (std::abs(c2) < kSeriesRadius) {
    out.value = c_star_series(c2, e2);
    return out;
  }

  // h arccot(h) with h = sqrt(1/c^2 - 1), branch by branch.
  std::complex<double> h_arccot_h;
  switch (out.branch) {
    case VacuumBranch::spacelike: {
      const double k = std::sqrt(1.0 - 1.0 / c2);  // h = i k, k > 1
      h_arccot_h = k * std::atanh(1.0 / k);
      break;
    }
    case VacuumBranch::subthreshold: {
      const double h = std::sqrt(1.0 / c2 - 1.0);
      h_arccot_h = h * std::atan(1.0 / h);
      break;
    }
    case VacuumBranch::above_threshold: {
      const double kappa = std::sqrt(1.0 - 1.0 / c2);  // h = i kappa, kappa < 1
      h_arccot_h = {kappa * std::atanh(kappa), -0.5 * kPi * kappa};
      break;
    }
  }
  const std::complex<double> bracket =
      1.0 / 3.0 + 2.0 * (1.0 + 0.5 / c2) * (h_arccot_h - 1.0);
  out.value = -e2 / (12.0 * kPi * kPi) * bracket;
  if (out.branch != VacuumBranch::above_threshold) out.value = out.value.real();
  return out;
}

}  // namespace relresp
