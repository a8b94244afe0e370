#pragma once

#include <complex>

#include "relresp/occupation.hpp"

namespace relresp {

enum class VacuumBranch { spacelike, subthreshold, above_threshold };

struct VacuumScalar {
  std::complex<double> value;
  VacuumBranch branch = VacuumBranch::spacelike;
};

/// Renormalized one-loop vacuum scalar C*(c^2), continued with omega -> omega + i0.
///
/// Real for c^2 < 1. Above the pair threshold Im C* = e^2/(12 pi) (1 + 1/(2c^2))
/// sqrt(1 - 1/c^2) > 0. Near c^2 = 0 the power series is summed instead of the
/// closed form, which cancels there. Throws KinematicError on the light cone and
/// at the threshold.
VacuumScalar c_star(double c2, const MediumState& ms);

}  // namespace relresp
