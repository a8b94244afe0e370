#pragma once

#include <complex>

#include "relresp/kinematics.hpp"
#include "relresp/numerics.hpp"
#include "relresp/occupation.hpp"

namespace relresp {

struct ResponseScalars {
  std::complex<double> A, B, C, D;
};

/// Real and imaginary parts of one scalar pair (B*, D*).
struct ScalarPair {
  double B = 0.0;
  double D = 0.0;
};

/// Re f1 = ln|((c^2 - b y)^2 - a^2 x^2) / ((c^2 + b y)^2 - a^2 x^2)|, y = sqrt(x^2 - 1).
double r1(double x, const KinematicPoint& p);
/// Re f2 = (1/2) ln|(c^4 - (a x - b y)^2) / (c^4 - (a x + b y)^2)|.
double r2(double x, const KinematicPoint& p);

/// Absorption window [x_l, a + b gamma] of regions I and III, or empty for region II.
struct AbsorptionWindow {
  bool open = false;
  double x_lower = 0.0;
  double x_upper = 0.0;
  double sign = 0.0;  // sign(c^2)
};
AbsorptionWindow absorption_window(const KinematicPoint& p);

/// Im B*, Im D* from the windowed occupation integrals. Exactly zero in region II.
ScalarPair im_scalars(const KinematicPoint& p, const MediumState& ms,
                      const QuadratureOptions& opts = {});

/// Re B* = -e^2/(4 pi^2 c^2) [R + R_B], Re D* = -e^2/(4 pi^2 c^2) [R + R_D],
/// integrated up to x_cutoff with breakpoints at |a +- b gamma| and |xi|.
ScalarPair re_scalars(const KinematicPoint& p, const MediumState& ms,
                      const QuadratureOptions& opts = {});

/// A* = D* + (1 + 3c^2/(2b^2)) B*.
std::complex<double> a_from_bd(const KinematicPoint& p, std::complex<double> B,
                               std::complex<double> D);

/// Full finite-temperature scalars; C* from the vacuum module or zero.
ResponseScalars scalars(const KinematicPoint& p, const MediumState& ms, bool include_vacuum,
                        const QuadratureOptions& opts = {});

}  // namespace relresp
