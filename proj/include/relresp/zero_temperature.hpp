#pragma once

#include "relresp/finite_temperature.hpp"
#include "relresp/kinematics.hpp"
#include "relresp/occupation.hpp"

namespace relresp {

// Polynomial coefficients of the T=0 real parts and of the I_j biquadratic.
struct ZeroTCoefficients {
  double M_B = 0.0, N_B = 0.0;
  double M_D = 0.0, N_D = 0.0;
  double C_B = 1.0 / 3.0, C_D = 0.0;
  double frakA = 0.0, frakB = 0.0, frakC = 0.0;
};

ZeroTCoefficients zero_t_coefficients(const KinematicPoint& p);

struct BiquadraticIntegrals {
  double I0 = 0.0;
  double I2 = 0.0;
};

/// I_j = int_0^{t_F} t^j / (C t^4 + B t^2 + A) dt in closed form (principal value when
/// a real root t_+- lies inside (0, t_F)).
///
/// Throws SubregionBoundaryError if t_F coincides with a root, ConsistencyError if a
/// real-branch root has t^2 <= 0, and InvalidArgument when the two real roots are
/// numerically degenerate (a b |gamma| -> 0).
BiquadraticIntegrals integrals_Ij(const KinematicPoint& p, const FermiSurface& fs);

/// Closed-form T=0 imaginary parts, dispatched on the subregion A-D.
double im_B_zero(const KinematicPoint& p, const FermiSurface& fs, double e2);
double im_D_zero(const KinematicPoint& p, const FermiSurface& fs, double e2);

/// Closed-form T=0 real parts from the U + W + Z decomposition. Throws
/// SubregionBoundaryError when a logarithm argument at x_F vanishes.
double re_B_zero(const KinematicPoint& p, const FermiSurface& fs, double e2);
double re_D_zero(const KinematicPoint& p, const FermiSurface& fs, double e2);

/// All four scalars at T=0; C* included on request.
ResponseScalars zero_t_scalars(const KinematicPoint& p, const FermiSurface& fs,
                               const MediumState& ms, bool include_vacuum);

}  // namespace relresp
