#include "relresp/occupation.hpp"

#include <algorithm>
#include <cmath>

#include "relresp/errors.hpp"

namespace relresp {

namespace {

// 1/(e^z + 1) with the exponential clamped to the double range.
double fermi_term(double z) {
  if (z > 700.0) return 0.0;
  if (z < -700.0) return 1.0;
  return 1.0 / (std::exp(z) + 1.0);
}

double step(double x, double edge) {
  if (x < edge) return 1.0;
  if (x > edge) return 0.0;
  return 0.5;
}

}  // namespace

MediumState MediumState::make(double t, double xi, double alpha) {
  if (!(t >= 0.0) || !std::isfinite(t)) throw InvalidArgument("temperature must be >= 0");
  if (!std::isfinite(xi)) throw InvalidArgument("chemical potential must be finite");
  if (!(alpha > 0.0)) throw InvalidArgument("coupling alpha must be positive");
  return MediumState{t, xi, alpha};
}

double n_fermi(double x, const MediumState& ms) {
  if (ms.t == 0.0) {
    // Only one of the particle / antiparticle steps can be populated above x = 1.
    return step(x, std::abs(ms.xi));
  }
  return fermi_term((x - ms.xi) / ms.t) + fermi_term((x + ms.xi) / ms.t);
}

double x_cutoff(const MediumState& ms) {
  return std::max(1.0, std::abs(ms.xi)) + 40.0 * ms.t;
}

}  // namespace relresp
