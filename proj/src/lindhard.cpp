#include "relresp/lindhard.hpp"

#include <cmath>
#include <numbers>

#include "relresp/errors.hpp"

namespace relresp {

NRPoint NRPoint::make(double omega, double q, double pF) {
  if (!(q > 0.0) || !std::isfinite(q)) throw InvalidArgument("q must be positive and finite");
  if (!(pF >= 0.0) || !std::isfinite(pF)) throw InvalidArgument("pF must be non-negative");
  if (!(omega >= 0.0) || !std::isfinite(omega)) throw InvalidArgument("omega must be non-negative");
  return {omega, q, pF};
}

std::string_view to_string(NRCase c) {
  switch (c) {
    case NRCase::c1a: return "1a";
    case NRCase::c1b: return "1b";
    case NRCase::c1c: return "1c";
    case NRCase::c2a: return "2a";
    case NRCase::c2b: return "2b";
    case NRCase::c2c: return "2c";
  }
  return "?";
}

NRCase nr_case(const NRPoint& p) {
  const double eq = p.eps_q();
  const bool case1 = p.omega > eq;
  const double lower = std::abs(p.omega - eq) / p.q;
  const double upper = (p.omega + eq) / p.q;
  if (p.pF < lower || p.pF == 0.0) return case1 ? NRCase::c1a : NRCase::c2a;
  if (p.pF < upper) return case1 ? NRCase::c1b : NRCase::c2b;
  return case1 ? NRCase::c1c : NRCase::c2c;
}

double nr_im_B(const NRPoint& p, const MediumState& ms) {
  const double q3 = p.q * p.q * p.q;
  const double pref = ms.e2() / (2.0 * std::numbers::pi * q3);
  switch (nr_case(p)) {
    case NRCase::c1a:
    case NRCase::c2a:
      return 0.0;
    case NRCase::c1b:
    case NRCase::c2b: {
      const double eF = p.eps_F();
      const double shift = p.omega - p.eps_q();
      return pref * eF * (1.0 - shift * shift / (4.0 * eF * p.eps_q()));
    }
    case NRCase::c1c:
    case NRCase::c2c:
      return pref * p.omega;
  }
  return 0.0;
}

}  // namespace relresp
