#pragma once

#include <string_view>

#include "relresp/occupation.hpp"

namespace relresp {

/// Nonrelativistic inputs in units of m: frequency omega, wavevector q, Fermi momentum pF.
/// Relativistic equivalents: a = omega/2, b = q/2, xF = sqrt(1 + pF^2).
struct NRPoint {
  double omega = 0.0;
  double q = 0.0;
  double pF = 0.0;

  /// Throws InvalidArgument unless q > 0, pF >= 0, omega >= 0.
  static NRPoint make(double omega, double q, double pF);
  double eps_q() const { return 0.5 * q * q; }
  double eps_F() const { return 0.5 * pF * pF; }
};

enum class NRCase { c1a, c1b, c1c, c2a, c2b, c2c };
std::string_view to_string(NRCase c);

/// Case 1 when omega > eps_q, else case 2; sub-case by where pF sits relative to
/// |omega - eps_q|/q and (omega + eps_q)/q.
NRCase nr_case(const NRPoint& p);

/// Lindhard Im B* at T=0.
double nr_im_B(const NRPoint& p, const MediumState& ms);

}  // namespace relresp
