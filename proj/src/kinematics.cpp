#include "relresp/kinematics.hpp"

#include <cmath>
#include <sstream>

#include "relresp/errors.hpp"

namespace relresp {

std::string_view to_string(Region r) {
  switch (r) {
    case Region::I: return "I";
    case Region::II: return "II";
    case Region::III: return "III";
  }
  return "?";
}

std::string_view to_string(Subregion s) {
  switch (s) {
    case Subregion::A: return "A";
    case Subregion::B: return "B";
    case Subregion::C: return "C";
    case Subregion::D: return "D";
    case Subregion::none: return "NONE";
  }
  return "?";
}

FermiSurface FermiSurface::from_energy(double xF) {
  if (!(xF >= 1.0)) {
    std::ostringstream msg;
    msg << "Fermi energy xF = " << xF << " below the rest mass";
    throw InvalidArgument(msg.str());
  }
  // (xF - 1)(xF + 1) keeps yF accurate for xF -> 1.
  return FermiSurface{xF, std::sqrt((xF - 1.0) * (xF + 1.0))};
}

KinematicPoint derive_point(double a, double b) {
  if (!(b > 0.0) || !std::isfinite(b)) {
    throw KinematicError(KinematicFault::non_positive_wavevector,
                         "wavevector b must be positive and finite");
  }
  if (!(a >= 0.0) || !std::isfinite(a)) {
    throw KinematicError(KinematicFault::negative_frequency,
                         "frequency a must be non-negative and finite");
  }
  KinematicPoint p;
  p.a = a;
  p.b = b;
  p.c2 = (a - b) * (a + b);
  if (std::abs(p.c2) < kLightConeCutoff) {
    std::ostringstream msg;
    msg << "on light cone: |c^2| = " << std::abs(p.c2) << " at a = " << a << ", b = " << b;
    throw KinematicError(KinematicFault::on_light_cone, msg.str());
  }
  p.gamma2 = 1.0 - 1.0 / p.c2;
  p.d2 = p.c2 + b * b / p.c2;
  return p;
}

Region classify_region(const KinematicPoint& p) {
  if (p.c2 < 0.0) return Region::I;
  if (std::abs(p.c2 - 1.0) < kLightConeCutoff) {
    std::ostringstream msg;
    msg << "pair threshold: c^2 = " << p.c2 << " at a = " << p.a << ", b = " << p.b;
    throw KinematicError(KinematicFault::pair_threshold, msg.str());
  }
  return p.c2 < 1.0 ? Region::II : Region::III;
}

SingularAbscissae singular_abscissae(const KinematicPoint& p) {
  SingularAbscissae s;
  if (p.gamma2 <= 0.0) return s;
  const double bg = p.b * std::sqrt(p.gamma2);
  s.real = true;
  s.x_plus = std::abs(p.a + bg);
  s.x_minus = std::abs(p.a - bg);
  return s;
}

SubregionWindow zero_t_subregion(const KinematicPoint& p, const FermiSurface& fs) {
  const Region region = classify_region(p);
  if (region == Region::II) return {};

  const double bg = p.b * std::sqrt(p.gamma2);
  const double x_lower = region == Region::I ? bg - p.a : p.a - bg;
  const double x_upper = p.a + bg;
  if (!(x_lower < fs.xF) || !(x_upper > x_lower)) return {};

  if (x_upper <= fs.xF + kBoundaryTolerance) {
    return {region == Region::I ? Subregion::A : Subregion::C, x_lower, x_upper};
  }
  return {region == Region::I ? Subregion::B : Subregion::D, x_lower, fs.xF};
}

RegionBoundaries region_boundaries(const FermiSurface& fs, double a) {
  if (!(a >= 0.0)) throw InvalidArgument("region_boundaries requires a >= 0");
  RegionBoundaries out;
  const double half = 0.5 * fs.yF;
  const double quarter = half * half;

  const double outer = std::sqrt(quarter + a * (fs.xF + a));
  out.b_plus = half + outer;
  out.b_minus = -half + outer;

  const double inner_arg = quarter - a * (fs.xF - a);
  if (inner_arg >= 0.0) {
    const double inner = std::sqrt(inner_arg);
    out.bbar_plus = half + inner;
    out.bbar_minus = half - inner;
    out.bprime_plus = half + inner;
    out.bprime_minus = -half + inner;
  }
  return out;
}

}  // namespace relresp
