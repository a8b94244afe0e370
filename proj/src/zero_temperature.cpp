#include "relresp/zero_temperature.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <sstream>

#include "relresp/errors.hpp"
#include "relresp/vacuum.hpp"

namespace relresp {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kLogArgumentFloor = 1e-14;
// Relative split 2ab|gamma| / |d^2(d^2+1) - 2a^2| below which the closed forms lose
// more than ~1e-10 to cancellation.
constexpr double kDegenerateSplit = 1e-6;

// (x_u - a)^3 - 3b^2 x_u - [(x_l - a)^3 - 3b^2 x_l], factored so that the window
// width multiplies the whole difference.
double bracket_difference(double x_l, double x_u, double a, double b) {
  using ld = long double;
  const ld ul = static_cast<ld>(x_l) - a;
  const ld uu = static_cast<ld>(x_u) - a;
  const ld width = static_cast<ld>(x_u) - static_cast<ld>(x_l);
  const ld b2 = static_cast<ld>(b) * b;
  return static_cast<double>(width * (uu * uu + uu * ul + ul * ul - 3.0L * b2));
}

double window_sign(Subregion s) {
  return (s == Subregion::A || s == Subregion::B) ? -1.0 : 1.0;
}

void check_log_factor(double factor, double scale, const char* what) {
  if (std::abs(factor) < kLogArgumentFloor * scale) {
    std::ostringstream msg;
    msg << "on subregion boundary: " << what << " vanishes at xF";
    throw SubregionBoundaryError(msg.str());
  }
}

// Rejects x_F on a zero of the R1/R2 logarithm arguments.
void check_fermi_logs(const KinematicPoint& p, const FermiSurface& fs) {
  const double ax = p.a * fs.xF;
  const double by = p.b * fs.yF;
  const double scale = std::max(1.0, std::abs(p.c2) + ax + by);
  check_log_factor(p.c2 - by - ax, scale, "c^2 - b y - a x");
  check_log_factor(p.c2 - by + ax, scale, "c^2 - b y + a x");
  check_log_factor(p.c2 + by - ax, scale, "c^2 + b y - a x");
  check_log_factor(p.c2 + by + ax, scale, "c^2 + b y + a x");
}

struct RealPartTerms {
  double U_B, U_D, W_B, W_D, Z_B, Z_D;
};

RealPartTerms real_part_terms(const KinematicPoint& p, const FermiSurface& fs) {
  const double xF = fs.xF;
  const double yF = fs.yF;
  const double c2 = p.c2;
  const double R1F = r1(xF, p);
  const double R2F = r2(xF, p);
  const double lnF = std::log(xF + yF);

  const ZeroTCoefficients k = zero_t_coefficients(p);
  const BiquadraticIntegrals ij = integrals_Ij(p, fs);

  RealPartTerms t{};
  t.U_B = xF / (12.0 * p.b) * ((xF * xF + 3.0 * c2) * R1F + 6.0 * p.a * xF * R2F);
  t.U_D = xF / (8.0 * p.b) * (1.0 + 2.0 * c2) * R1F;
  t.W_B = 2.0 / 3.0 * (xF * yF - p.b * p.b * lnF);
  t.W_D = 0.5 * (xF * yF + 2.0 * c2 * lnF);
  t.Z_B = k.C_B * ((k.M_B + k.N_B) * ij.I0 - k.N_B * ij.I2);
  t.Z_D = k.C_D * ((k.M_D + k.N_D) * ij.I0 - k.N_D * ij.I2);
  return t;
}

// Step-occupancy quadrature for the points where the biquadratic roots degenerate.
ScalarPair real_parts_by_quadrature(const KinematicPoint& p, const FermiSurface& fs,
                                    double e2) {
  MediumState ms;
  ms.t = 0.0;
  ms.xi = fs.xF;
  ms.alpha = e2 / (4.0 * kPi);
  return re_scalars(p, ms);
}

ScalarPair real_parts(const KinematicPoint& p, const FermiSurface& fs, double e2) {
  classify_region(p);
  if (fs.yF == 0.0) return {};
  check_fermi_logs(p, fs);
  RealPartTerms t;
  try {
    t = real_part_terms(p, fs);
  } catch (const InvalidArgument&) {
    return real_parts_by_quadrature(p, fs, e2);
  }
  const double pref = -e2 / (4.0 * kPi * kPi * p.c2);
  return {pref * (t.U_B + t.W_B + t.Z_B), pref * (t.U_D + t.W_D + t.Z_D)};
}

}  // namespace

ZeroTCoefficients zero_t_coefficients(const KinematicPoint& p) {
  const double a2 = p.a * p.a;
  const double b2 = p.b * p.b;
  const double d2 = p.d2;
  const double d4 = d2 * d2;
  ZeroTCoefficients k;
  k.M_B = -2.0 * a2 * (1.0 + 4.0 * b2) - (1.0 - 2.0 * b2 - 2.0 * a2 * (2.0 - p.gamma2)) * d2;
  k.N_B = -d4 * (1.0 - 2.0 * b2);
  k.M_D = 2.0 * a2 * (1.0 + p.gamma2) - d2;
  k.N_D = -d4;
  k.C_B = 1.0 / 3.0;
  k.C_D = 0.5 * (1.0 + 2.0 * p.c2);
  k.frakC = d4;
  k.frakB = -2.0 * (d2 * (d2 + 1.0) - 2.0 * a2);
  k.frakA = (d2 + 1.0) * (d2 + 1.0) - 4.0 * a2;
  return k;
}

BiquadraticIntegrals integrals_Ij(const KinematicPoint& p, const FermiSurface& fs) {
  const double tF = fs.tF();
  if (!(tF >= 0.0 && tF < 1.0)) throw InvalidArgument("t_F outside [0, 1)");
  if (tF == 0.0) return {};

  const double d4 = p.d2 * p.d2;
  const double mid = p.d2 * (p.d2 + 1.0) - 2.0 * p.a * p.a;
  const double split = 2.0 * std::abs(p.a) * p.b * std::sqrt(std::abs(p.gamma2));
  if (d4 == 0.0 || !(split > kDegenerateSplit * std::abs(mid))) {
    throw InvalidArgument("degenerate biquadratic roots");
  }

  BiquadraticIntegrals out;
  if (p.gamma2 > 0.0) {
    const double tp2 = (mid + split) / d4;
    const double tm2 = (mid - split) / d4;
    if (!(tp2 > 0.0) || !(tm2 > 0.0)) {
      std::ostringstream msg;
      msg << "biquadratic root with t^2 <= 0 (t+^2 = " << tp2 << ", t-^2 = " << tm2 << ")";
      throw ConsistencyError(msg.str());
    }
    const double tp = std::sqrt(tp2);
    const double tm = std::sqrt(tm2);
    auto log_term = [&](double t) {
      const double gap = tF - t;
      if (std::abs(gap) < kLogArgumentFloor * std::max(1.0, t)) {
        throw SubregionBoundaryError("on subregion boundary: t_F coincides with a root");
      }
      return std::log(std::abs(gap / (tF + t)));
    };
    const double lp = log_term(tp);
    const double lm = log_term(tm);
    const double k = 1.0 / (2.0 * split);  // 1/(4 a b |gamma|)
    out.I0 = k * (lp / (2.0 * tp) - lm / (2.0 * tm));
    out.I2 = k * (tp * lp / 2.0 - tm * lm / 2.0);
    return out;
  }

  const std::complex<double> tc = std::sqrt(std::complex<double>(mid, split) / d4);
  const double tr = tc.real();
  const double ti = std::abs(tc.imag());
  const double m2 = std::norm(tc);
  const double lg =
      std::log(std::abs((tF * tF + 2.0 * tr * tF + m2) / (tF * tF - 2.0 * tr * tF + m2)));
  const double at =
      2.0 * tr / ti * (std::atan((tF + tr) / ti) + std::atan((tF - tr) / ti));
  out.I0 = (lg + at) / (8.0 * d4 * tr * m2);
  out.I2 = (-lg + at) / (8.0 * d4 * tr);
  return out;
}

double im_B_zero(const KinematicPoint& p, const FermiSurface& fs, double e2) {
  const SubregionWindow w = zero_t_subregion(p, fs);
  if (w.label == Subregion::none) return 0.0;
  return window_sign(w.label) * e2 / (48.0 * kPi * p.b * p.c2) *
         bracket_difference(w.x_lower, w.x_upper, p.a, p.b);
}

double im_D_zero(const KinematicPoint& p, const FermiSurface& fs, double e2) {
  const SubregionWindow w = zero_t_subregion(p, fs);
  if (w.label == Subregion::none) return 0.0;
  // Full windows have width exactly 2a (region I) or 2b gamma (region III).
  double width = w.x_upper - w.x_lower;
  if (w.label == Subregion::A) width = 2.0 * p.a;
  if (w.label == Subregion::C) width = 2.0 * p.b * std::sqrt(p.gamma2);
  return window_sign(w.label) * e2 / (32.0 * kPi * p.b * p.c2) * (1.0 + 2.0 * p.c2) * width;
}

double re_B_zero(const KinematicPoint& p, const FermiSurface& fs, double e2) {
  return real_parts(p, fs, e2).B;
}

double re_D_zero(const KinematicPoint& p, const FermiSurface& fs, double e2) {
  return real_parts(p, fs, e2).D;
}

ResponseScalars zero_t_scalars(const KinematicPoint& p, const FermiSurface& fs,
                               const MediumState& ms, bool include_vacuum) {
  const double e2 = ms.e2();
  const ScalarPair re = real_parts(p, fs, e2);
  ResponseScalars s;
  s.B = {re.B, im_B_zero(p, fs, e2)};
  s.D = {re.D, im_D_zero(p, fs, e2)};
  s.A = a_from_bd(p, s.B, s.D);
  s.C = include_vacuum ? c_star(p.c2, ms).value : std::complex<double>{};
  return s;
}

}  // namespace relresp
