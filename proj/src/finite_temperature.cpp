#include "relresp/finite_temperature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "relresp/vacuum.hpp"

namespace relresp {

namespace {

constexpr double kPi = std::numbers::pi;
// Same multiple of machine epsilon as the integrator's own roundoff floor.
constexpr double kRoundoffFactor = 100.0 * std::numeric_limits<double>::epsilon();

double momentum(double x) { return std::sqrt(std::max(0.0, (x - 1.0) * (x + 1.0))); }

constexpr double kLogRange = 709.782712893384;  // ln(DBL_MAX)

// ln|v| with an exact zero (a node within an ulp of a singular abscissa)
// mapped to the log of the double range instead of an infinity.
double safe_log(double v) {
  return v == 0.0 ? -kLogRange : std::log(std::abs(v));
}

// ln|num/den| where num = den + delta. log1p keeps the digits when the two are
// close; otherwise the factors are logged separately.
double log_abs_ratio(double num, double den, double delta) {
  if (den != 0.0 && std::abs(delta) < 0.5 * std::abs(den)) return std::log1p(delta / den);
  return safe_log(num) - safe_log(den);
}

// The four factors c^2 -/+ ax +/- by of the logarithms. Near a singular abscissa
// one factor of each pair is a cancelling difference; it is recovered from
// (c^2 - ax)^2 - (by)^2 = c^2 (x - a - b gamma)(x - a + b gamma) instead.
struct LogFactors {
  double p_minus;  // c^2 - ax + by
  double m_minus;  // c^2 - ax - by
  double p_plus;   // c^2 + ax + by
  double m_plus;   // c^2 + ax - by
};

void refine_smaller(double& u, double& v, double product) {
  if (std::abs(u) < std::abs(v)) {
    u = product / v;
  } else if (u != 0.0) {
    v = product / u;
  }
}

LogFactors log_factors(double x, const KinematicPoint& p) {
  const double y = momentum(x);
  const double by = p.b * y;
  const double ax = p.a * x;
  LogFactors f{p.c2 - ax + by, p.c2 - ax - by, p.c2 + ax + by, p.c2 + ax - by};
  if (p.gamma2 > 0.0) {
    const double bg = p.b * std::sqrt(p.gamma2);
    refine_smaller(f.p_minus, f.m_minus, p.c2 * (x - (p.a + bg)) * (x - (p.a - bg)));
    refine_smaller(f.p_plus, f.m_plus, p.c2 * (x + (p.a + bg)) * (x + (p.a - bg)));
  }
  return f;
}

// The Fermi edge is only ~t wide; panels much wider than that can step over it
// without noticing, so the edge region gets its own panels.
std::vector<double> occupation_breakpoints(const MediumState& ms) {
  const double edge = std::abs(ms.xi);
  std::vector<double> pts{edge};
  if (!ms.zero_temperature()) {
    for (double k : {-40.0, -10.0, -2.0, 2.0, 10.0}) pts.push_back(edge + k * ms.t);
  }
  return pts;
}

}  // namespace

double r1(double x, const KinematicPoint& p) {
  const LogFactors f = log_factors(x, p);
  // Numerator minus denominator is -4 c^2 b y.
  const double delta = -4.0 * p.c2 * p.b * momentum(x);
  return log_abs_ratio(f.m_minus * f.m_plus, f.p_minus * f.p_plus, delta);
}

double r2(double x, const KinematicPoint& p) {
  const LogFactors f = log_factors(x, p);
  // c^4 - (ax - by)^2 over c^4 - (ax + by)^2; they differ by 4 a x b y.
  const double delta = 4.0 * p.a * x * p.b * momentum(x);
  return 0.5 * log_abs_ratio(f.p_minus * f.m_plus, f.m_minus * f.p_plus, delta);
}

AbsorptionWindow absorption_window(const KinematicPoint& p) {
  AbsorptionWindow w;
  if (p.c2 > 0.0 && p.c2 < 1.0) return w;
  const double bg = p.b * std::sqrt(p.gamma2);
  w.x_upper = p.a + bg;
  w.x_lower = p.c2 < 0.0 ? bg - p.a : p.a - bg;
  w.sign = p.c2 < 0.0 ? -1.0 : 1.0;
  w.open = w.x_upper > w.x_lower;
  return w;
}

ScalarPair im_scalars(const KinematicPoint& p, const MediumState& ms,
                      const QuadratureOptions& opts) {
  classify_region(p);
  const AbsorptionWindow w = absorption_window(p);
  if (!w.open) return {};

  const double lo = std::max(w.x_lower, 1.0);
  const double hi = std::min(w.x_upper, x_cutoff(ms));
  if (!(hi > lo)) return {};

  const std::vector<double> edge = occupation_breakpoints(ms);
  const double a = p.a;
  const double b2 = p.b * p.b;
  const auto poly = integrate_adaptive(
      [&](double x) { return n_fermi(x, ms) * ((x - a) * (x - a) - b2); }, lo, hi, edge, opts);
  const auto occ =
      integrate_adaptive([&](double x) { return n_fermi(x, ms); }, lo, hi, edge, opts);

  const double e2 = ms.e2();
  ScalarPair out;
  out.B = w.sign * e2 / (16.0 * kPi * p.b * p.c2) * poly.value;
  out.D = w.sign * e2 / (32.0 * kPi * p.b * p.c2) * (1.0 + 2.0 * p.c2) * occ.value;
  return out;
}

ScalarPair re_scalars(const KinematicPoint& p, const MediumState& ms,
                      const QuadratureOptions& opts) {
  const double hi = x_cutoff(ms);
  if (!(hi > 1.0)) return {};

  std::vector<double> breaks = occupation_breakpoints(ms);
  const SingularAbscissae roots = singular_abscissae(p);
  if (roots.real) {
    breaks.push_back(roots.x_minus);
    breaks.push_back(roots.x_plus);
  }

  const double a = p.a;
  const double b = p.b;
  const double c2 = p.c2;
  auto term_b = [&](double x) {
    return ((x * x + c2) * r1(x, p) + 4.0 * a * x * r2(x, p)) / (4.0 * b);
  };
  auto term_d = [&](double x) { return (1.0 + 2.0 * c2) * r1(x, p) / (8.0 * b); };

  // R + R_B and R + R_D are integrated as single integrands so that the
  // tolerance applies to the (possibly small) combination. Each evaluation still
  // carries the rounding of its separate logarithmic pieces, so the absolute
  // floor is set from their L1 norm rather than from the combination's.
  QuadratureOptions loose = opts;
  loose.rel_tol = 1e-3;
  QuadratureResult parts;
  try {
    parts = integrate_adaptive(
        [&](double x) {
          const double n = n_fermi(x, ms);
          if (n == 0.0) return 0.0;
          const double r1x = r1(x, p);
          const double pieces = std::abs((x * x + c2) * r1x) + std::abs(4.0 * a * x * r2(x, p));
          return n * (momentum(x) + pieces / (4.0 * b) + std::abs((1.0 + 2.0 * c2) * r1x) / (8.0 * b));
        },
        1.0, hi, breaks, loose);
  } catch (const ToleranceNotReached& e) {
    parts = e.best();
  }
  QuadratureOptions combined = opts;
  combined.abs_tol = std::max(opts.abs_tol, kRoundoffFactor * parts.value);

  const auto rb = integrate_adaptive(
      [&](double x) {
        const double n = n_fermi(x, ms);
        if (n == 0.0) return 0.0;
        return n * (momentum(x) + term_b(x));
      },
      1.0, hi, breaks, combined);
  const auto rd = integrate_adaptive(
      [&](double x) {
        const double n = n_fermi(x, ms);
        if (n == 0.0) return 0.0;
        return n * (momentum(x) + term_d(x));
      },
      1.0, hi, breaks, combined);

  const double pref = -ms.e2() / (4.0 * kPi * kPi * c2);
  return {pref * rb.value, pref * rd.value};
}

std::complex<double> a_from_bd(const KinematicPoint& p, std::complex<double> B,
                               std::complex<double> D) {
  return D + (1.0 + 1.5 * p.c2 / (p.b * p.b)) * B;
}

ResponseScalars scalars(const KinematicPoint& p, const MediumState& ms, bool include_vacuum,
                        const QuadratureOptions& opts) {
  const ScalarPair im = im_scalars(p, ms, opts);
  const ScalarPair re = re_scalars(p, ms, opts);
  ResponseScalars s;
  s.B = {re.B, im.B};
  s.D = {re.D, im.D};
  s.A = a_from_bd(p, s.B, s.D);
  s.C = include_vacuum ? c_star(p.c2, ms).value : std::complex<double>{};
  return s;
}

}  // namespace relresp
