#pragma once

// Independent reference computations used by the unit and acceptance tests.
// None of these call the library's quadrature or closed forms.

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

namespace oracle {

inline constexpr double kPi = std::numbers::pi;

// Values frozen from 30-digit mpmath quadrature, alpha = 1/137.036.
struct FrozenRealParts {
  double a, b, xF, re_B, re_D;
};
inline constexpr FrozenRealParts kFrozenRealParts[] = {
    {0.5, 1.0, 3.0, 0.0148714629601, 0.00945944375066},
    {0.5, 1.0, 1.5, 0.00132303807705, 0.000935101080419},
    {0.9, 0.7, 2.0, 0.00611324788749, -0.00964423882847},
    {2.0, 1.0, 1.5, -7.13556952879e-5, 0.000215156786446},
};
inline constexpr double kFrozenI0 = 0.291788296806;  // a = 0.9, b = 0.7, xF = 2
inline constexpr double kFrozenI2 = 0.100938929598;

struct FrozenVacuum {
  double c2, re, im;
};
inline constexpr FrozenVacuum kFrozenVacuum[] = {
    {-3.0, -0.000930020765584, 0.0},
    {0.3, 0.000215085529663, 0.0},
    {0.9, 0.00114783753044, 0.0},
    {1.5, 0.00102168336391, 0.00187250152982},
};

inline double tanh_sinh(auto f, double lo, double hi) {
  static thread_local boost::math::quadrature::tanh_sinh<double> rule(15);
  return rule.integrate(f, lo, hi, 1e-14);
}

// Vacuum scalar from its Feynman-parameter form,
// -e^2/(2 pi^2) int_0^1 x(1-x) ln(1 - 4x(1-x)(c^2 + i0)) dx.
inline std::complex<double> feynman_c_star(double c2, double e2) {
  std::vector<double> cuts{0.0};
  if (c2 > 1.0) {
    const double k = std::sqrt(1.0 - 1.0 / c2);
    cuts.push_back(0.5 * (1.0 - k));
    cuts.push_back(0.5 * (1.0 + k));
  }
  cuts.push_back(1.0);
  double re = 0.0;
  double im = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    re += tanh_sinh(
        [&](double x) {
          const double w = x * (1.0 - x);
          const double v = w * std::log(std::abs(1.0 - 4.0 * w * c2));
          return std::isfinite(v) ? v : 0.0;  // log zero exactly at a root endpoint
        },
        cuts[i], cuts[i + 1]);
  }
  if (c2 > 1.0) {
    // The log argument is negative between the roots; c^2 + i0 puts it just below the cut.
    const double lo = cuts[1];
    const double hi = cuts[2];
    auto prim = [](double x) { return x * x / 2.0 - x * x * x / 3.0; };
    im = -kPi * (prim(hi) - prim(lo));
  }
  return -e2 / (2.0 * kPi * kPi) * std::complex<double>(re, im);
}

struct WindowIntegrals {
  double im_B = 0.0;
  double im_D = 0.0;
};

// Step-occupancy quadrature of the windowed imaginary parts at T=0: the window
// [x_l, a + b gamma] cut at xF, integrated by Gauss-Legendre in long double.
inline WindowIntegrals step_window(double a, double b, double xF, double e2) {
  using ld = long double;
  const ld c2 = (static_cast<ld>(a) - b) * (static_cast<ld>(a) + b);
  if (c2 > 0 && c2 < 1) return {};
  const ld bg = b * std::sqrt(1.0L - 1.0L / c2);
  const ld xl = c2 < 0 ? bg - a : a - bg;
  const ld xu = std::min<ld>(a + bg, xF);
  if (!(xu > xl)) return {};
  const ld sgn = c2 < 0 ? -1.0L : 1.0L;
  using rule = boost::math::quadrature::gauss<long double, 10>;
  const ld poly = rule::integrate(
      [&](long double x) { return (x - a) * (x - a) - static_cast<ld>(b) * b; }, xl, xu);
  const ld width = rule::integrate([](long double) { return 1.0L; }, xl, xu);
  WindowIntegrals w;
  w.im_B = static_cast<double>(sgn * e2 / (16.0L * kPi * b * c2) * poly);
  w.im_D = static_cast<double>(sgn * e2 / (32.0L * kPi * b * c2) * (1.0L + 2.0L * c2) * width);
  return w;
}

// Biquadratic coefficients rebuilt from (a, b) only.
struct Biquadratic {
  double A, B, C;
};
inline Biquadratic biquadratic(double a, double b) {
  const double c2 = a * a - b * b;
  const double d2 = c2 + b * b / c2;
  return {(d2 + 1.0) * (d2 + 1.0) - 4.0 * a * a, -2.0 * (d2 * (d2 + 1.0) - 2.0 * a * a), d2 * d2};
}

// Principal value of int_0^tF t^j / (C t^4 + B t^2 + A) dt. Around each real pole
// t_k in (0, tF) the integrand is folded, f(t_k + s) + f(t_k - s), which is bounded,
// and integrated on (0, delta) by Gauss-Legendre; the rest is integrated adaptively.
inline double biquadratic_integral(int j, const Biquadratic& q, double tF) {
  using gk = boost::math::quadrature::gauss_kronrod<double, 31>;
  using gl = boost::math::quadrature::gauss<double, 30>;
  auto plain = [&](double t) {
    const double t2 = t * t;
    return (j == 0 ? 1.0 : t2) / ((q.C * t2 + q.B) * t2 + q.A);
  };
  const double disc = q.B * q.B - 4.0 * q.C * q.A;
  if (disc < 0.0) return gk::integrate(plain, 0.0, tF, 15, 1e-14);

  // Roots in t^2 of the quadratic, the larger magnitude first to avoid cancellation.
  const double big = (-q.B - std::copysign(std::sqrt(disc), q.B)) / (2.0 * q.C);
  const double roots[2] = {big, q.A / (q.C * big)};
  std::vector<double> poles;
  for (double r : roots) {
    if (r > 0.0 && std::sqrt(r) < tF) poles.push_back(std::sqrt(r));
  }
  std::sort(poles.begin(), poles.end());

  // f at t = t_k + sigma with t^2 - t_k^2 formed exactly as sigma (2 t_k + sigma).
  auto near = [&](double tk, double sigma) {
    const double t = tk + sigma;
    const double t2 = t * t;
    const double tk2 = tk * tk;
    const double other = std::abs(roots[0] - tk2) < std::abs(roots[1] - tk2) ? roots[1] : roots[0];
    return (j == 0 ? 1.0 : t2) / (q.C * sigma * (2.0 * tk + sigma) * (t2 - other));
  };

  // Half-widths of the folded neighbourhoods, kept clear of 0, tF and each other.
  std::vector<double> delta;
  for (std::size_t k = 0; k < poles.size(); ++k) {
    double room = std::min(poles[k], tF - poles[k]);
    if (k > 0) room = std::min(room, 0.5 * (poles[k] - poles[k - 1]));
    if (k + 1 < poles.size()) room = std::min(room, 0.5 * (poles[k + 1] - poles[k]));
    delta.push_back(0.5 * room);
  }

  double total = 0.0;
  double lo = 0.0;
  for (std::size_t k = 0; k < poles.size(); ++k) {
    const double tk = poles[k];
    total += gk::integrate(plain, lo, tk - delta[k], 15, 1e-14);
    auto folded = [&](double s) { return near(tk, s) + near(tk, -s); };
    double s_lo = 0.0;
    for (double s_hi : {delta[k] * 1e-2, delta[k]}) {
      total += gl::integrate(folded, s_lo, s_hi);
      s_lo = s_hi;
    }
    lo = tk + delta[k];
  }
  total += gk::integrate(plain, lo, tF, 15, 1e-14);
  return total;
}

// Nonrelativistic T=0 Im B* as e^2/(2 pi q^3) * int p dp over the momenta that can
// absorb (omega, q): |omega - eps_q|/q < p < min(pF, (omega + eps_q)/q).
inline double lindhard_window(double omega, double q, double pF, double e2) {
  const double eq = 0.5 * q * q;
  const double lo = std::abs(omega - eq) / q;
  const double hi = std::min(pF, (omega + eq) / q);
  if (!(hi > lo)) return 0.0;
  return e2 / (2.0 * kPi * q * q * q) * 0.5 * (hi * hi - lo * lo);
}

}  // namespace oracle
