#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "relresp/errors.hpp"

namespace relresp {

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  std::size_t evaluations = 0;
};

struct QuadratureOptions {
  double rel_tol = 1e-10;
  double abs_tol = 1e-300;
  int max_depth = 60;
  // Global cap on panels; reached only by pathological integrands.
  std::size_t max_panels = 20000;
};

// Thrown when the error estimate cannot be brought below tolerance; carries the best estimate.
class ToleranceNotReached : public Error {
 public:
  ToleranceNotReached(const std::string& what, QuadratureResult best)
      : Error(what), best_(best) {}
  const QuadratureResult& best() const noexcept { return best_; }

 private:
  QuadratureResult best_;
};

// The integrand returned NaN; the message names the abscissa.
class IntegrandNaN : public Error {
 public:
  IntegrandNaN(const std::string& what, double x) : Error(what), x_(x) {}
  double abscissa() const noexcept { return x_; }

 private:
  double x_;
};

using RealFunction = std::function<double(double)>;

/// Globally adaptive Gauss-Kronrod (7/15) quadrature on [lo, hi].
///
/// The interval is first split at `breakpoints` (any order; entries outside
/// (lo, hi) are ignored), so integrable logarithmic singularities at known
/// abscissae only ever sit on panel ends. The rule is open: f is never
/// evaluated at lo, hi or a breakpoint. The panel with the largest error
/// estimate is bisected until the total estimate is below
/// max(abs_tol, rel_tol * |value|, 100 eps * int|f|). Panels at max_depth or at
/// floating-point resolution are frozen; if only frozen panels remain, the best
/// estimate is returned with its (larger) error estimate. Running out of
/// max_panels throws ToleranceNotReached. An empty interval integrates to zero.
QuadratureResult integrate_adaptive(const RealFunction& f, double lo, double hi,
                                    std::span<const double> breakpoints = {},
                                    const QuadratureOptions& opts = {});

struct Bracket {
  double lo = 0.0;
  double hi = 0.0;
};

struct SignScan {
  std::vector<Bracket> brackets;
  std::size_t nan_count = 0;
};

/// One bracket per adjacent grid pair with a strict sign change of g.
/// NaN samples are skipped and counted; pairs touching them give no bracket.
SignScan scan_sign_changes(const RealFunction& g, std::span<const double> grid);

/// Root of g inside `br` to |interval| <= x_tol, defaulting to
/// 1e-12 * max(1, |x|). Never evaluates g outside [lo, hi].
/// Throws InvalidArgument if g(lo) and g(hi) share a sign.
double find_root_bracketed(const RealFunction& g, Bracket br, double x_tol = 0.0);

}  // namespace relresp
