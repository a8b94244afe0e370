#include "relresp/numerics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <queue>
#include <sstream>

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/tools/toms748_solve.hpp>

namespace relresp {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

struct Panel {
  double lo = 0.0;
  double hi = 0.0;
  double value = 0.0;
  double error = 0.0;
  double l1 = 0.0;
  int depth = 0;
};

struct LargerError {
  bool operator()(const Panel& x, const Panel& y) const { return x.error < y.error; }
};

class Evaluator {
 public:
  explicit Evaluator(const RealFunction& f) : f_(f) {}

  double operator()(double x) {
    ++count_;
    const double fx = f_(x);
    if (!std::isfinite(fx)) {
      std::ostringstream msg;
      msg.precision(17);
      msg << "integrand returned " << fx << " at x = " << x;
      throw IntegrandNaN(msg.str(), x);
    }
    return fx;
  }

  std::size_t count() const { return count_; }

 private:
  const RealFunction& f_;
  std::size_t count_ = 0;
};

// One 7/15-point Gauss-Kronrod panel with the QUADPACK error heuristic.
Panel gk15(Evaluator& f, double lo, double hi, int depth) {
  static const auto xk = boost::math::quadrature::gauss_kronrod<double, 15>::abscissa();
  static const auto wk = boost::math::quadrature::gauss_kronrod<double, 15>::weights();
  static const auto wg = boost::math::quadrature::gauss<double, 7>::weights();

  const double center = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);

  std::array<double, 15> fv{};
  fv[0] = f(center);
  for (std::size_t i = 1; i < 8; ++i) {
    const double dx = half * xk[i];
    fv[2 * i - 1] = f(center - dx);
    fv[2 * i] = f(center + dx);
  }

  double kronrod = wk[0] * fv[0];
  double gauss = wg[0] * fv[0];
  double abs_sum = wk[0] * std::abs(fv[0]);
  for (std::size_t i = 1; i < 8; ++i) {
    const double pair = fv[2 * i - 1] + fv[2 * i];
    kronrod += wk[i] * pair;
    abs_sum += wk[i] * (std::abs(fv[2 * i - 1]) + std::abs(fv[2 * i]));
    if (i % 2 == 0) gauss += wg[i / 2] * pair;
  }
  const double mean = 0.5 * kronrod;
  double asc = wk[0] * std::abs(fv[0] - mean);
  for (std::size_t i = 1; i < 8; ++i) {
    asc += wk[i] * (std::abs(fv[2 * i - 1] - mean) + std::abs(fv[2 * i] - mean));
  }

  Panel p;
  p.lo = lo;
  p.hi = hi;
  p.depth = depth;
  p.value = kronrod * half;
  p.l1 = abs_sum * std::abs(half);
  asc *= std::abs(half);
  double err = std::abs((kronrod - gauss) * half);
  if (asc != 0.0 && err != 0.0) err = asc * std::min(1.0, std::pow(200.0 * err / asc, 1.5));
  if (p.l1 > std::numeric_limits<double>::min() / (50.0 * kEps)) {
    err = std::max(50.0 * kEps * p.l1, err);
  }
  p.error = err;
  return p;
}

// Neumaier-compensated totals over all panels.
struct Totals {
  double value = 0.0;
  double error = 0.0;
  double l1 = 0.0;
};

template <class Range>
void accumulate(Totals& t, double& comp, const Range& panels) {
  for (const Panel& p : panels) {
    const double s = t.value + p.value;
    comp += std::abs(t.value) >= std::abs(p.value) ? (t.value - s) + p.value
                                                  : (p.value - s) + t.value;
    t.value = s;
    t.error += p.error;
    t.l1 += p.l1;
  }
}

}  // namespace

QuadratureResult integrate_adaptive(const RealFunction& f, double lo, double hi,
                                    std::span<const double> breakpoints,
                                    const QuadratureOptions& opts) {
  if (!(hi > lo)) return {0.0, 0.0, 0};

  std::vector<double> sorted(breakpoints.begin(), breakpoints.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<double> cuts{lo};
  for (double bp : sorted) {
    if (bp > lo && bp < hi && bp > cuts.back()) cuts.push_back(bp);
  }
  cuts.push_back(hi);

  Evaluator eval(f);
  std::priority_queue<Panel, std::vector<Panel>, LargerError> active;
  std::vector<Panel> frozen;
  double value = 0.0;
  double error = 0.0;
  double l1 = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    Panel p = gk15(eval, cuts[i], cuts[i + 1], 0);
    value += p.value;
    error += p.error;
    l1 += p.l1;
    active.push(p);
  }

  auto target = [&](double v, double l1_norm) {
    return std::max({opts.abs_tol, opts.rel_tol * std::abs(v), 100.0 * kEps * l1_norm});
  };

  auto exact_totals = [&] {
    Totals t;
    double comp = 0.0;
    std::vector<Panel> snapshot;
    snapshot.reserve(active.size());
    auto copy = active;
    while (!copy.empty()) {
      snapshot.push_back(copy.top());
      copy.pop();
    }
    accumulate(t, comp, snapshot);
    accumulate(t, comp, frozen);
    t.value += comp;
    return t;
  };

  std::size_t panels = active.size();
  while (true) {
    if (error <= target(value, l1)) {
      const Totals t = exact_totals();
      if (t.error <= target(t.value, t.l1)) return {t.value, t.error, eval.count()};
      value = t.value;
      error = t.error;
      l1 = t.l1;
    }
    if (active.empty() || panels >= opts.max_panels) break;

    Panel worst = active.top();
    active.pop();
    if (worst.depth >= opts.max_depth) {
      frozen.push_back(worst);
      continue;
    }
    const double mid = 0.5 * (worst.lo + worst.hi);
    if (!(mid > worst.lo && mid < worst.hi)) {
      frozen.push_back(worst);
      continue;
    }
    Panel left = gk15(eval, worst.lo, mid, worst.depth + 1);
    Panel right = gk15(eval, mid, worst.hi, worst.depth + 1);
    value += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    l1 += left.l1 + right.l1 - worst.l1;
    active.push(left);
    active.push(right);
    ++panels;
  }

  const Totals t = exact_totals();
  QuadratureResult best{t.value, t.error, eval.count()};
  // Every remaining panel is at the depth limit or at floating-point resolution:
  // nothing can be refined further, so the estimate stands with its error bound.
  if (active.empty()) return best;
  std::ostringstream msg;
  msg.precision(6);
  msg << "tolerance not reached on [" << lo << ", " << hi << "]: value " << best.value
      << ", error estimate " << best.error_estimate;
  throw ToleranceNotReached(msg.str(), best);
}

SignScan scan_sign_changes(const RealFunction& g, std::span<const double> grid) {
  if (grid.size() < 2) throw InvalidArgument("sign scan needs at least two grid points");
  for (std::size_t i = 1; i < grid.size(); ++i) {
    if (!(grid[i] > grid[i - 1])) throw InvalidArgument("sign scan grid must be strictly increasing");
  }
  SignScan scan;
  std::vector<double> values(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    values[i] = g(grid[i]);
    if (std::isnan(values[i])) ++scan.nan_count;
  }
  for (std::size_t i = 1; i < grid.size(); ++i) {
    const double lo = values[i - 1];
    const double hi = values[i];
    if (std::isnan(lo) || std::isnan(hi)) continue;
    if ((lo < 0.0 && hi > 0.0) || (lo > 0.0 && hi < 0.0)) {
      scan.brackets.push_back({grid[i - 1], grid[i]});
    }
  }
  return scan;
}

double find_root_bracketed(const RealFunction& g, Bracket br, double x_tol) {
  if (!(br.lo < br.hi)) throw InvalidArgument("bracket requires lo < hi");
  const double g_lo = g(br.lo);
  const double g_hi = g(br.hi);
  if (g_lo == 0.0) return br.lo;
  if (g_hi == 0.0) return br.hi;
  if (std::isnan(g_lo) || std::isnan(g_hi) || (g_lo > 0.0) == (g_hi > 0.0)) {
    std::ostringstream msg;
    msg << "interval [" << br.lo << ", " << br.hi << "] does not bracket a root";
    throw InvalidArgument(msg.str());
  }
  auto done = [x_tol](double lo, double hi) {
    const double scale = std::max(1.0, std::abs(0.5 * (lo + hi)));
    const double tol = x_tol > 0.0 ? x_tol : 1e-12 * scale;
    return hi - lo <= tol;
  };
  std::uintmax_t max_iter = 500;
  const auto [lo, hi] =
      boost::math::tools::toms748_solve([&g](double x) { return g(x); }, br.lo, br.hi, g_lo,
                                        g_hi, done, max_iter);
  return 0.5 * (lo + hi);
}

}  // namespace relresp
