#include "relresp/responses.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "relresp/errors.hpp"
#include "relresp/parallel.hpp"
#include "relresp/vacuum.hpp"
#include "relresp/zero_temperature.hpp"

namespace relresp {

namespace {

double path_scale(std::initializer_list<cplx> terms) {
  double s = 1.0;
  for (const cplx& t : terms) s = std::max(s, std::abs(t));
  return s;
}

void check_paths(const char* name, cplx composed, cplx direct, double scale) {
  if (std::abs(composed - direct) > kDualPathTolerance * scale) {
    std::ostringstream msg;
    msg.precision(17);
    msg << name << " assembly paths disagree: " << composed << " vs " << direct;
    throw ConsistencyError(msg.str());
  }
}

}  // namespace

ResponseTensors assemble(const ResponseScalars& s, const KinematicPoint& p) {
  const double a2_c2 = p.a * p.a / p.c2;  // omega^2 / q^2
  const double a2_b2 = p.a * p.a / (p.b * p.b);
  const double b2_c2 = p.b * p.b / p.c2;
  const double c2_b2 = p.c2 / (p.b * p.b);
  const double a_b = p.a / p.b;

  ResponseTensors r;
  const cplx cC = (2.0 - a2_c2) * s.C;
  const cplx cB = (1.0 - a2_b2) * s.B;
  r.eps = 1.0 + cC + s.A + cB;
  const cplx nC = (2.0 + b2_c2) * s.C;
  const cplx nB = -2.0 * a2_b2 * s.B;
  r.nu = 1.0 + nC + s.A + nB;
  r.eps_prime = b2_c2 * s.C - s.A;
  r.nu_prime = s.A - b2_c2 * s.C;
  r.tau = a_b * (b2_c2 * s.C - s.B);
  r.sigma = a_b * (b2_c2 * s.C - s.B);

  r.eps_L = 1.0 + s.C - c2_b2 * s.B;
  r.nu_L = 1.0 + 2.0 * s.C + 2.0 * s.D + c2_b2 * s.B;

  check_paths("eps_L", r.eps + r.eps_prime, r.eps_L,
              path_scale({cC, cB, s.A, b2_c2 * s.C, r.eps_L}));
  check_paths("nu_L", r.nu + r.nu_prime, r.nu_L,
              path_scale({nC, nB, s.A, b2_c2 * s.C, r.nu_L}));
  return r;
}

ResponseScalars evaluate_scalars(const KinematicPoint& p, const MediumState& ms,
                                 const EvaluationOptions& opts) {
  classify_region(p);
  if (!ms.zero_temperature()) return scalars(p, ms, opts.include_vacuum, opts.quadrature);

  const double xF = std::abs(ms.xi);
  if (xF <= 1.0) {
    ResponseScalars s;
    if (opts.include_vacuum) s.C = c_star(p.c2, ms).value;
    return s;
  }
  return zero_t_scalars(p, FermiSurface::from_energy(xF), ms, opts.include_vacuum);
}

ResponseTensors evaluate_tensors(const KinematicPoint& p, const MediumState& ms,
                                 const EvaluationOptions& opts) {
  return assemble(evaluate_scalars(p, ms, opts), p);
}

std::string to_string(PlasmonMode m) {
  return m == PlasmonMode::longitudinal ? "longitudinal" : "transverse";
}

namespace {

cplx mode_response(PlasmonMode mode, const ResponseTensors& r) {
  return mode == PlasmonMode::longitudinal ? r.eps_L : r.nu_L;
}

double mode_condition(PlasmonMode mode, const ResponseTensors& r) {
  return mode == PlasmonMode::longitudinal ? r.eps_L.real() : r.nu_L.real() + 1.0;
}

// Condition with every library failure mapped to NaN, for scanning.
double condition_or_nan(PlasmonMode mode, double a, double b, const MediumState& ms,
                        const EvaluationOptions& opts) {
  try {
    return dispersion_condition(mode, a, b, ms, opts);
  } catch (const Error&) {
    return std::numeric_limits<double>::quiet_NaN();
  }
}

DispersionSample solve_at(PlasmonMode mode, double b, const MediumState& ms,
                          std::span<const double> a_grid, const EvaluationOptions& opts) {
  DispersionSample sample;
  sample.b = b;
  const RealFunction g = [&](double a) { return condition_or_nan(mode, a, b, ms, opts); };
  const SignScan scan = scan_sign_changes(g, a_grid);
  sample.skipped = scan.nan_count;

  for (const Bracket& br : scan.brackets) {
    double a = 0.0;
    try {
      a = find_root_bracketed(
          [&](double x) {
            const double v = g(x);
            if (std::isnan(v)) throw InvalidArgument("condition undefined inside bracket");
            return v;
          },
          br);
    } catch (const Error&) {
      continue;
    }
    try {
      const ResponseTensors r = evaluate_tensors(derive_point(a, b), ms, opts);
      const double residual = mode_condition(mode, r);
      if (!(std::abs(residual) < kRootResidualTolerance)) continue;  // a pole, not a zero
      sample.roots.push_back({a, residual, mode_response(mode, r).imag()});
    } catch (const Error&) {
    }
  }
  return sample;
}

}  // namespace

double dispersion_condition(PlasmonMode mode, double a, double b, const MediumState& ms,
                            const EvaluationOptions& opts) {
  return mode_condition(mode, evaluate_tensors(derive_point(a, b), ms, opts));
}

DispersionBranch dispersion(PlasmonMode mode, std::span<const double> b_grid,
                            const MediumState& ms, std::span<const double> a_grid,
                            const EvaluationOptions& opts, unsigned jobs) {
  for (double b : b_grid) {
    if (!(b > 0.0)) throw InvalidArgument("dispersion b grid must be positive");
  }
  DispersionBranch branch;
  branch.mode = mode;
  branch.samples.resize(b_grid.size());
  parallel_for(b_grid.size(), jobs, [&](std::size_t i) {
    branch.samples[i] = solve_at(mode, b_grid[i], ms, a_grid, opts);
  });
  branch.plasma_value = extrapolate_plasma(branch.samples);
  return branch;
}

std::optional<double> extrapolate_plasma(const std::vector<DispersionSample>& samples) {
  std::vector<std::pair<double, double>> pts;  // (b^2, lowest root)
  for (const DispersionSample& s : samples) {
    if (!s.roots.empty()) pts.emplace_back(s.b * s.b, s.roots.front().a);
  }
  if (pts.size() < 3) return std::nullopt;
  std::sort(pts.begin(), pts.end());
  pts.resize(3);
  if (pts[0].first == pts[1].first || pts[1].first == pts[2].first) return std::nullopt;

  // Lagrange interpolation in u = b^2, evaluated at u = 0.
  double value = 0.0;
  for (std::size_t i = 0; i < 3; ++i) {
    double w = 1.0;
    for (std::size_t j = 0; j < 3; ++j) {
      if (j != i) w *= (0.0 - pts[j].first) / (pts[i].first - pts[j].first);
    }
    value += w * pts[i].second;
  }
  return value;
}

std::string to_string(CellStatus s) {
  switch (s) {
    case CellStatus::ok: return "ok";
    case CellStatus::light_cone: return "light_cone";
    case CellStatus::pair_threshold: return "pair_threshold";
    case CellStatus::subregion_boundary: return "subregion_boundary";
    case CellStatus::failed: return "failed";
  }
  return "failed";
}

ResponseCell evaluate_cell(double a, double b, const MediumState& ms,
                           const EvaluationOptions& opts) {
  ResponseCell cell;
  cell.a = a;
  cell.b = b;
  try {
    const KinematicPoint p = derive_point(a, b);
    cell.region = classify_region(p);
    if (ms.zero_temperature() && std::abs(ms.xi) > 1.0) {
      cell.subregion = zero_t_subregion(p, FermiSurface::from_energy(std::abs(ms.xi))).label;
    }
    const ResponseTensors r = evaluate_tensors(p, ms, opts);
    cell.eps_L = r.eps_L;
    cell.nu_L = r.nu_L;
    cell.metamaterial = r.eps_L.real() < 0.0 && r.nu_L.real() < 0.0;
  } catch (const KinematicError& e) {
    cell.reason = e.what();
    switch (e.fault()) {
      case KinematicFault::on_light_cone: cell.status = CellStatus::light_cone; break;
      case KinematicFault::pair_threshold: cell.status = CellStatus::pair_threshold; break;
      default: cell.status = CellStatus::failed; break;
    }
  } catch (const SubregionBoundaryError& e) {
    cell.status = CellStatus::subregion_boundary;
    cell.reason = e.what();
  } catch (const Error& e) {
    cell.status = CellStatus::failed;
    cell.reason = e.what();
  }
  if (cell.status != CellStatus::ok) {
    cell.eps_L = cell.nu_L = {std::numeric_limits<double>::quiet_NaN(),
                              std::numeric_limits<double>::quiet_NaN()};
    cell.metamaterial = false;
  }
  return cell;
}

std::vector<ResponseCell> metamaterial_scan(std::span<const double> a_grid,
                                            std::span<const double> b_grid,
                                            const MediumState& ms,
                                            const EvaluationOptions& opts, unsigned jobs) {
  const std::size_t na = a_grid.size();
  std::vector<ResponseCell> cells(na * b_grid.size());
  parallel_for(cells.size(), jobs, [&](std::size_t i) {
    cells[i] = evaluate_cell(a_grid[i % na], b_grid[i / na], ms, opts);
  });
  return cells;
}

}  // namespace relresp
