#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "relresp/finite_temperature.hpp"
#include "relresp/kinematics.hpp"
#include "relresp/numerics.hpp"
#include "relresp/occupation.hpp"

namespace relresp {

using cplx = std::complex<double>;

/// Permittivity / inverse-permeability eigenvalues and cross terms at one (a, b).
struct ResponseTensors {
  cplx eps, nu;              // transverse
  cplx eps_prime, nu_prime;  // q-hat q-hat parts
  cplx tau, sigma;           // D-B and H-E cross responses
  cplx eps_L, nu_L;          // longitudinal
};

// Relative agreement required between the two eps_L / nu_L assembly paths.
inline constexpr double kDualPathTolerance = 1e-12;

/// Builds the tensors from the scalars. eps_L and nu_L come from two independent
/// routes, eps + eps' against 1 + C - (c^2/b^2) B (likewise nu_L); a
/// disagreement beyond kDualPathTolerance throws ConsistencyError.
ResponseTensors assemble(const ResponseScalars& s, const KinematicPoint& p);

struct EvaluationOptions {
  bool include_vacuum = true;
  QuadratureOptions quadrature{};
};

/// Scalars at (p, ms): closed forms at t = 0, quadrature otherwise.
ResponseScalars evaluate_scalars(const KinematicPoint& p, const MediumState& ms,
                                 const EvaluationOptions& opts = {});

ResponseTensors evaluate_tensors(const KinematicPoint& p, const MediumState& ms,
                                 const EvaluationOptions& opts = {});

enum class PlasmonMode { longitudinal, transverse };
std::string to_string(PlasmonMode m);

/// Re eps_L (longitudinal) or Re nu_L + 1 (transverse) at (a, b).
double dispersion_condition(PlasmonMode mode, double a, double b, const MediumState& ms,
                            const EvaluationOptions& opts = {});

struct DispersionRoot {
  double a = 0.0;
  double residual = 0.0;  // condition re-evaluated at the root
  double damping = 0.0;   // Im eps_L or Im nu_L at the root
};

struct DispersionSample {
  double b = 0.0;
  std::vector<DispersionRoot> roots;  // ascending in a
  std::size_t skipped = 0;            // search-grid points that could not be evaluated
};

struct DispersionBranch {
  PlasmonMode mode = PlasmonMode::longitudinal;
  std::vector<DispersionSample> samples;  // in b_grid order
  std::optional<double> plasma_value;     // lowest root extrapolated to b -> 0
};

// Roots whose re-evaluated condition exceeds this are discarded as pole crossings.
inline constexpr double kRootResidualTolerance = 1e-9;

/// Solves the real-frequency condition on each b of b_grid by sign scanning the
/// a_grid and bracketed refinement. b values are processed on `jobs` workers.
DispersionBranch dispersion(PlasmonMode mode, std::span<const double> b_grid,
                            const MediumState& ms, std::span<const double> a_grid,
                            const EvaluationOptions& opts = {}, unsigned jobs = 1);

/// Value at b = 0 of the polynomial in b^2 through the three smallest-b lowest roots.
std::optional<double> extrapolate_plasma(const std::vector<DispersionSample>& samples);

enum class CellStatus { ok, light_cone, pair_threshold, subregion_boundary, failed };
std::string to_string(CellStatus s);

struct ResponseCell {
  double a = 0.0;
  double b = 0.0;
  CellStatus status = CellStatus::ok;
  std::string reason;
  std::optional<Region> region;
  Subregion subregion = Subregion::none;
  cplx eps_L{0.0, 0.0};
  cplx nu_L{0.0, 0.0};
  bool metamaterial = false;  // Re eps_L < 0 and Re nu_L < 0
};

/// Evaluates one grid cell, recording rejections instead of throwing.
ResponseCell evaluate_cell(double a, double b, const MediumState& ms,
                           const EvaluationOptions& opts = {});

/// Row-major grid (b outer, a inner) of cells; cells are evaluated on `jobs` workers
/// and returned in index order.
std::vector<ResponseCell> metamaterial_scan(std::span<const double> a_grid,
                                            std::span<const double> b_grid,
                                            const MediumState& ms,
                                            const EvaluationOptions& opts = {},
                                            unsigned jobs = 1);

}  // namespace relresp
