#pragma once

#include <optional>
#include <string_view>

namespace relresp {

// |c^2| below this is treated as the light cone (or the pair threshold c^2 = 1).
inline constexpr double kLightConeCutoff = 1e-9;
// Tolerance for half-open boundary membership of the T=0 windows.
inline constexpr double kBoundaryTolerance = 1e-12;

/// Reduced kinematics: a = omega/2m, b = |q|/2m.
struct KinematicPoint {
  double a = 0.0;
  double b = 0.0;
  double c2 = 0.0;      // a^2 - b^2
  double gamma2 = 0.0;  // 1 - 1/c^2
  double d2 = 0.0;      // a^2 - b^2 gamma^2 = c^2 + b^2/c^2
};

enum class Region { I, II, III };
enum class Subregion { A, B, C, D, none };

std::string_view to_string(Region r);
std::string_view to_string(Subregion s);

/// Fermi surface of the T=0 sea, xF = xi/m and yF = p_F/m.
struct FermiSurface {
  double xF = 1.0;
  double yF = 0.0;

  /// Throws InvalidArgument for xF < 1.
  static FermiSurface from_energy(double xF);
  /// t_F = yF / xF, the upper limit of the I_j integrals.
  double tF() const { return yF / xF; }
};

/// Active absorption window of the T=0 imaginary parts.
struct SubregionWindow {
  Subregion label = Subregion::none;
  double x_lower = 0.0;
  double x_upper = 0.0;
};

/// Boundary values of b at fixed a; entries are empty where the square root is imaginary.
struct RegionBoundaries {
  std::optional<double> b_plus, b_minus;
  std::optional<double> bbar_plus, bbar_minus;
  std::optional<double> bprime_plus, bprime_minus;
};

/// Builds the derived fields. Throws KinematicError for b <= 0, a < 0 and
/// |c^2| < kLightConeCutoff (light cone).
KinematicPoint derive_point(double a, double b);

/// Throws KinematicError (pair_threshold) within kLightConeCutoff of c^2 = 1.
Region classify_region(const KinematicPoint& p);

/// Real roots x = a + b gamma and a - b gamma of the biquadratic, as |x|; empty in region II.
struct SingularAbscissae {
  bool real = false;
  double x_plus = 0.0;   // |a + b gamma|
  double x_minus = 0.0;  // |a - b gamma|
};
SingularAbscissae singular_abscissae(const KinematicPoint& p);

SubregionWindow zero_t_subregion(const KinematicPoint& p, const FermiSurface& fs);

RegionBoundaries region_boundaries(const FermiSurface& fs, double a);

}  // namespace relresp
