#pragma once

#include <numbers>

namespace relresp {

inline constexpr double kFineStructure = 1.0 / 137.036;

/// Temperature and chemical potential in units of the electron mass.
struct MediumState {
  double t = 0.0;   // T/m
  double xi = 1.0;  // xi/m
  double alpha = kFineStructure;

  /// Validates t >= 0, alpha > 0.
  static MediumState make(double t, double xi, double alpha = kFineStructure);

  double e2() const { return 4.0 * std::numbers::pi * alpha; }
  bool zero_temperature() const { return t == 0.0; }
};

/// Particle plus antiparticle Fermi-Dirac occupation at energy x (units of m).
/// At t = 0 this is the step Theta(|xi| - x), with 1/2 on the edge.
double n_fermi(double x, const MediumState& ms);

/// Upper truncation for the energy integrals: max(1, |xi|) + 40 t.
double x_cutoff(const MediumState& ms);

}  // namespace relresp
