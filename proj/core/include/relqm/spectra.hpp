#pragma once

#include <vector>

#include "relqm/units.hpp"

namespace relqm {

/// Auxiliary y = sqrt(1/4 - (Z alpha)^2) entering the Klein-Gordon 1S
/// closed forms; defined only for z_alpha <= 1/2, so y lies in [0, 1/2].
struct AuxiliaryY {
  double value;
};
AuxiliaryY kg_auxiliary_y(const Coupling& coupling);

/// Nonrelativistic Coulomb binding energy (Z alpha)^2 m0 / (2 n^2).
/// Unbounded in z_alpha; requires n >= 1.
double nonrel_binding(const Coupling& coupling, int n, double m0);

/// Total 1S energy for the one-body models:
///   KleinGordon: m0 sqrt(1/2 + y), valid for z_alpha <= 1/2
///   Dirac:       m0 sqrt(1 - (z_alpha)^2), valid for z_alpha <= 1
///   NonRelativistic: m0 minus the n=1 binding
/// Throws std::domain_error("supercritical coupling...") beyond the model
/// bound and std::invalid_argument for Rsse (which needs two masses).
double energy_1s(Model model, const Coupling& coupling, double m0);

/// Antiparticle-to-particle ingredient norm ratio of the 1S state.
/// Strictly increasing from 0 to 1 over the model's coupling domain; the
/// KleinGordon endpoint z_alpha = 1/2 (y = 0) is the continuity value 1.
/// NonRelativistic states carry no antiparticle ingredient: returns 0.
double ratio_1s(Model model, const Coupling& coupling);

/// Free-motion ingredient ratio at velocity v in [0, 1):
///   Dirac: (1 - sqrt(1-v^2)) / (1 + sqrt(1-v^2)),  KleinGordon: its square.
double ratio_free(Model model, double v);

/// A fully assembled 1S record (energy, binding and ratio are consistent:
/// binding = m0 - energy; NonRelativistic energy = m0 - binding with the
/// Eq.-style 1/n^2 binding and ratio 0).
struct BoundState1S {
  Model model;
  Coupling coupling;
  double m0;
  double energy;
  double binding;
  double ratio;
  int n;
};
BoundState1S bound_state_1s(Model model, const Coupling& coupling, double m0, int n = 1);

enum class Quantity { Energy, Ratio };

struct CurvePoint {
  double z_alpha;
  double value;
};

/// Uniform sweep of energy_1s or ratio_1s over [za_min, za_max], endpoints
/// included. steps >= 2 and za_max > za_min (throws std::range_error
/// otherwise); domain errors from the underlying evaluation propagate.
/// Energy values are reported per unit m0.
std::vector<CurvePoint> sample_curve(Model model, Quantity quantity, double za_min,
                                     double za_max, int steps);

} // namespace relqm
