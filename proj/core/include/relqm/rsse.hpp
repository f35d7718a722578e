#pragma once

#include "relqm/units.hpp"

namespace relqm {

/// Two-body machinery built on the reduced-mass Schroedinger eigenvalue
/// epsilon and its nonlinear map to binding energy,
///   B = M [1 - sqrt(1 + 2 epsilon / M)],  E^2 = M^2 + P^2 + 2 M epsilon.
/// epsilon has the lower bound -M/2, at which B = M and E = 0.

/// Hydrogen-like eigenvalue of the reduced-mass operator: -mu (Z alpha)^2 / (2 n^2).
double epsilon_1s(const TwoBodyMasses& masses, const Coupling& coupling, int n = 1);

/// B = M(1 - sqrt(1 + 2 eps/M)); domain eps >= -M/2 (a few-ulp FP shortfall
/// below -M/2 is clamped so the exact lower bound maps to B = M exactly).
/// In the infinite-mass limit B -> -eps.
double binding_energy(double total_mass, double epsilon);

/// E = sqrt(M^2 + P^2 + 2 M eps); with P = 0 this satisfies E + B = M.
double total_energy(double total_mass, double epsilon, double momentum = 0.0);

/// Critical charge Z_c = sqrt(M/mu) / alpha, the charge at which the 1S
/// total energy reaches E = 0. Diverges (throws) for an infinite nucleus.
double critical_charge(const TwoBodyMasses& masses, double alpha);

/// Inverse of the forward map B(Z) = binding_energy(M, epsilon_1s(mu, Z alpha)):
/// bracketed bisection on Z in [0, Z_c] (1e-10 relative). The infinite-nucleus
/// limit uses the closed form Z = sqrt(2 B / mu) / alpha.
double charge_for_binding(double binding_target, const TwoBodyMasses& masses, double alpha);

/// True when M/mu > 100, the regime where treating the heavy partner
/// dynamically is questionable; callers may surface this as a note.
bool heavy_mass_ratio_advisory(const TwoBodyMasses& masses);

struct RsseState {
  TwoBodyMasses masses;
  Coupling coupling;
  int n;
  double epsilon;
  double binding;
  double total;
  double momentum;
};
RsseState rsse_state(const TwoBodyMasses& masses, const Coupling& coupling, int n = 1,
                     double momentum = 0.0);

} // namespace relqm
