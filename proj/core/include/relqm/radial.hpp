#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "relqm/errors.hpp"
#include "relqm/units.hpp"

namespace relqm {

/// Shooting-method bound-state solvers for the radial nonrelativistic
/// Schroedinger, Klein-Gordon and Dirac equations with a point-Coulomb
/// potential. These are the independent numerical oracles behind the
/// closed-form spectra: they never evaluate the closed forms themselves.
///
/// Scheme: fixed-step RK4 along the grid, outward from a power-series start
/// at r_min (indicial exponents s = 1, 1/2 + y, sqrt(1 - (Z alpha)^2)),
/// inward from an exponential tail at r_max, matched at the classical
/// turning point. The eigenvalue search bisects on the matching defect with
/// node-count steering, then polishes with secant steps.

enum class RadialSpacing { Uniform, Logarithmic };

struct RadialGrid {
  double r_min;
  double r_max;
  int n_points;
  RadialSpacing spacing;

  static RadialGrid logarithmic(double r_min, double r_max, int n_points);
  static RadialGrid uniform(double r_min, double r_max, int n_points);

  /// Materialized node positions (size n_points, strictly increasing).
  std::vector<double> positions() const;
};

struct SolveOptions {
  int n_points = 20000;
  /// Bisection width target, in units of the model's energy scale
  /// (m0 for KG/Dirac, mu (Z alpha)^2 for Schroedinger).
  double tolerance = 1e-10;
  /// Residual (dimensionless matching defect) bound for `converged`.
  double defect_tolerance = 1e-6;
  int max_iterations = 200;
  /// Number of radial nodes of the target state (0 = ground).
  int target_nodes = 0;
  /// Energy bracket override; the default is a model-specific bracket
  /// guaranteed to contain the ground eigenvalue.
  std::optional<std::pair<double, double>> bracket;
  /// Grid override; the default is logarithmic with
  /// r_min = 1e-6/(m Z alpha) and r_max = 40/(binding-scale wavenumber).
  std::optional<RadialGrid> grid;
};

struct RadialSolveResult {
  /// Converged eigenvalue: epsilon (< 0) for Schroedinger, total E for KG/Dirac.
  double eigenvalue = 0.0;
  int node_count = 0;
  std::vector<double> r;
  /// Radial function u(r) (= r psi), normalized to max |u| = 1.
  /// For Dirac this is the large component; u_small holds the small one.
  std::vector<double> u;
  std::vector<double> u_small;
  bool converged = false;
  int iterations = 0;
  /// Dimensionless matching defect at the converged energy.
  double residual = 0.0;
};

/// Ground (or target_nodes-excited) S-state of -(1/2mu) u'' - (Z alpha / r) u = eps u.
/// Throws convergence_error on bracket failure (e.g. zero coupling: no bound state).
RadialSolveResult solve_schrodinger_1s(double mu, const Coupling& coupling,
                                       const SolveOptions& options = {});

/// Stationary S-wave Klein-Gordon: u'' + [(E + Z alpha / r)^2 - m0^2] u = 0.
/// Domain 0 < z_alpha <= 1/2.
RadialSolveResult solve_kg_1s(double m0, const Coupling& coupling,
                              const SolveOptions& options = {});

/// Dirac-Coulomb radial pair for kappa = -1 (large F, small G in the result's
/// u, u_small channels). Domain 0 < z_alpha < 1.
RadialSolveResult solve_dirac_1s(double m0, const Coupling& coupling,
                                 const SolveOptions& options = {});

/// Ingredient ratio from a converged radial solution:
///   KG:    R = int (1 - (E - V)/m0)^2 u^2 dr / int (1 + (E - V)/m0)^2 u^2 dr
///          (stationary split phi/chi = (1 +- (E - V)/m0) psi / 2),
///   Dirac: R = int u_small^2 dr / int u^2 dr.
/// Throws convergence_error when the result is not converged.
double ratio_from_radial(const RadialSolveResult& result, Model model, double m0,
                         const Coupling& coupling);

} // namespace relqm
