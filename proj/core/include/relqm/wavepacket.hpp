#pragma once

#include <complex>
#include <span>
#include <vector>

#include "relqm/errors.hpp"
#include "relqm/units.hpp"

namespace relqm {

/// Free boosted wave packets and their particle/antiparticle split.
///
/// A packet is synthesized in momentum space: a Gaussian amplitude of
/// rest-frame variance parameter sigma, Lorentz-boosted to velocity v
/// (center k0 = gamma m0 v, boosted variance gamma^2 sigma), each mode
/// evolved with the exact dispersion omega(k) = sqrt(k^2 + m0^2) and split
/// into its phi (particle) and chi (antiparticle) amplitudes. All mode sums
/// run in fixed order, so results are bit-identical across runs.
///
/// Conventions: natural units; xi = m0 (z - v t); densities
///   KG:    rho = |phi|^2 - |chi|^2,   j = (1/m0) Im(psi* d_z psi), psi = phi + chi
///   Dirac: rho = |phi|^2 + |chi|^2,   no current
/// and profiles are normalized so the trapezoidal integral of rho over the
/// xi grid is 1.

struct PacketSpec {
  /// Momentum-space Gaussian variance parameter, units mass^2 (rest frame).
  double sigma;
  /// Boost velocity, |v| < 1.
  double v;
  double m0 = 1.0;
  /// Evaluation time.
  double t = 0.0;

  void validate() const;
  /// Narrow-packet regime sqrt(sigma) <= m0/20, where the closed-form free
  /// ratios apply.
  bool narrow() const;
  double gamma() const;
  /// Central momentum gamma m0 v.
  double k0() const;
  /// Boosted variance parameter gamma^2 sigma.
  double boosted_sigma() const;
};

/// phi/chi amplitudes of a unit-amplitude KG plane wave of wavenumber k:
/// ((1 + w/m0)/2, (1 - w/m0)/2) with w = sqrt(k^2 + m0^2).
struct PlaneWaveSplit {
  std::complex<double> phi;
  std::complex<double> chi;
};
PlaneWaveSplit plane_wave_split(double k, double m0);

struct QuadratureOptions {
  /// Trapezoidal nodes over k in k0 +- halfwidth_std * sqrt(boosted sigma).
  int nodes = 1024;
  /// Tail mass beyond the window is erfc(halfwidth_std); must stay < 1e-10.
  double halfwidth_std = 8.0;
};

/// Complex phi and chi field samples on a xi grid (unnormalized).
struct PacketFields {
  Model model;
  PacketSpec spec;
  std::vector<double> xi;
  std::vector<std::complex<double>> phi;
  std::vector<std::complex<double>> chi;
  /// Largest |k| carried by the quadrature; bounds finite-difference validity.
  double k_max = 0.0;
  bool narrow_regime = true;
};

/// Sampled densities of a packet, normalized to unit conserved norm on the
/// grid. j is filled for KG when the grid spacing resolves the current's
/// centered finite differences (spacing <= 1/(20 k_max)); it is empty for
/// Dirac and for grids too coarse to difference.
struct PacketProfile {
  Model model;
  std::vector<double> xi;
  std::vector<double> phi_sq;
  std::vector<double> chi_sq;
  std::vector<double> rho;
  std::vector<double> j;
  bool narrow_regime = true;
};

/// Uniform xi grid spanning +-span_std standard deviations of the boosted
/// density around the packet center.
std::vector<double> default_xi_grid(const PacketSpec& spec, int n_points = 2001,
                                    double span_std = 7.0);

PacketFields build_kg_fields(const PacketSpec& spec, std::span<const double> xi,
                             const QuadratureOptions& quad = {});
PacketFields build_dirac_fields(const PacketSpec& spec, std::span<const double> xi,
                                const QuadratureOptions& quad = {});

PacketProfile build_kg_packet(const PacketSpec& spec, std::span<const double> xi,
                              const QuadratureOptions& quad = {});
PacketProfile build_dirac_packet(const PacketSpec& spec, std::span<const double> xi,
                                 const QuadratureOptions& quad = {});

/// Unnormalized densities of sampled fields. rho per the model's rule; for
/// KG the current comes from centered finite differences of psi = phi + chi
/// (one-sided at the ends). Throws grid_error when the spacing exceeds
/// 1/(20 k_max).
struct Densities {
  std::vector<double> rho;
  std::vector<double> j;
};
Densities densities(const PacketFields& fields);

/// Quotient of the trapezoidal integrals of chi_sq and phi_sq. Throws
/// coverage_error when either density's boundary value exceeds 1e-8 of its
/// peak (grid must span >= 6 standard deviations).
double measure_ratio(const PacketProfile& profile);

enum class Ingredient { Phi, Chi };

/// A plane wave described by its dominant (master) ingredient, both
/// amplitudes, momentum, energy (> 0) and the sign of i in the phase
/// exp(i sign (p z - E t)).
struct PlaneWaveState {
  double p;
  double energy;
  Ingredient master;
  std::complex<double> amp_phi;
  std::complex<double> amp_chi;
  int phase_sign = +1;
};

/// Space-time inversion image: phi and chi swap roles, the dominance
/// reverses, the phase conjugates, momentum and energy stay fixed.
/// An involution: applying it twice returns the original wave.
PlaneWaveState inversion_image(const PlaneWaveState& wave);

} // namespace relqm
