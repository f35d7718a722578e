#include "relqm/wavepacket.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace relqm {

void PacketSpec::validate() const {
  if (!(sigma > 0.0)) throw std::domain_error("packet spec: sigma must be > 0");
  if (!(std::abs(v) < 1.0)) throw std::domain_error("packet spec: |v| must be < 1");
  if (!(m0 > 0.0)) throw std::domain_error("packet spec: m0 must be > 0");
}

bool PacketSpec::narrow() const { return std::sqrt(sigma) <= m0 / 20.0; }

double PacketSpec::gamma() const { return 1.0 / std::sqrt(1.0 - v * v); }

double PacketSpec::k0() const { return gamma() * m0 * v; }

double PacketSpec::boosted_sigma() const {
  const double g = gamma();
  return g * g * sigma;
}

PlaneWaveSplit plane_wave_split(double k, double m0) {
  if (!(m0 > 0.0)) throw std::domain_error("plane_wave_split: m0 must be > 0");
  const double w = std::hypot(k, m0);
  return PlaneWaveSplit{{0.5 * (1.0 + w / m0), 0.0}, {0.5 * (1.0 - w / m0), 0.0}};
}

std::vector<double> default_xi_grid(const PacketSpec& spec, int n_points, double span_std) {
  spec.validate();
  if (n_points < 2) throw std::domain_error("xi grid: need at least 2 points");
  const double std_xi = spec.m0 / std::sqrt(2.0 * spec.boosted_sigma());
  std::vector<double> xi(static_cast<std::size_t>(n_points));
  const double lo = -span_std * std_xi, hi = span_std * std_xi;
  const double h = (hi - lo) / static_cast<double>(n_points - 1);
  for (int i = 0; i < n_points; ++i)
    xi[static_cast<std::size_t>(i)] = lo + h * static_cast<double>(i);
  xi.back() = hi;
  return xi;
}

namespace {

double trapezoid(std::span<const double> x, std::span<const double> f) {
  double acc = 0.0;
  for (std::size_t i = 1; i < x.size(); ++i)
    acc += 0.5 * (f[i] + f[i - 1]) * (x[i] - x[i - 1]);
  return acc;
}

PacketFields build_fields(Model model, const PacketSpec& spec, std::span<const double> xi,
                          const QuadratureOptions& quad) {
  spec.validate();
  if (xi.size() < 2) throw std::domain_error("packet build: xi grid needs >= 2 points");
  if (!std::is_sorted(xi.begin(), xi.end()) ||
      std::adjacent_find(xi.begin(), xi.end()) != xi.end())
    throw std::domain_error("packet build: xi grid must be strictly increasing");
  if (quad.nodes < 16) throw std::domain_error("packet build: too few quadrature nodes");
  // |A|^2 mass beyond the window is erfc(halfwidth_std)
  if (std::erfc(quad.halfwidth_std) > 1e-10)
    throw convergence_error("packet build: quadrature tail exceeds 1e-10 of the norm; "
                            "widen halfwidth_std");

  const double m0 = spec.m0;
  const double sb = spec.boosted_sigma();
  const double k0 = spec.k0();
  const double kw = std::sqrt(sb);
  const std::size_t nk = static_cast<std::size_t>(quad.nodes);
  const double k_lo = k0 - quad.halfwidth_std * kw;
  const double dk = 2.0 * quad.halfwidth_std * kw / static_cast<double>(nk - 1);

  // Per-mode constants: trapezoid weight * Gaussian amplitude * ingredient
  // coefficient * time phase. The spatial phase e^{i k z} is generated per
  // grid point by a stable rotation recurrence over the uniform k nodes.
  std::vector<std::complex<double>> cphi(nk), cchi(nk);
  const double norm_amp = std::pow(sb / std::numbers::pi, 0.25);
  double k_max_abs = 0.0;
  for (std::size_t j = 0; j < nk; ++j) {
    const double k = k_lo + dk * static_cast<double>(j);
    k_max_abs = std::max(k_max_abs, std::abs(k));
    const double w = std::hypot(k, m0);
    const double amp = norm_amp * std::exp(-(k - k0) * (k - k0) / (2.0 * sb));
    const double wt = (j == 0 || j == nk - 1) ? 0.5 * dk : dk;
    const std::complex<double> tphase = std::polar(1.0, -w * spec.t);
    double a_phi, a_chi;
    if (model == Model::KleinGordon) {
      a_phi = 0.5 * (1.0 + w / m0);
      a_chi = 0.5 * (1.0 - w / m0);
    } else {
      a_phi = 1.0;
      a_chi = k / (w + m0); // lower spinor amplitude, spin along the boost axis
    }
    cphi[j] = wt * amp * a_phi * tphase;
    cchi[j] = wt * amp * a_chi * tphase;
  }

  PacketFields out;
  out.model = model;
  out.spec = spec;
  out.xi.assign(xi.begin(), xi.end());
  out.phi.resize(xi.size());
  out.chi.resize(xi.size());
  out.k_max = k_max_abs;
  out.narrow_regime = spec.narrow();

  for (std::size_t i = 0; i < xi.size(); ++i) {
    const double z = xi[i] / m0 + spec.v * spec.t;
    std::complex<double> rot = std::polar(1.0, k_lo * z);
    const std::complex<double> step = std::polar(1.0, dk * z);
    std::complex<double> acc_phi{0.0, 0.0}, acc_chi{0.0, 0.0};
    for (std::size_t j = 0; j < nk; ++j) {
      acc_phi += cphi[j] * rot;
      acc_chi += cchi[j] * rot;
      rot *= step;
    }
    out.phi[i] = acc_phi;
    out.chi[i] = acc_chi;
  }
  return out;
}

PacketProfile profile_from_fields(const PacketFields& fields) {
  const std::size_t n = fields.xi.size();
  PacketProfile p;
  p.model = fields.model;
  p.xi = fields.xi;
  p.narrow_regime = fields.narrow_regime;
  p.phi_sq.resize(n);
  p.chi_sq.resize(n);
  p.rho.resize(n);
  const double sign = (fields.model == Model::KleinGordon) ? -1.0 : 1.0;
  for (std::size_t i = 0; i < n; ++i) {
    p.phi_sq[i] = std::norm(fields.phi[i]);
    p.chi_sq[i] = std::norm(fields.chi[i]);
    p.rho[i] = p.phi_sq[i] + sign * p.chi_sq[i];
  }
  const double nrm = trapezoid(p.xi, p.rho);
  if (!(nrm > 0.0)) throw convergence_error("packet build: non-positive norm on grid");
  // normalize the parts, then rebuild rho so the pointwise identity
  // rho = phi_sq -+ chi_sq holds exactly, not to rounding
  for (std::size_t i = 0; i < n; ++i) {
    p.phi_sq[i] /= nrm;
    p.chi_sq[i] /= nrm;
    p.rho[i] = p.phi_sq[i] + sign * p.chi_sq[i];
  }
  if (fields.model == Model::KleinGordon) {
    double h_max = 0.0;
    for (std::size_t i = 1; i < n; ++i)
      h_max = std::max(h_max, (p.xi[i] - p.xi[i - 1]) / fields.spec.m0);
    if (h_max <= 1.0 / (20.0 * fields.k_max)) {
      p.j = densities(fields).j;
      for (double& v : p.j) v /= nrm;
    }
  }
  return p;
}

} // namespace

PacketFields build_kg_fields(const PacketSpec& spec, std::span<const double> xi,
                             const QuadratureOptions& quad) {
  return build_fields(Model::KleinGordon, spec, xi, quad);
}

PacketFields build_dirac_fields(const PacketSpec& spec, std::span<const double> xi,
                                const QuadratureOptions& quad) {
  return build_fields(Model::Dirac, spec, xi, quad);
}

PacketProfile build_kg_packet(const PacketSpec& spec, std::span<const double> xi,
                              const QuadratureOptions& quad) {
  return profile_from_fields(build_kg_fields(spec, xi, quad));
}

PacketProfile build_dirac_packet(const PacketSpec& spec, std::span<const double> xi,
                                 const QuadratureOptions& quad) {
  return profile_from_fields(build_dirac_fields(spec, xi, quad));
}

Densities densities(const PacketFields& fields) {
  const std::size_t n = fields.xi.size();
  if (n < 3) throw grid_error("densities: need at least 3 grid points");
  Densities d;
  d.rho.resize(n);
  const double sign = (fields.model == Model::KleinGordon) ? -1.0 : 1.0;
  for (std::size_t i = 0; i < n; ++i)
    d.rho[i] = std::norm(fields.phi[i]) + sign * std::norm(fields.chi[i]);
  if (fields.model != Model::KleinGordon) return d; // Dirac current out of scope

  const double m0 = fields.spec.m0;
  double h_max = 0.0;
  for (std::size_t i = 1; i < n; ++i)
    h_max = std::max(h_max, (fields.xi[i] - fields.xi[i - 1]) / m0);
  if (fields.k_max > 0.0 && h_max > 1.0 / (20.0 * fields.k_max))
    throw grid_error("densities: grid spacing exceeds 1/(20 k_max); centered finite "
                     "differences of the fields do not converge");

  // j = (1/m0) Im(psi* d_z psi); the phase against the printed bracket form
  // is fixed so that j is real and the continuity equation holds.
  std::vector<std::complex<double>> psi(n);
  for (std::size_t i = 0; i < n; ++i) psi[i] = fields.phi[i] + fields.chi[i];
  d.j.resize(n);
  auto dz = [&](std::size_t lo, std::size_t hi) {
    return (psi[hi] - psi[lo]) / ((fields.xi[hi] - fields.xi[lo]) / m0);
  };
  d.j[0] = std::imag(std::conj(psi[0]) * dz(0, 1)) / m0;
  for (std::size_t i = 1; i + 1 < n; ++i)
    d.j[i] = std::imag(std::conj(psi[i]) * dz(i - 1, i + 1)) / m0;
  d.j[n - 1] = std::imag(std::conj(psi[n - 1]) * dz(n - 2, n - 1)) / m0;
  return d;
}

double measure_ratio(const PacketProfile& profile) {
  const std::size_t n = profile.xi.size();
  if (n < 2) throw std::domain_error("measure_ratio: degenerate grid");
  auto check_coverage = [&](const std::vector<double>& f, const char* name) {
    double peak = 0.0;
    for (double v : f) peak = std::max(peak, v);
    if (peak <= 0.0) return;
    const double boundary = std::max(f.front(), f.back());
    if (boundary > 1e-8 * peak)
      throw coverage_error(std::string("measure_ratio: ") + name +
                           " boundary exceeds 1e-8 of its peak; grid must span >= 6 "
                           "standard deviations");
  };
  check_coverage(profile.phi_sq, "phi_sq");
  check_coverage(profile.chi_sq, "chi_sq");
  const double den = trapezoid(profile.xi, profile.phi_sq);
  if (!(den > 0.0)) throw std::domain_error("measure_ratio: zero phi norm");
  return trapezoid(profile.xi, profile.chi_sq) / den;
}

PlaneWaveState inversion_image(const PlaneWaveState& wave) {
  if (!(wave.energy > 0.0))
    throw std::domain_error("inversion_image: energy must be > 0");
  PlaneWaveState out = wave;
  std::swap(out.amp_phi, out.amp_chi);
  out.master = (wave.master == Ingredient::Phi) ? Ingredient::Chi : Ingredient::Phi;
  out.phase_sign = -wave.phase_sign;
  return out;
}

} // namespace relqm
