#include "relqm/spectra.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace relqm {

namespace {

void require_subluminal(double v) {
  if (!(v >= 0.0) || v >= 1.0)
    throw std::domain_error("ratio_free: v must lie in [0, 1)");
}

[[noreturn]] void supercritical(Model model, double za, double bound) {
  throw std::domain_error(std::string("supercritical coupling: z_alpha = ") +
                          std::to_string(za) + " exceeds " + std::to_string(bound) +
                          " for model " + model_name(model));
}

} // namespace

AuxiliaryY kg_auxiliary_y(const Coupling& coupling) {
  const double za = coupling.z_alpha();
  if (za > 0.5) supercritical(Model::KleinGordon, za, 0.5);
  return AuxiliaryY{std::sqrt(0.25 - za * za)};
}

double nonrel_binding(const Coupling& coupling, int n, double m0) {
  if (n < 1) throw std::domain_error("nonrel_binding: n must be >= 1");
  const double za = coupling.z_alpha();
  return za * za * m0 / (2.0 * static_cast<double>(n) * static_cast<double>(n));
}

double energy_1s(Model model, const Coupling& coupling, double m0) {
  const double za = coupling.z_alpha();
  switch (model) {
  case Model::NonRelativistic:
    return m0 - nonrel_binding(coupling, 1, m0);
  case Model::KleinGordon: {
    const double y = kg_auxiliary_y(coupling).value;
    return m0 * std::sqrt(0.5 + y);
  }
  case Model::Dirac:
    if (za > 1.0) supercritical(model, za, 1.0);
    return m0 * std::sqrt(1.0 - za * za);
  case Model::Rsse:
    throw std::invalid_argument("energy_1s: the two-body model needs two masses; "
                                "use the rsse module");
  }
  throw std::invalid_argument("energy_1s: unknown model");
}

double ratio_1s(Model model, const Coupling& coupling) {
  const double za = coupling.z_alpha();
  switch (model) {
  case Model::NonRelativistic:
    return 0.0;
  case Model::KleinGordon: {
    const double y = kg_auxiliary_y(coupling).value;
    if (y == 0.0) return 1.0; // continuity value: the 1/(2y) term diverges
    const double p = y + 0.5;
    const double bracket = 2.0 + std::sqrt(p) + p * std::sqrt(p) / (2.0 * y);
    return 1.0 - 4.0 / bracket;
  }
  case Model::Dirac: {
    if (za > 1.0) supercritical(model, za, 1.0);
    const double w = std::sqrt(1.0 - za * za);
    return (1.0 - w) / (1.0 + w);
  }
  case Model::Rsse:
    throw std::invalid_argument("ratio_1s: no one-body ratio for the two-body model");
  }
  throw std::invalid_argument("ratio_1s: unknown model");
}

double ratio_free(Model model, double v) {
  require_subluminal(v);
  const double w = std::sqrt(1.0 - v * v);
  const double r = (1.0 - w) / (1.0 + w);
  switch (model) {
  case Model::Dirac: return r;
  case Model::KleinGordon: return r * r;
  default:
    throw std::invalid_argument("ratio_free: defined for the KleinGordon and Dirac models");
  }
}

BoundState1S bound_state_1s(Model model, const Coupling& coupling, double m0, int n) {
  if (n < 1) throw std::domain_error("bound_state_1s: n must be >= 1");
  if (model != Model::NonRelativistic && n != 1)
    throw std::invalid_argument("bound_state_1s: only the 1S level is implemented for "
                                "the relativistic one-body models");
  double energy = 0.0, binding = 0.0;
  if (model == Model::NonRelativistic) {
    binding = nonrel_binding(coupling, n, m0);
    energy = m0 - binding;
  } else {
    energy = energy_1s(model, coupling, m0);
    binding = m0 - energy;
  }
  return BoundState1S{model, coupling, m0, energy, binding, ratio_1s(model, coupling), n};
}

std::vector<CurvePoint> sample_curve(Model model, Quantity quantity, double za_min,
                                     double za_max, int steps) {
  if (steps < 2) throw std::range_error("sample_curve: steps must be >= 2");
  if (!(za_max > za_min)) throw std::range_error("sample_curve: need za_max > za_min");
  std::vector<CurvePoint> out;
  out.reserve(static_cast<std::size_t>(steps));
  const double h = (za_max - za_min) / static_cast<double>(steps - 1);
  for (int i = 0; i < steps; ++i) {
    const double za = (i == steps - 1) ? za_max : za_min + h * static_cast<double>(i);
    const Coupling c = Coupling::from_z_alpha(za);
    const double value = (quantity == Quantity::Energy) ? energy_1s(model, c, 1.0)
                                                        : ratio_1s(model, c);
    out.push_back(CurvePoint{za, value});
  }
  return out;
}

} // namespace relqm
