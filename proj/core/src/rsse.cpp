#include "relqm/rsse.hpp"

#include <cmath>
#include <stdexcept>

namespace relqm {

namespace {
// Tolerated FP shortfall below the exact lower bound epsilon = -M/2.
constexpr double kBoundSlack = 1e-12;
} // namespace

double epsilon_1s(const TwoBodyMasses& masses, const Coupling& coupling, int n) {
  if (n < 1) throw std::domain_error("epsilon_1s: n must be >= 1");
  const double za = coupling.z_alpha();
  const double nn = static_cast<double>(n);
  return -masses.reduced() * za * za / (2.0 * nn * nn);
}

double binding_energy(double total_mass, double epsilon) {
  if (std::isinf(total_mass)) return -epsilon;
  if (!(total_mass > 0.0)) throw std::domain_error("binding_energy: M must be > 0");
  double radicand = 1.0 + 2.0 * epsilon / total_mass;
  if (radicand < 0.0) {
    if (radicand < -kBoundSlack)
      throw std::domain_error("binding_energy: epsilon below RSSE lower bound -M/2");
    radicand = 0.0;
  }
  return total_mass * (1.0 - std::sqrt(radicand));
}

double total_energy(double total_mass, double epsilon, double momentum) {
  if (!(total_mass > 0.0)) throw std::domain_error("total_energy: M must be > 0");
  const double radicand =
      total_mass * total_mass + momentum * momentum + 2.0 * total_mass * epsilon;
  if (radicand < 0.0) {
    if (radicand < -kBoundSlack * total_mass * total_mass)
      throw std::domain_error("total_energy: negative E^2 (epsilon below -M/2 at this P)");
    return 0.0;
  }
  return std::sqrt(radicand);
}

double critical_charge(const TwoBodyMasses& masses, double alpha) {
  if (!(alpha > 0.0)) throw std::domain_error("critical_charge: alpha must be > 0");
  if (masses.m1_infinite())
    throw std::domain_error("critical_charge: unbounded in the infinite-nucleus limit");
  return std::sqrt(masses.total() / masses.reduced()) / alpha;
}

double charge_for_binding(double binding_target, const TwoBodyMasses& masses, double alpha) {
  if (!(alpha > 0.0)) throw std::domain_error("charge_for_binding: alpha must be > 0");
  if (binding_target == 0.0) return 0.0;
  if (!(binding_target > 0.0))
    throw std::domain_error("charge_for_binding: binding must be >= 0");
  if (masses.m1_infinite()) {
    // B = mu (Z alpha)^2 / 2 inverts in closed form.
    return std::sqrt(2.0 * binding_target / masses.reduced()) / alpha;
  }
  const double M = masses.total();
  if (binding_target > M)
    throw std::domain_error("charge_for_binding: binding exceeds total mass M");
  const double z_c = critical_charge(masses, alpha);
  auto forward = [&](double z) {
    return binding_energy(M, epsilon_1s(masses, Coupling(z, alpha)));
  };
  // B(Z) is strictly increasing on [0, Z_c] with B(Z_c) = M.
  double lo = 0.0, hi = z_c;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (forward(mid) < binding_target) lo = mid;
    else hi = mid;
    if (hi - lo <= 1e-10 * hi) break;
  }
  return 0.5 * (lo + hi);
}

bool heavy_mass_ratio_advisory(const TwoBodyMasses& masses) {
  if (masses.m1_infinite()) return true;
  return masses.total() / masses.reduced() > 100.0;
}

RsseState rsse_state(const TwoBodyMasses& masses, const Coupling& coupling, int n,
                     double momentum) {
  if (masses.m1_infinite())
    throw std::domain_error("rsse_state: finite masses required (the inert-nucleus limit "
                            "has no two-body state record)");
  const double eps = epsilon_1s(masses, coupling, n);
  const double M = masses.total();
  return RsseState{masses,
                   coupling,
                   n,
                   eps,
                   binding_energy(M, eps),
                   total_energy(M, eps, momentum),
                   momentum};
}

} // namespace relqm
