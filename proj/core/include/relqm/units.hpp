#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>

/// Shared conventions: natural units (hbar = c = 1) throughout, so masses,
/// energies and inverse lengths carry one common unit. Charge numbers are
/// real-valued so coupling curves can be swept continuously.
namespace relqm {

/// Fine-structure constant as the round 1/137 used for quoted critical values.
inline constexpr double paper_alpha = 1.0 / 137.0;
/// CODATA 2018 value, for physical runs.
inline constexpr double codata_alpha = 1.0 / 137.035999084;

enum class Model { NonRelativistic, KleinGordon, Dirac, Rsse };

inline const char* model_name(Model m) {
  switch (m) {
  case Model::NonRelativistic: return "nonrel";
  case Model::KleinGordon: return "kg";
  case Model::Dirac: return "dirac";
  case Model::Rsse: return "rsse";
  }
  return "?";
}

/// Dimensionless Coulomb coupling: charge number z (>= 0, real-valued),
/// fine-structure constant alpha, and their product z_alpha = z * alpha.
class Coupling {
public:
  Coupling(double z, double alpha) : z_(z), alpha_(alpha) {
    if (!(z >= 0.0)) throw std::domain_error("coupling: charge number z must be >= 0");
    if (!(alpha > 0.0)) throw std::domain_error("coupling: alpha must be > 0");
    z_alpha_ = z * alpha;
  }

  /// Convenience for sweeping the product directly (z reconstructed as za/alpha).
  static Coupling from_z_alpha(double z_alpha, double alpha = paper_alpha) {
    return Coupling(z_alpha / alpha, alpha);
  }

  double z() const { return z_; }
  double alpha() const { return alpha_; }
  double z_alpha() const { return z_alpha_; }

private:
  double z_;
  double alpha_;
  double z_alpha_;
};

inline Coupling make_coupling(double z, double alpha) { return Coupling(z, alpha); }

/// Rest masses of a two-body system with derived total M = m1 + m2 and
/// reduced mu = m1 m2 / M. The inert-nucleus limit is an explicit flag so
/// that mu = m2 holds exactly rather than to rounding.
class TwoBodyMasses {
public:
  TwoBodyMasses(double m1, double m2) : m1_(m1), m2_(m2) {
    if (std::isinf(m1) && m1 > 0) {
      infinite_m1_ = true;
      if (!(m2 > 0.0)) throw std::domain_error("masses: m2 must be > 0");
      return;
    }
    if (!(m1 > 0.0) || !(m2 > 0.0)) throw std::domain_error("masses: rest masses must be > 0");
    if (!std::isfinite(m1) || !std::isfinite(m2))
      throw std::domain_error("masses: non-finite mass (use infinite_nucleus for the inert limit)");
  }

  static TwoBodyMasses infinite_nucleus(double m2) {
    return TwoBodyMasses(std::numeric_limits<double>::infinity(), m2);
  }

  bool m1_infinite() const { return infinite_m1_; }
  double m1() const { return infinite_m1_ ? std::numeric_limits<double>::infinity() : m1_; }
  double m2() const { return m2_; }

  /// Total rest mass M (infinite in the inert-nucleus limit).
  double total() const {
    return infinite_m1_ ? std::numeric_limits<double>::infinity() : m1_ + m2_;
  }

  /// Reduced mass mu = m1 m2 / (m1 + m2); exactly m2 when m1 is infinite.
  double reduced() const { return infinite_m1_ ? m2_ : m1_ * m2_ / (m1_ + m2_); }

private:
  double m1_;
  double m2_;
  bool infinite_m1_ = false;
};

inline TwoBodyMasses masses(double m1, double m2) { return TwoBodyMasses(m1, m2); }

} // namespace relqm
