// relqm command line: spectra, figure curves, wave-packet profiles, two-body
// quantities and the radial-oracle solvers, all emitted as deterministic CSV.
//
// Exit codes: 0 success, 1 usage or domain error, 2 solver non-convergence.

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "relqm/errors.hpp"
#include "relqm/radial.hpp"
#include "relqm/rsse.hpp"
#include "relqm/spectra.hpp"
#include "relqm/table.hpp"
#include "relqm/units.hpp"
#include "relqm/wavepacket.hpp"

namespace {

using namespace relqm;

struct CommonFlags {
  std::string alpha_mode = "paper";
  std::string output;
  int precision = 9;

  double alpha() const {
    if (alpha_mode == "paper") return paper_alpha;
    if (alpha_mode == "codata") return codata_alpha;
    throw std::invalid_argument("unknown --alpha mode '" + alpha_mode + "'");
  }
};

void add_common(CLI::App* cmd, CommonFlags& flags) {
  cmd->add_option("--alpha", flags.alpha_mode,
                  "fine-structure constant: paper (1/137) or codata")
      ->capture_default_str()
      ->check(CLI::IsMember({"paper", "codata"}));
  cmd->add_option("--output", flags.output,
                  "output file path (default: standard output)");
  cmd->add_option("--precision", flags.precision,
                  "significant digits for numeric output")
      ->capture_default_str()
      ->check(CLI::Range(1, 17));
}

void emit(const CommonFlags& flags, const std::string& text) {
  if (flags.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(flags.output, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot open output file '" + flags.output + "'");
  out << text;
}

Model parse_model(const std::string& name, bool allow_nonrel) {
  if (name == "kg") return Model::KleinGordon;
  if (name == "dirac") return Model::Dirac;
  if (allow_nonrel && name == "nonrel") return Model::NonRelativistic;
  throw std::invalid_argument("unsupported --model '" + name + "' here");
}

double parse_mass(const std::string& text) {
  if (text == "inf" || text == "infinite")
    return std::numeric_limits<double>::infinity();
  std::size_t used = 0;
  const double m = std::stod(text, &used);
  if (used != text.size()) throw std::invalid_argument("bad mass '" + text + "'");
  return m;
}

// ---- spectrum ---------------------------------------------------------

int run_spectrum(const std::string& model_name, double z, double m0, int n,
                 const CommonFlags& flags) {
  const Model model = parse_model(model_name, true);
  const Coupling coupling(z, flags.alpha());
  const auto st = bound_state_1s(model, coupling, m0, n);
  Table t;
  t.columns = {"model", "z", "z_alpha", "m0", "n", "energy_e", "binding_b", "ratio_r"};
  t.add_row({model_name, format_number(z, flags.precision),
             format_number(st.coupling.z_alpha(), flags.precision),
             format_number(m0, flags.precision), std::to_string(st.n),
             format_number(st.energy, flags.precision),
             format_number(st.binding, flags.precision),
             format_number(st.ratio, flags.precision)});
  emit(flags, to_csv(t));
  return 0;
}

// ---- curve ------------------------------------------------------------

int run_curve(const std::string& model_name, const std::string& quantity, int steps,
              std::optional<double> za_min, std::optional<double> za_max,
              const CommonFlags& flags) {
  const Model model = parse_model(model_name, false);
  const double domain_max = (model == Model::KleinGordon) ? 0.5 : 1.0;
  const double lo = za_min.value_or(0.0);
  const double hi = za_max.value_or(domain_max);
  const bool want_energy = quantity == "energy" || quantity == "both";
  const bool want_ratio = quantity == "ratio" || quantity == "both";

  std::vector<CurvePoint> energies, ratios;
  if (want_energy) energies = sample_curve(model, Quantity::Energy, lo, hi, steps);
  if (want_ratio) ratios = sample_curve(model, Quantity::Ratio, lo, hi, steps);

  // normalized charge abscissa for figure axes: Z/68.5 (KG), Z/137 (Dirac)
  const double z_norm = (model == Model::KleinGordon) ? 68.5 : 137.0;
  Table t;
  t.columns = {"z_alpha",
               model == Model::KleinGordon ? "z_over_68p5" : "z_over_137"};
  if (want_energy) t.columns.push_back("e_over_m0");
  if (want_ratio) t.columns.push_back("r");
  const std::size_t rows = want_energy ? energies.size() : ratios.size();
  for (std::size_t i = 0; i < rows; ++i) {
    const double za = want_energy ? energies[i].z_alpha : ratios[i].z_alpha;
    std::vector<double> row = {za, za / (flags.alpha() * z_norm)};
    if (want_energy) row.push_back(energies[i].value);
    if (want_ratio) row.push_back(ratios[i].value);
    t.add_numeric_row(row, flags.precision);
  }
  emit(flags, to_csv(t));
  return 0;
}

// ---- packet -----------------------------------------------------------

int run_packet(const std::string& model_name, double v, double sigma_rel, double m0,
               double time, int points, double span_std, const CommonFlags& flags) {
  const Model model = parse_model(model_name, false);
  const PacketSpec spec{sigma_rel * m0 * m0, v, m0, time};
  spec.validate();
  const auto xi = default_xi_grid(spec, points, span_std);
  const PacketProfile prof = (model == Model::KleinGordon)
                                 ? build_kg_packet(spec, xi)
                                 : build_dirac_packet(spec, xi);
  if (!prof.narrow_regime)
    std::cerr << "note: sqrt(sigma) > m0/20; outside the narrow-packet regime the "
                 "closed-form free ratios acquire finite-width corrections\n";
  Table t;
  t.columns = {"xi", "phi_sq", "chi_sq", "rho"};
  for (std::size_t i = 0; i < prof.xi.size(); ++i)
    t.add_numeric_row({prof.xi[i], prof.phi_sq[i], prof.chi_sq[i], prof.rho[i]},
                      flags.precision);
  emit(flags, to_csv(t));
  return 0;
}

// ---- rsse -------------------------------------------------------------

int run_rsse(const std::string& m1_text, double m2, double z, int n, double momentum,
             const CommonFlags& flags) {
  const double m1 = parse_mass(m1_text);
  if (std::isinf(m1))
    throw std::invalid_argument("rsse needs finite masses; for the inert-nucleus "
                                "limit use critical-z --binding");
  const auto mm = masses(m1, m2);
  if (heavy_mass_ratio_advisory(mm))
    std::cerr << "note: M/mu = " << format_number(mm.total() / mm.reduced(), 6)
              << " > 100; the two-body treatment of so lopsided a pair is "
                 "questionable (heavy partner nearly inert)\n";
  const auto st = rsse_state(mm, Coupling(z, flags.alpha()), n, momentum);
  Table t;
  t.columns = {"m1",      "m2",      "total_m", "reduced_mu", "z",      "z_alpha",
               "n",       "epsilon", "binding_b", "total_e"};
  t.add_row({format_number(m1, flags.precision), format_number(m2, flags.precision),
             format_number(mm.total(), flags.precision),
             format_number(mm.reduced(), flags.precision),
             format_number(z, flags.precision),
             format_number(st.coupling.z_alpha(), flags.precision), std::to_string(n),
             format_number(st.epsilon, flags.precision),
             format_number(st.binding, flags.precision),
             format_number(st.total, flags.precision)});
  emit(flags, to_csv(t));
  return 0;
}

// ---- critical-z -------------------------------------------------------

int run_critical_z(const std::string& m1_text, double m2, std::optional<double> binding,
                   const CommonFlags& flags) {
  const double m1 = parse_mass(m1_text);
  const auto mm = std::isinf(m1) ? TwoBodyMasses::infinite_nucleus(m2)
                                 : TwoBodyMasses(m1, m2);
  if (heavy_mass_ratio_advisory(mm))
    std::cerr << "note: M/mu > 100; see the rsse applicability remark\n";
  const double zeta = binding ? charge_for_binding(*binding, mm, flags.alpha())
                              : critical_charge(mm, flags.alpha());
  emit(flags, format_number(zeta, flags.precision) + "\n");
  return 0;
}

// ---- oracle -----------------------------------------------------------

int run_oracle(const std::string& model_name, double z, double mass, int points,
               int target_nodes, const CommonFlags& flags) {
  const Coupling coupling(z, flags.alpha());
  const double za = coupling.z_alpha();
  SolveOptions opts;
  opts.n_points = points;
  opts.target_nodes = target_nodes;

  RadialSolveResult res;
  double closed = 0.0;
  std::string ratio_numeric, ratio_closed;
  if (model_name == "schrodinger") {
    res = solve_schrodinger_1s(mass, coupling, opts);
    closed = -mass * za * za / 2.0;
  } else if (model_name == "kg") {
    res = solve_kg_1s(mass, coupling, opts);
    closed = mass * std::sqrt(0.5 + std::sqrt(0.25 - za * za));
    const double w = std::sqrt(0.25 - za * za);
    const double p = w + 0.5;
    ratio_closed = format_number(
        1.0 - 4.0 / (2.0 + std::sqrt(p) + p * std::sqrt(p) / (2.0 * w)),
        flags.precision);
    ratio_numeric = format_number(
        ratio_from_radial(res, Model::KleinGordon, mass, coupling), flags.precision);
  } else if (model_name == "dirac") {
    res = solve_dirac_1s(mass, coupling, opts);
    closed = mass * std::sqrt(1.0 - za * za);
    const double w = std::sqrt(1.0 - za * za);
    ratio_closed = format_number((1.0 - w) / (1.0 + w), flags.precision);
    ratio_numeric = format_number(ratio_from_radial(res, Model::Dirac, mass, coupling),
                                  flags.precision);
  } else {
    throw std::invalid_argument("oracle --model must be schrodinger, kg or dirac");
  }

  Table t;
  t.columns = {"model",      "z_alpha",    "mass",       "eigenvalue",
               "closed_form", "rel_error",  "node_count", "iterations",
               "residual",   "converged",  "ratio_numeric", "ratio_closed"};
  const double rel = std::abs(res.eigenvalue - closed) / std::abs(closed);
  t.add_row({model_name, format_number(za, flags.precision),
             format_number(mass, flags.precision),
             format_number(res.eigenvalue, flags.precision),
             format_number(closed, flags.precision), format_number(rel, 3),
             std::to_string(res.node_count), std::to_string(res.iterations),
             format_number(res.residual, 3), res.converged ? "1" : "0",
             ratio_numeric, ratio_closed});
  emit(flags, to_csv(t));
  return res.converged ? 0 : 2;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"relqm: relativistic hydrogenlike spectra, ingredient ratios and "
               "boosted wave packets (natural units hbar = c = 1; masses and "
               "energies share the unit of --m0)"};
  app.require_subcommand(1);

  // spectrum
  auto* spectrum = app.add_subcommand(
      "spectrum", "1S energy, binding and ingredient ratio for one model");
  std::string sp_model;
  double sp_z = 0.0, sp_m0 = 1.0;
  int sp_n = 1;
  CommonFlags sp_flags;
  spectrum->add_option("--model", sp_model, "nonrel, kg or dirac")->required();
  spectrum->add_option("--z", sp_z, "nuclear charge number (real-valued, >= 0)")
      ->required();
  spectrum->add_option("--m0", sp_m0, "orbiting-particle rest mass")
      ->capture_default_str();
  spectrum->add_option("--n", sp_n, "principal quantum number (nonrel only)")
      ->capture_default_str();
  add_common(spectrum, sp_flags);

  // curve
  auto* curve = app.add_subcommand(
      "curve", "sweep 1S energy and/or ratio over the coupling domain (figure data)");
  std::string cv_model, cv_quantity = "both";
  int cv_steps = 101;
  std::optional<double> cv_min, cv_max;
  CommonFlags cv_flags;
  curve->add_option("--model", cv_model, "kg or dirac")->required();
  curve->add_option("--quantity", cv_quantity, "energy, ratio or both")
      ->capture_default_str()
      ->check(CLI::IsMember({"energy", "ratio", "both"}));
  curve->add_option("--steps", cv_steps, "number of grid points (>= 2)")
      ->capture_default_str();
  curve->add_option("--za-min", cv_min, "lower z*alpha (default 0)");
  curve->add_option("--za-max", cv_max,
                    "upper z*alpha (default: model domain end, 0.5 kg / 1 dirac)");
  add_common(curve, cv_flags);

  // packet
  auto* packet = app.add_subcommand(
      "packet", "boosted free wave packet profile |phi|^2, |chi|^2, rho on a xi grid");
  std::string pk_model;
  double pk_v = 0.0, pk_sigma = 0.0025, pk_m0 = 1.0, pk_t = 0.0, pk_span = 7.0;
  int pk_points = 2001;
  CommonFlags pk_flags;
  packet->add_option("--model", pk_model, "kg or dirac")->required();
  packet->add_option("--v", pk_v, "boost velocity in units of c, |v| < 1")->required();
  packet->add_option("--sigma-rel", pk_sigma,
                     "momentum-space variance parameter sigma in units of m0^2")
      ->capture_default_str();
  packet->add_option("--m0", pk_m0, "rest mass")->capture_default_str();
  packet->add_option("--t", pk_t, "evaluation time (units 1/m0)")->capture_default_str();
  packet->add_option("--points", pk_points, "xi grid points")->capture_default_str();
  packet->add_option("--span-std", pk_span,
                     "half-width of the xi grid in density standard deviations")
      ->capture_default_str();
  add_common(packet, pk_flags);

  // rsse
  auto* rsse = app.add_subcommand(
      "rsse", "two-body state: reduced-mass eigenvalue, binding and total energy");
  std::string rs_m1;
  double rs_m2 = 1.0, rs_z = 0.0, rs_p = 0.0;
  int rs_n = 1;
  CommonFlags rs_flags;
  rsse->add_option("--m1", rs_m1, "first rest mass (finite)")->required();
  rsse->add_option("--m2", rs_m2, "second rest mass")->capture_default_str();
  rsse->add_option("--z", rs_z, "nuclear charge number")->required();
  rsse->add_option("--n", rs_n, "principal quantum number")->capture_default_str();
  rsse->add_option("--momentum", rs_p, "center-of-mass momentum P")
      ->capture_default_str();
  add_common(rsse, rs_flags);

  // critical-z
  auto* critz = app.add_subcommand(
      "critical-z",
      "critical charge sqrt(M/mu)/alpha, or with --binding the charge giving that "
      "binding energy (accepts --m1 inf for the inert-nucleus limit)");
  std::string cz_m1;
  double cz_m2 = 1.0;
  std::optional<double> cz_binding;
  CommonFlags cz_flags;
  critz->add_option("--m1", cz_m1, "first rest mass, or 'inf'")->required();
  critz->add_option("--m2", cz_m2, "second rest mass")->capture_default_str();
  critz->add_option("--binding", cz_binding,
                    "target binding energy (same units as the masses)");
  add_common(critz, cz_flags);

  // oracle
  auto* oracle = app.add_subcommand(
      "oracle", "shooting-method radial eigenvalue solver vs the closed form");
  std::string or_model;
  double or_z = 0.0, or_mass = 1.0;
  int or_points = 20000, or_nodes = 0;
  CommonFlags or_flags;
  oracle->add_option("--model", or_model, "schrodinger, kg or dirac")->required();
  oracle->add_option("--z", or_z, "nuclear charge number")->required();
  oracle->add_option("--mass", or_mass,
                     "reduced mass mu (schrodinger) or rest mass m0 (kg/dirac)")
      ->capture_default_str();
  oracle->add_option("--points", or_points, "radial grid points")
      ->capture_default_str();
  oracle->add_option("--target-nodes", or_nodes, "radial nodes of the target state")
      ->capture_default_str();
  add_common(oracle, or_flags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 1;
  }

  try {
    if (spectrum->parsed())
      return run_spectrum(sp_model, sp_z, sp_m0, sp_n, sp_flags);
    if (curve->parsed())
      return run_curve(cv_model, cv_quantity, cv_steps, cv_min, cv_max, cv_flags);
    if (packet->parsed())
      return run_packet(pk_model, pk_v, pk_sigma, pk_m0, pk_t, pk_points, pk_span,
                        pk_flags);
    if (rsse->parsed()) return run_rsse(rs_m1, rs_m2, rs_z, rs_n, rs_p, rs_flags);
    if (critz->parsed()) return run_critical_z(cz_m1, cz_m2, cz_binding, cz_flags);
    if (oracle->parsed())
      return run_oracle(or_model, or_z, or_mass, or_points, or_nodes, or_flags);
  } catch (const convergence_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
