// Acceptance gate: one line per criterion, exit 0 only if all pass.
// Usage: acceptance <cli-path> <golden-dir>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "relqm/radial.hpp"
#include "relqm/rsse.hpp"
#include "relqm/spectra.hpp"
#include "relqm/table.hpp"
#include "relqm/units.hpp"
#include "relqm/wavepacket.hpp"

using namespace relqm;

namespace {

int g_failed = 0;

class Criterion {
public:
  Criterion(int number, std::string title)
      : number_(number), title_(std::move(title)),
        start_(std::chrono::steady_clock::now()) {}

  void expect(bool ok, const std::string& detail) {
    if (!ok) {
      ok_ = false;
      details_.push_back(detail);
    }
  }

  void note(const std::string& text) { notes_.push_back(text); }

  void finish(double budget_seconds = 0.0) {
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start_)
            .count();
    if (budget_seconds > 0.0 && secs > budget_seconds) {
      ok_ = false;
      details_.push_back("runtime " + std::to_string(secs) + " s exceeds budget");
    }
    std::printf("[%s] criterion %2d: %s (%.2f s)\n", ok_ ? "PASS" : "FAIL", number_,
                title_.c_str(), secs);
    for (const auto& n : notes_) std::printf("       note: %s\n", n.c_str());
    for (const auto& d : details_) std::printf("       fail: %s\n", d.c_str());
    if (!ok_) ++g_failed;
  }

private:
  int number_;
  std::string title_;
  std::chrono::steady_clock::time_point start_;
  bool ok_ = true;
  std::vector<std::string> notes_;
  std::vector<std::string> details_;
};

Coupling za(double z_alpha) { return Coupling::from_z_alpha(z_alpha); }

double trap(const std::vector<double>& x, const std::vector<double>& f) {
  double acc = 0.0;
  for (std::size_t i = 1; i < x.size(); ++i)
    acc += 0.5 * (f[i] + f[i - 1]) * (x[i] - x[i - 1]);
  return acc;
}

double fwhm(const std::vector<double>& x, const std::vector<double>& y) {
  const double half = *std::max_element(y.begin(), y.end()) / 2.0;
  std::size_t i0 = 0, i1 = y.size() - 1;
  while (y[i0] < half) ++i0;
  while (y[i1] < half) --i1;
  auto cross = [&](std::size_t a, std::size_t b) {
    return x[a] + (half - y[a]) * (x[b] - x[a]) / (y[b] - y[a]);
  };
  return cross(i1 + 1, i1) - cross(i0 - 1, i0);
}

std::string run_cli(const std::string& cli, const std::string& args, int* exit_code) {
  const std::string out_path = "acceptance_cli.tmp";
  const std::string cmd = "\"" + cli + "\" " + args + " > " + out_path + " 2>/dev/null";
  const int rc = std::system(cmd.c_str());
  if (exit_code) *exit_code = (rc == -1) ? -1 : WEXITSTATUS(rc);
  std::ifstream in(out_path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  std::remove(out_path.c_str());
  return ss.str();
}

std::string fmt(double x) { return format_number(x, 12); }

} // namespace

int main(int argc, char** argv) {
  if (argc < 3) {
    std::cerr << "usage: acceptance <cli-path> <golden-dir>\n";
    return 2;
  }
  const std::string cli = argv[1];
  const std::string golden_dir = argv[2];

  { // 1
    Criterion c(1, "KG endpoint energy m0/sqrt(2) at z_alpha = 1/2");
    const double e = energy_1s(Model::KleinGordon, za(0.5), 1.0);
    c.expect(std::abs(e - 0.70710678118654752) <= 1e-12, "E = " + fmt(e));
    c.finish();
  }

  { // 2
    Criterion c(2, "Dirac endpoint: E(1) = 0 and R -> 1");
    const double e = energy_1s(Model::Dirac, za(1.0), 1.0);
    c.expect(std::abs(e) <= 1e-12, "E = " + fmt(e));
    const double r_end = ratio_1s(Model::Dirac, za(1.0));
    c.expect(std::abs(r_end - 1.0) <= 1e-12, "R(1) = " + fmt(r_end));
    c.expect(ratio_1s(Model::Dirac, za(1.0 - 1e-8)) > 0.999,
             "R just below the endpoint");
    c.finish();
  }

  { // 3
    Criterion c(3, "KG shooting eigenvalues vs closed form (rel <= 1e-6)");
    for (double z : {0.1, 0.3, 0.45}) {
      const auto res = solve_kg_1s(1.0, za(z));
      const double exact = energy_1s(Model::KleinGordon, za(z), 1.0);
      const double rel = std::abs(res.eigenvalue - exact) / exact;
      c.expect(res.converged && rel <= 1e-6,
               "z_alpha = " + fmt(z) + ": rel = " + fmt(rel));
    }
    c.finish(10.0);
  }

  { // 4
    Criterion c(4, "Dirac shooting eigenvalues vs closed form (rel <= 1e-6)");
    for (double z : {0.2, 0.5, 0.8}) {
      const auto res = solve_dirac_1s(1.0, za(z));
      const double exact = energy_1s(Model::Dirac, za(z), 1.0);
      const double rel = std::abs(res.eigenvalue - exact) / exact;
      c.expect(res.converged && rel <= 1e-6,
               "z_alpha = " + fmt(z) + ": rel = " + fmt(rel));
    }
    c.finish(10.0);
  }

  { // 5
    Criterion c(5, "radial ingredient ratios vs closed forms (abs <= 1e-6)");
    for (double z : {0.1, 0.2, 0.3, 0.4}) {
      const auto res = solve_kg_1s(1.0, za(z));
      const double r = ratio_from_radial(res, Model::KleinGordon, 1.0, za(z));
      const double exact = ratio_1s(Model::KleinGordon, za(z));
      c.expect(std::abs(r - exact) <= 1e-6,
               "KG z_alpha = " + fmt(z) + ": |diff| = " + fmt(std::abs(r - exact)));
    }
    // Dirac comparison is recorded either way; agreement is the expectation
    double worst = 0.0;
    for (double z : {0.2, 0.4, 0.6, 0.8}) {
      const auto res = solve_dirac_1s(1.0, za(z));
      const double r = ratio_from_radial(res, Model::Dirac, 1.0, za(z));
      worst = std::max(worst, std::abs(r - ratio_1s(Model::Dirac, za(z))));
    }
    c.note("Dirac component-norm ratio vs closed form: max |diff| = " + fmt(worst) +
           (worst <= 1e-6 ? " (agrees)" : " (discrepancy recorded)"));
    c.finish(10.0);
  }

  { // 6
    Criterion c(6, "free-packet ratios vs closed forms (abs <= 1e-3)");
    const double sigma = 1.0 / 2500.0; // sqrt(sigma) = m0/50
    for (double v : {0.5, 0.9, 0.99}) {
      const PacketSpec spec{sigma, v, 1.0, 0.0};
      const auto xi = default_xi_grid(spec);
      const double r_kg = measure_ratio(build_kg_packet(spec, xi));
      const double r_dir = measure_ratio(build_dirac_packet(spec, xi));
      const double e_kg = std::abs(r_kg - ratio_free(Model::KleinGordon, v));
      const double e_dir = std::abs(r_dir - ratio_free(Model::Dirac, v));
      c.expect(e_kg <= 1e-3, "KG v = " + fmt(v) + ": |diff| = " + fmt(e_kg));
      c.expect(e_dir <= 1e-3, "Dirac v = " + fmt(v) + ": |diff| = " + fmt(e_dir));
    }
    c.finish(30.0);
  }

  { // 7
    Criterion c(7, "Lorentz contraction of the packet width, boost of the peak");
    const double sigma = 1.0 / 2500.0;
    const PacketSpec rest{sigma, 0.0, 1.0, 0.0};
    const auto rest_prof = build_kg_packet(rest, default_xi_grid(rest, 4001));
    const double w0 = fwhm(rest_prof.xi, rest_prof.rho);
    double prev_peak = *std::max_element(rest_prof.rho.begin(), rest_prof.rho.end());
    for (double v : {0.5, 0.9, 0.99}) {
      const PacketSpec spec{sigma, v, 1.0, 0.0};
      const auto prof = build_kg_packet(spec, default_xi_grid(spec, 4001));
      const double ratio = fwhm(prof.xi, prof.rho) / w0;
      const double expect = std::sqrt(1.0 - v * v);
      c.expect(std::abs(ratio / expect - 1.0) <= 0.02,
               "v = " + fmt(v) + ": FWHM ratio " + fmt(ratio) + " vs " + fmt(expect));
      const double peak = *std::max_element(prof.rho.begin(), prof.rho.end());
      c.expect(peak > prev_peak, "peak rho not increasing at v = " + fmt(v));
      prev_peak = peak;
    }
    c.finish();
  }

  { // 8
    Criterion c(8, "discrete continuity residual <= 1e-6 (KG packet)");
    const PacketSpec base{0.0025, 0.5, 1.0, 0.0};
    const auto xi = default_xi_grid(base, 6001, 7.0);
    const double dt = 0.4;
    auto fields_at = [&](double t) {
      PacketSpec spec = base;
      spec.t = t;
      std::vector<double> shifted(xi);
      for (double& x : shifted) x -= base.m0 * base.v * t;
      return build_kg_fields(spec, shifted);
    };
    const auto fm = fields_at(-dt);
    const auto f0 = fields_at(0.0);
    const auto fp = fields_at(+dt);
    const auto dm = densities(fm);
    const auto d0 = densities(f0);
    const auto dp = densities(fp);
    const double nrm = trap(f0.xi, d0.rho);
    double resid = 0.0;
    for (std::size_t i = 2; i + 2 < xi.size(); ++i) {
      const double drdt = (dp.rho[i] - dm.rho[i]) / (2.0 * dt) / nrm;
      const double djdz = (d0.j[i + 1] - d0.j[i - 1]) / ((xi[i + 1] - xi[i - 1])) / nrm;
      resid = std::max(resid, std::abs(drdt + djdz));
    }
    c.expect(resid <= 1e-6, "Linf residual = " + fmt(resid));
    c.finish(10.0);
  }

  { // 9
    Criterion c(9, "RSSE bounds and round trip");
    const double M = 3.25;
    c.expect(binding_energy(M, -M / 2.0) == M, "B(M, -M/2) not exactly M");
    c.expect(total_energy(M, -M / 2.0, 0.0) == 0.0, "E(M, -M/2, 0) not exactly 0");
    std::mt19937 rng(424242);
    std::uniform_real_distribution<double> mdist(1e-2, 1e4);
    std::uniform_real_distribution<double> udist(0.0, 0.5);
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
      const double m = mdist(rng);
      const double eps = -udist(rng) * m;
      const double sum = total_energy(m, eps, 0.0) + binding_energy(m, eps);
      worst = std::max(worst, std::abs(sum - m) / m);
    }
    c.expect(worst <= 1e-12, "E + B = M worst rel = " + fmt(worst));
    c.finish();
  }

  { // 10
    Criterion c(10, "critical and threshold charges");
    const double zc_eq = critical_charge(masses(1.0, 1.0), paper_alpha);
    c.expect(std::abs(zc_eq - 274.0) <= 1e-9 * 274.0, "Z_c(equal) = " + fmt(zc_eq));
    const auto inert = TwoBodyMasses::infinite_nucleus(1.0);
    const double zp = charge_for_binding(1.0, inert, paper_alpha);
    c.expect(std::abs(zp - 193.74725804511402) <= 1e-9 * zp, "Z' = " + fmt(zp));
    const double zpp = charge_for_binding(2.0, inert, paper_alpha);
    c.expect(std::abs(zpp - 274.0) <= 1e-9 * 274.0, "Z'' = " + fmt(zpp));
    // proton/electron mass ratio 1836.152: sqrt(M/mu) * 137 = 5873.694332...
    const double zh = critical_charge(masses(1836.152, 1.0), paper_alpha);
    c.expect(std::abs(zh - 5873.6943323534146) <= 0.1, "Z_c(hydrogen) = " + fmt(zh));
    c.finish();
  }

  { // 11
    Criterion c(11, "figure curve goldens: monotone, endpoints, byte-stable");
    for (const std::string model : {"kg", "dirac"}) {
      const std::string args =
          "curve --model " + model + " --quantity both --steps 101";
      int rc1 = 0, rc2 = 0;
      const std::string out1 = run_cli(cli, args, &rc1);
      const std::string out2 = run_cli(cli, args, &rc2);
      c.expect(rc1 == 0 && rc2 == 0, model + " curve exit codes");
      c.expect(out1 == out2, model + " curve not byte-stable across runs");

      std::istringstream ss(out1);
      const Table t = read_csv(ss);
      c.expect(t.rows.size() == 101, model + " row count");
      std::vector<double> e(t.rows.size()), r(t.rows.size());
      for (std::size_t i = 0; i < t.rows.size(); ++i) {
        e[i] = std::stod(t.rows[i][2]);
        r[i] = std::stod(t.rows[i][3]);
      }
      bool e_down = true, r_up = true;
      for (std::size_t i = 1; i < e.size(); ++i) {
        e_down = e_down && e[i] < e[i - 1];
        r_up = r_up && r[i] > r[i - 1];
      }
      c.expect(e_down, model + " energy curve not strictly decreasing");
      c.expect(r_up, model + " ratio curve not strictly increasing");
      c.expect(std::abs(e.front() - 1.0) <= 1e-8, model + " E(0) endpoint");
      c.expect(std::abs(r.front() - 0.0) <= 1e-8, model + " R(0) endpoint");
      const double e_end = model == "kg" ? 0.70710678118654752 : 0.0;
      c.expect(std::abs(e.back() - e_end) <= 1e-8, model + " E(end) endpoint");
      c.expect(std::abs(r.back() - 1.0) <= 1e-8, model + " R(end) endpoint");

      const std::string golden_path = golden_dir + "/figure" +
                                      (model == std::string("kg") ? "2_kg" : "4_dirac") +
                                      ".csv";
      std::ifstream gf(golden_path, std::ios::binary);
      c.expect(gf.good(), "golden file missing: " + golden_path);
      if (gf.good()) {
        const Table golden = read_csv(gf);
        std::string why;
        c.expect(tables_match(t, golden, 1e-12, &why),
                 model + " golden mismatch: " + why);
      }
    }
    c.finish();
  }

  if (g_failed == 0) {
    std::printf("acceptance: all criteria passed\n");
    return 0;
  }
  std::printf("acceptance: %d criterion(s) FAILED\n", g_failed);
  return 1;
}
