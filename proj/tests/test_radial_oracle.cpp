#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "relqm/radial.hpp"

using namespace relqm;

namespace {
Coupling za(double z_alpha) { return Coupling::from_z_alpha(z_alpha); }

double rel_err(double a, double b) { return std::abs(a - b) / std::abs(b); }
} // namespace

TEST_CASE("schrodinger ground state vs closed form -mu (z alpha)^2 / 2") {
  const auto r1 = solve_schrodinger_1s(1.0, za(0.2));
  REQUIRE(r1.converged);
  CHECK(r1.node_count == 0);
  CHECK(std::abs(r1.eigenvalue - (-0.02)) <= 1e-8);

  const auto r2 = solve_schrodinger_1s(0.5, za(0.1));
  REQUIRE(r2.converged);
  CHECK(std::abs(r2.eigenvalue - (-0.0025)) <= 1e-8);
}

TEST_CASE("schrodinger: no bound state at zero coupling") {
  CHECK_THROWS_AS(solve_schrodinger_1s(1.0, za(0.0)), convergence_error);
}

TEST_CASE("klein-gordon eigenvalues vs closed form") {
  const struct {
    double z;
    double expected; // m0 sqrt(1/2 + sqrt(1/4 - (z alpha)^2))
  } cases[] = {
      {0.1, 0.99493615300512405},
      {0.2, 0.97890631293070329},
      {0.3, 0.9486832980505138},
      {0.4, 0.89442719099991588},
      {0.45, 0.84731632061293005},
  };
  for (const auto& c : cases) {
    const auto res = solve_kg_1s(1.0, za(c.z));
    REQUIRE(res.converged);
    CHECK(res.node_count == 0);
    CHECK(rel_err(res.eigenvalue, c.expected) <= 1e-6);
    CHECK(res.residual <= 1e-6);
  }
  CHECK_THROWS_AS(solve_kg_1s(1.0, za(0.6)), std::domain_error);
}

TEST_CASE("klein-gordon near-origin exponent u ~ r^(1/2 + y)") {
  const auto res = solve_kg_1s(1.0, za(0.3));
  const double s = 0.5 + std::sqrt(0.25 - 0.09);
  const double measured = std::log(res.u[8] / res.u[0]) / std::log(res.r[8] / res.r[0]);
  CHECK(measured == doctest::Approx(s).epsilon(1e-3));
}

TEST_CASE("dirac eigenvalues vs closed form") {
  const struct {
    double z;
    double expected; // m0 sqrt(1 - (z alpha)^2)
    double tol;
  } cases[] = {
      {0.2, 0.97979589711327124, 1e-6},
      {0.4, 0.916515138991168, 1e-6},
      {0.5, 0.86602540378443865, 1e-6},
      {0.6, 0.8, 1e-6},
      {0.8, 0.6, 1e-6},
      {0.999, 0.044710177812216314, 1e-5}, // near-critical stress case
  };
  for (const auto& c : cases) {
    const auto res = solve_dirac_1s(1.0, za(c.z));
    REQUIRE(res.converged);
    CHECK(res.node_count == 0);
    CHECK(rel_err(res.eigenvalue, c.expected) <= c.tol);
  }
  CHECK_THROWS_AS(solve_dirac_1s(1.0, za(1.0)), std::domain_error);
  CHECK_THROWS_AS(solve_dirac_1s(1.0, za(0.0)), convergence_error);
}

TEST_CASE("kg ingredient ratio from quadrature vs closed form") {
  const struct {
    double z;
    double expected; // 1 - 4 [2 + sqrt(y+1/2) + (y+1/2)^(3/2)/(2y)]^(-1)
  } cases[] = {
      {0.1, 3.261368355770532e-5},
      {0.2, 5.9880253621852695e-4},
      {0.3, 3.9721611025592726e-3},
      {0.4, 0.021286236252208188},
  };
  for (const auto& c : cases) {
    const auto res = solve_kg_1s(1.0, za(c.z));
    REQUIRE(res.converged);
    const double r = ratio_from_radial(res, Model::KleinGordon, 1.0, za(c.z));
    CHECK(std::abs(r - c.expected) <= 1e-6);
  }
}

TEST_CASE("dirac component-norm ratio equals the closed form") {
  // (1 - sqrt(1 - (z alpha)^2)) / (1 + sqrt(1 - (z alpha)^2)); the ground
  // solution has a constant small/large ratio, so the norms obey it exactly
  for (double z : {0.2, 0.4, 0.6, 0.8}) {
    const auto res = solve_dirac_1s(1.0, za(z));
    REQUIRE(res.converged);
    const double w = std::sqrt(1.0 - z * z);
    const double expected = (1.0 - w) / (1.0 + w);
    const double r = ratio_from_radial(res, Model::Dirac, 1.0, za(z));
    CHECK(std::abs(r - expected) <= 1e-6);
  }
}

TEST_CASE("ratio_from_radial input validation") {
  auto res = solve_kg_1s(1.0, za(0.3));
  CHECK_THROWS_AS(ratio_from_radial(res, Model::NonRelativistic, 1.0, za(0.3)),
                  std::invalid_argument);
  res.converged = false;
  CHECK_THROWS_AS(ratio_from_radial(res, Model::KleinGordon, 1.0, za(0.3)),
                  convergence_error);
}

TEST_CASE("node steering: requesting the first excited state") {
  // 2S of the schrodinger problem: eps = -mu (z alpha)^2 / 8, one node
  SolveOptions opts;
  opts.target_nodes = 1;
  const auto res = solve_schrodinger_1s(1.0, za(0.2), opts);
  REQUIRE(res.converged);
  CHECK(res.node_count == 1);
  CHECK(rel_err(res.eigenvalue, -0.005) <= 1e-6);
}

TEST_CASE("ground solve always reports zero nodes") {
  for (double z : {0.1, 0.3, 0.45}) {
    CHECK(solve_kg_1s(1.0, za(z)).node_count == 0);
  }
  CHECK(solve_dirac_1s(1.0, za(0.7)).node_count == 0);
  CHECK(solve_schrodinger_1s(2.0, za(0.25)).node_count == 0);
}

TEST_CASE("bad bracket is reported, not silently accepted") {
  SolveOptions opts;
  opts.bracket = {{0.9999, 0.99999}}; // far above the za = 0.45 ground state
  CHECK_THROWS_AS(solve_kg_1s(1.0, za(0.45), opts), convergence_error);
}

TEST_CASE("wavefunction tail is negligible at r_max") {
  for (double z : {0.1, 0.45}) {
    const auto res = solve_kg_1s(1.0, za(z));
    CHECK(std::abs(res.u.back()) <= 1e-8); // u normalized to max |u| = 1
  }
  const auto d = solve_dirac_1s(1.0, za(0.6));
  CHECK(std::abs(d.u.back()) <= 1e-8);
}

TEST_CASE("grid refinement reduces the eigenvalue error at integrator order") {
  const double exact = 0.9486832980505138; // za = 0.3
  SolveOptions coarse, fine;
  coarse.n_points = 1000;
  fine.n_points = 2000;
  const double e_coarse = std::abs(solve_kg_1s(1.0, za(0.3), coarse).eigenvalue - exact);
  const double e_fine = std::abs(solve_kg_1s(1.0, za(0.3), fine).eigenvalue - exact);
  if (e_fine > 1e-12) { // above the bisection-tolerance floor
    CHECK(e_coarse / e_fine >= 4.0);
  } else {
    CHECK(e_coarse <= 1e-10);
  }
}

TEST_CASE("radial grid type invariants") {
  CHECK_THROWS_AS(RadialGrid::logarithmic(0.0, 1.0, 2000), std::domain_error);
  CHECK_THROWS_AS(RadialGrid::logarithmic(1.0, 0.5, 2000), std::domain_error);
  CHECK_THROWS_AS(RadialGrid::logarithmic(1e-6, 10.0, 999), std::domain_error);
  const auto pos = RadialGrid::logarithmic(1e-6, 10.0, 1000).positions();
  CHECK(pos.size() == 1000);
  CHECK(pos.front() == 1e-6);
  CHECK(pos.back() == 10.0);
  const auto uni = RadialGrid::uniform(1.0, 2.0, 1001).positions();
  CHECK(uni[500] == doctest::Approx(1.5).epsilon(1e-12));
}

TEST_CASE("custom grid override is honored") {
  SolveOptions opts;
  opts.grid = RadialGrid::logarithmic(1e-5, 120.0, 8000);
  const auto res = solve_kg_1s(1.0, za(0.3), opts);
  REQUIRE(res.converged);
  CHECK(res.r.size() == 8000);
  CHECK(rel_err(res.eigenvalue, 0.9486832980505138) <= 1e-6);
}

TEST_CASE("uniform spacing works given an inner radius the series start resolves") {
  SolveOptions opts;
  opts.grid = RadialGrid::uniform(0.01, 200.0, 20000);
  const auto res = solve_schrodinger_1s(1.0, za(0.2), opts);
  REQUIRE(res.converged);
  CHECK(rel_err(res.eigenvalue, -0.02) <= 1e-6);
}

TEST_CASE("solver-vs-closed-form agreement at randomly drawn couplings") {
  std::mt19937 rng(31337);
  std::uniform_real_distribution<double> kg_dist(0.05, 0.45);
  std::uniform_real_distribution<double> dirac_dist(0.05, 0.95);
  for (int i = 0; i < 3; ++i) {
    const double zk = kg_dist(rng);
    const double exact_kg = std::sqrt(0.5 + std::sqrt(0.25 - zk * zk));
    CHECK(rel_err(solve_kg_1s(1.0, za(zk)).eigenvalue, exact_kg) <= 1e-6);
    const double zd = dirac_dist(rng);
    const double exact_d = std::sqrt(1.0 - zd * zd);
    CHECK(rel_err(solve_dirac_1s(1.0, za(zd)).eigenvalue, exact_d) <= 1e-6);
  }
}
