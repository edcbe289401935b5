#include <doctest.h>

#include <cmath>
#include <numbers>

#include "gastba/errors.hpp"
#include "gastba/thermo.hpp"
#include "oracles.hpp"

using namespace gastba;
using namespace gastba::thermo;

namespace {

constexpr double kPi = std::numbers::pi;
const double kR = (std::sqrt(5.0) - 1.0) / 2.0;

SpeciesSpec species(int statistics, double z_mu = 1.0) {
  SpeciesSpec s;
  s.statistics = statistics;
  s.z_mu = z_mu;
  return s;
}

SaddleSolution at_delta(double delta) {
  SaddleSolution s;
  s.delta = delta;
  s.z_delta = std::exp(-delta);
  return s;
}

// -dF/dmu by a fourth-order central difference, each point solved afresh
double minus_dF_dmu(const SpeciesSpec& sp, double h_T, double d, double T, double mu, double step) {
  const auto st = make_state(T, d, sp.mass);
  auto F = [&](double m) {
    SpeciesSpec s = sp;
    s.z_mu = std::exp(m / T);
    return observables_constant(saddle::solve_delta_constant_h(d, s, h_T), st, s).F;
  };
  return -(F(mu - 2 * step) - 8 * F(mu - step) + 8 * F(mu + step) - F(mu + 2 * step)) / (12 * step);
}

}  // namespace

TEST_CASE("state invariants") {
  const auto st = make_state(2.5, 3.0, 0.7);
  CHECK(st.beta * st.T == 1.0);
  CHECK(st.T_tilde == 0.7 * 2.5 / (2.0 * kPi));
  CHECK_THROWS_AS(make_state(-1.0, 3.0), DomainError);
}

TEST_CASE("free 1d fermion at z_mu = 1: density and pressure constants") {
  const double T = 1.7;
  const auto st = make_state(T, 1.0);
  const auto obs = observables_constant(at_delta(0.0), st, species(-1));
  const double root = std::sqrt(T / (4.0 * kPi));
  const double zh = static_cast<double>(oracle::kZetaHalf);
  const double z3h = static_cast<double>(oracle::kZeta3Half);
  CHECK(std::abs(obs.n / root - (1.0 - std::sqrt(2.0)) * zh) < 1e-13);
  CHECK(std::abs(obs.p / (T * root) - (1.0 - 1.0 / std::sqrt(2.0)) * z3h) < 1e-13);
  CHECK(obs.p == -obs.F);
}

TEST_CASE("classical limit: n -> z_mu T~^(d/2)") {
  for (double d : {1.0, 2.0, 3.0})
    for (int st : {1, -1}) {
      const auto s = make_state(1.0, d);
      const double z = 1e-9;
      const auto obs = observables_constant(at_delta(0.0), s, species(st, z));
      CHECK(std::abs(obs.n / (z * std::pow(s.T_tilde, d / 2.0)) - 1.0) < 1e-8);
      CHECK(obs.n >= 0.0);
    }
}

TEST_CASE("observables against brute-force momentum integrals") {
  // 3d boson below condensation
  const double T = 0.8, mass = 0.5;
  const auto st = make_state(T, 3.0, mass);
  SpeciesSpec sp = species(1, 0.6);
  const auto sol = saddle::solve_delta_constant_h(3.0, sp, 0.4);
  const auto obs = observables_constant(sol, st, sp);
  CHECK(std::abs(obs.n - oracle::bose_density_3d(mass, T, std::log(0.6) - sol.delta)) < 1e-12 * obs.n);
}

TEST_CASE("2d central charges: rational table") {
  struct Row {
    int statistics;
    double h, z, c;
  };
  const Row rows[] = {{1, 0.0, 1.0, 1.0},           {1, 0.5, kR, 0.6},  {1, 1.0, 0.5, 0.5},
                      {1, 2.0, kR * kR, 0.4},       {-1, -0.5, 1.0 / kR, 0.6}, {-1, 0.0, 1.0, 0.5},
                      {-1, 1.0, kR, 0.4}};
  for (const auto& r : rows) {
    const auto sol = r.statistics == 1 ? saddle::solve_2d_boson(r.h, 1.0) : saddle::solve_2d_fermion(r.h, 1.0);
    CHECK(std::abs(sol.z_delta - r.z) < 1e-12);
    CHECK(std::abs(central_charge({sol}, {species(r.statistics)}) - r.c) < 1e-10);
  }
  // h -> -1+: z -> infinity and c -> 1
  double prev = 0.0;
  for (double eps : {1e-2, 1e-4, 1e-7}) {
    const auto sol = saddle::solve_2d_fermion(-1.0 + eps, 1.0);
    const double c = central_charge({sol}, {species(-1)});
    CHECK(c > prev);
    prev = c;
  }
  CHECK(std::abs(prev - 1.0) < 1e-4);
}

TEST_CASE("central charge decreases with the coupling") {
  double prev = 2.0;
  for (double h : {0.0, 0.5, 1.0, 2.0}) {
    const double c = central_charge_boson(saddle::solve_2d_boson(h, 1.0).z_delta);
    CHECK(c < prev);
    prev = c;
  }
  prev = 2.0;
  for (double h : {-0.5, 0.0, 1.0}) {
    const double c = central_charge_fermion(saddle::solve_2d_fermion(h, 1.0).z_delta);
    CHECK(c < prev);
    prev = c;
  }
}

TEST_CASE("central charge of the supersymmetric pair and the 2d free energy") {
  const std::vector<SpeciesSpec> sp = {species(1), species(-1)};
  const auto sols = saddle::solve_2d_multispecies(sp, {1.0, 1.0, 1.0, 1.0});
  CHECK(std::abs(central_charge(sols, sp) - 0.75) < 1e-10);
  // F = -c pi T^2 / 24 at m = 1/2
  const double T = 1.3;
  const auto st = make_state(T, 2.0);
  const auto sol = saddle::solve_2d_fermion(1.0, 1.0);
  const auto obs = observables_constant(sol, st, species(-1));
  CHECK(std::abs(obs.F + 0.4 * kPi * T * T / 24.0) < 1e-13);
}

TEST_CASE("BEC critical point") {
  const double T = 1.0;
  const auto st = make_state(T, 3.0);
  const double z3h = static_cast<double>(oracle::kZeta3Half);
  const auto free = bec_critical(3.0, {CouplingMode::h_T, 0.0, 3.0}, 1.0, st);
  CHECK(std::abs(free.T_c - 4.0 * kPi * std::pow(z3h, -2.0 / 3.0)) < 1e-13 * free.T_c);
  CHECK(std::abs(free.F_c + static_cast<double>(oracle::kZeta5Half) * T * std::pow(st.T_tilde, 1.5)) < 1e-13 * std::abs(free.F_c));
  CHECK(free.mu_c == 0.0);

  for (double h : {0.1, 0.5, 2.0}) {
    const auto b = bec_critical(3.0, {CouplingMode::h_T, h, 3.0}, 1.0, st);
    CHECK(std::abs(b.mu_c / T - h * z3h) < 1e-14);
    CHECK(b.T_c == free.T_c);

    // re-solve at (mu_c, T_c): the density must come back as n_phys
    const auto sc = make_state(b.T_c, 3.0);
    const double mu_c = h * z3h * b.T_c;
    SpeciesSpec sp = species(1, std::exp(mu_c / b.T_c));
    const auto sol = saddle::solve_delta_constant_h(3.0, sp, h);
    const auto obs = observables_constant(sol, sc, sp);
    CHECK(std::abs(obs.n - 1.0) < 1e-8);
    const double lx = std::log(sp.z_mu) - sol.delta;
    CHECK(std::abs(oracle::bose_density_3d(0.5, b.T_c, lx) - 1.0) < 1e-8);
  }
  try {
    bec_critical(2.0, {CouplingMode::h_T, 0.0, 2.0}, 1.0, make_state(1.0, 2.0));
    FAIL("expected DimensionError");
  } catch (const DimensionError& e) {
    CHECK(std::string(e.what()).find("zeta") != std::string::npos);
  }
}

TEST_CASE("Fermi energy") {
  const double w0 = fermi_energy_zero_T(3.0, 1.0);
  CHECK(std::abs(w0 - 4.0 * kPi * std::pow(std::tgamma(2.5), 2.0 / 3.0)) < 1e-13 * w0);
  const double w = fermi_energy(3.0, 1.0, 0.01 * w0);
  CHECK(w / (0.01 * w0) >= 40.0);
  CHECK(std::abs(w - w0) / w0 < 0.01);
  // the 2d correction is exponentially small; in 1d and 3d it shrinks like T^2
  CHECK(std::abs(fermi_energy(2.0, 2.0, 0.01 * fermi_energy_zero_T(2.0, 2.0)) / fermi_energy_zero_T(2.0, 2.0) - 1.0) <
        1e-13);
  for (double d : {1.0, 3.0}) {
    const double z = fermi_energy_zero_T(d, 2.0);
    double prev = 1.0;
    for (double f : {0.05, 0.01, 0.001}) {
      const double gap = std::abs(fermi_energy(d, 2.0, f * z) - z) / z;
      CHECK(gap < prev);
      prev = gap;
    }
  }
  // 2d has a closed form: n = T~ log(1 + e^(w/T))
  const double T = 0.3, n = 0.8;
  const double exact = T * std::log(std::expm1(n / (T / (4.0 * kPi))));
  CHECK(std::abs(fermi_energy(2.0, n, T) - exact) < 1e-12 * exact);
  // finite temperature against the quadrature oracle of the density
  for (double Tf : {0.5, 2.0, 8.0}) {
    const double wf = fermi_energy(3.0, 1.0, Tf);
    const double tt = Tf / (4.0 * kPi);
    CHECK(std::abs(std::pow(tt, 1.5) * oracle::fermi_dirac_integral(1.5, wf / Tf) - 1.0) < 1e-11);
  }
}

TEST_CASE("coupling conversions") {
  const double T = 0.7, m = 0.5;
  const auto st = make_state(T, 3.0, m);
  const double lambda = std::sqrt(2.0 * kPi / (m * T));
  CHECK(std::abs(saddle::thermal_coupling({CouplingMode::scattering_length, lambda / std::sqrt(2.0 * kPi), 3.0}, m, T) -
                 1.0) < 1e-14);
  const CouplingSpec g{CouplingMode::gamma, 3.3, 2.0};
  CHECK(saddle::thermal_coupling(g, m, 0.1) == saddle::thermal_coupling(g, m, 10.0));
  for (auto mode : {CouplingMode::gamma, CouplingMode::scattering_length, CouplingMode::h_T}) {
    const CouplingSpec c{CouplingMode::h_T, 0.37, 3.0};
    const auto there = coupling_convert(c, mode, st);
    const auto back = coupling_convert(there, CouplingMode::h_T, st);
    CHECK(std::abs(back.value - 0.37) < 1e-14);
  }
  CHECK_THROWS_AS(saddle::thermal_coupling({CouplingMode::scattering_length, 1.0, 2.0}, m, T), DomainError);
}

TEST_CASE("Legendre consistency: -dF/dmu = n") {
  struct Case {
    double d;
    int statistics;
    double h;
    double mu;
  };
  const Case cases[] = {{2.0, -1, 0.0, 0.2}, {3.0, 1, 0.0, -0.5}, {2.0, -1, 1.0, 0.1}, {1.0, -1, 0.7, 0.3},
                        {1.0, 1, 0.5, -0.4}, {3.0, -1, -0.4, 0.5}, {3.0, 1, 0.3, -0.2}, {2.0, 1, 0.8, -0.1}};
  for (const auto& c : cases) {
    const double T = 1.0;
    SpeciesSpec sp = species(c.statistics, std::exp(c.mu / T));
    const auto st = make_state(T, c.d);
    const double n = observables_constant(saddle::solve_delta_constant_h(c.d, sp, c.h), st, sp).n;
    const double fd = minus_dF_dmu(sp, c.h, c.d, T, c.mu, 1e-3);
    CHECK_MESSAGE(std::abs(fd - n) / n < 1e-6, "d=" << c.d << " s=" << c.statistics << " h=" << c.h);

    std::vector<double> grid;
    for (int i = -4; i <= 4; ++i) grid.push_back(c.mu + 1e-3 * i);
    CHECK(thermodynamic_consistency(sp, {CouplingMode::h_T, c.h, c.d}, c.d, T, grid) < 1e-5);
  }
}
