#include <cmath>
#include <numbers>

#include "gastba/errors.hpp"
#include "gastba/numeric/roots.hpp"
#include "gastba/specfun.hpp"
#include "gastba/thermo.hpp"

namespace gastba::thermo {
namespace {

constexpr double kPi = std::numbers::pi;

double li(double s, double lx) {
  if (lx == 0.0) {
    if (s <= 1.0) throw DomainError("Li_s(1) diverges for s <= 1");
    return specfun::zeta(s).value.real();
  }
  return specfun::polylog(s, std::exp(lx)).value.real();
}

double li_neg(double s, double lx) { return specfun::polylog_neg_exp(s, lx).value.real(); }

}  // namespace

ThermoState make_state(double T, double d, double mass) {
  if (!(T > 0.0) || !std::isfinite(T)) throw DomainError("temperature must be positive");
  if (!(d > 0.0) || !std::isfinite(d)) throw DomainError("dimension must be positive");
  if (!(mass > 0.0) || !std::isfinite(mass)) throw DomainError("mass must be positive");
  ThermoState s;
  s.T = T;
  s.beta = 1.0 / T;
  s.d = d;
  s.mass = mass;
  s.T_tilde = mass * T / (2.0 * kPi);
  return s;
}

ObservableReport observables_constant(const SaddleSolution& sol, const ThermoState& state,
                                      const SpeciesSpec& species) {
  species.validate();
  const double s = state.d / 2.0;
  const double lx = std::log(species.z_mu) - sol.delta;
  const double scale = std::pow(state.T_tilde, s);
  ObservableReport r;
  if (species.statistics == 1) {
    if (lx > 0.0) throw DomainError("bosonic z_mu z_delta exceeds 1");
    if (lx == 0.0 && s <= 1.0) throw DomainError("bosonic z_mu z_delta = 1 needs d > 2");
    const double ls = li(s, lx);
    r.n = scale * ls;
    r.F = -state.T * scale * (li(s + 1.0, lx) + 0.5 * sol.delta * ls);
  } else {
    const double ls = li_neg(s, lx);
    r.n = -scale * ls;
    r.F = state.T * scale * (li_neg(s + 1.0, lx) + 0.5 * sol.delta * ls);
  }
  r.p = -r.F;
  return r;
}

double central_charge_boson(double z) {
  if (!(z > 0.0 && z <= 1.0)) throw DomainError("bosonic central charge needs 0 < z <= 1");
  return 6.0 / (kPi * kPi) * specfun::rogers_dilog(z);
}

double central_charge_fermion(double z) {
  if (!(z > 0.0)) throw DomainError("fermionic central charge needs z > 0");
  return -6.0 / (kPi * kPi) * specfun::rogers_dilog(-z);
}

double central_charge(const std::vector<SaddleSolution>& solutions, const std::vector<SpeciesSpec>& species) {
  if (solutions.size() != species.size()) throw DomainError("one solution per species is required");
  double c = 0.0;
  for (std::size_t a = 0; a < species.size(); ++a) {
    species[a].validate();
    if (species[a].z_mu != 1.0) throw DomainError("central charge is defined at z_mu = 1");
    const double z = solutions[a].z_delta;
    const double ca = species[a].statistics == 1 ? central_charge_boson(z) : central_charge_fermion(z);
    c += 2.0 * species[a].mass * ca;
  }
  return c;
}

BecReport bec_critical(double d, const CouplingSpec& coupling, double n_phys, const ThermoState& state) {
  if (!(d > 2.0))
    throw DimensionError("BEC criticality needs d > 2: zeta(d/2) diverges at d = 2, so the critical "
                         "density is infinite and the critical temperature vanishes");
  if (!(n_phys > 0.0)) throw DomainError("density must be positive");
  if (coupling.d != d) throw DomainError("coupling was specified for a different dimension");
  const double s = d / 2.0;
  const double zs = specfun::zeta(s).value.real();
  const double zs1 = specfun::zeta(s + 1.0).value.real();
  const double hT = saddle::thermal_coupling(coupling, state.mass, state.T);
  BecReport r;
  r.h_T = hT;
  r.mu_c = hT * zs * state.T;
  r.n_c = zs * std::pow(state.T_tilde, s);
  r.T_c = 2.0 * kPi / state.mass * std::pow(n_phys / zs, 2.0 / d);
  r.F_c = -zs1 * state.T * std::pow(state.T_tilde, s) * (1.0 + 0.5 * hT * zs * zs / zs1);
  return r;
}

double fermi_energy(double d, double n, double T, double mass) {
  const ThermoState st = make_state(T, d, mass);
  if (!(n > 0.0)) throw DomainError("density must be positive");
  const double s = d / 2.0;
  const double target = n / std::pow(st.T_tilde, s);
  const double log_target = std::log(target);
  auto f = [&](double w) { return std::log(-li_neg(s, w)) - log_target; };
  const double lo = std::min(-1.0, log_target - 1.0);
  double hi = std::max(1.0, std::pow(std::tgamma(s + 1.0) * target, 1.0 / s)) + 1.0;
  for (int k = 0; f(hi) < 0.0; ++k) {
    if (k > 60) throw ConvergenceError("Fermi energy: could not bracket the root");
    hi *= 2.0;
  }
  const auto r = numeric::bisect(f, lo, hi);
  if (!(r.residual < 1e-12)) throw ConvergenceError("Fermi energy root did not converge");
  return T * r.root;
}

double fermi_energy_zero_T(double d, double n, double mass) {
  if (!(n > 0.0) || !(d > 0.0) || !(mass > 0.0)) throw DomainError("fermi_energy_zero_T needs positive n, d, m");
  return 2.0 * kPi / mass * std::pow(std::tgamma(d / 2.0 + 1.0) * n, 2.0 / d);
}

double thermodynamic_consistency(const SpeciesSpec& species, const CouplingSpec& coupling, double d,
                                 double T, const std::vector<double>& mu_grid,
                                 const saddle::SolverConfig& cfg) {
  if (mu_grid.size() < 3) throw DomainError("need at least three chemical potentials");
  const ThermoState st = make_state(T, d, species.mass);
  std::vector<double> F(mu_grid.size()), n(mu_grid.size());
  for (std::size_t i = 0; i < mu_grid.size(); ++i) {
    SpeciesSpec sp = species;
    sp.z_mu = std::exp(mu_grid[i] / T);
    const auto sol = saddle::solve_delta_constant(d, sp, coupling, T, cfg);
    const auto obs = observables_constant(sol, st, sp);
    F[i] = obs.F;
    n[i] = obs.n;
  }
  double worst = 0.0;
  for (std::size_t i = 1; i + 1 < mu_grid.size(); ++i) {
    const double dF = (F[i + 1] - F[i - 1]) / (mu_grid[i + 1] - mu_grid[i - 1]);
    worst = std::max(worst, std::abs(-dF - n[i]) / std::abs(n[i]));
  }
  return worst;
}

}  // namespace gastba::thermo
