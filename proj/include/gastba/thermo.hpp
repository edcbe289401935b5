#pragma once

// Observables of converged saddle solutions: density, free energy density,
// pressure, 2d central charge, BEC critical quantities, Fermi energy, and the
// coupling conversions. Units: k_B = hbar = 1.

#include <optional>
#include <vector>

#include "gastba/saddle.hpp"

namespace gastba::thermo {

using saddle::CouplingMode;
using saddle::CouplingSpec;
using saddle::SaddleSolution;
using saddle::SpeciesSpec;

struct ThermoState {
  double T = 1.0;
  double beta = 1.0;
  double T_tilde = 1.0 / (4.0 * 3.14159265358979323846);  ///< m T / 2 pi
  double d = 3.0;
  double mass = 0.5;
};

/// DomainError for T <= 0, d <= 0 or mass <= 0.
ThermoState make_state(double T, double d, double mass = 0.5);

struct ObservableReport {
  double n = 0.0;
  double F = 0.0;
  double p = 0.0;  ///< -F
  std::optional<double> c;
};

/// n and F for a constant-kernel solution (species fugacity and statistics
/// taken from `species`, delta from `sol`). DomainError when a bosonic
/// z_mu z_delta exceeds 1 (or equals 1 with d <= 2).
ObservableReport observables_constant(const SaddleSolution& sol, const ThermoState& state,
                                      const SpeciesSpec& species);

/// c_+(z) = 6/pi^2 Lr2(z), c_-(z) = -6/pi^2 Lr2(-z).
double central_charge_boson(double z);
double central_charge_fermion(double z);

/// c = 2 sum_a m_a c_{s_a}(z_a) for 2d solutions at z_mu = 1.
double central_charge(const std::vector<SaddleSolution>& solutions,
                      const std::vector<SpeciesSpec>& species);

struct BecReport {
  double mu_c;
  double n_c;
  double T_c;
  double F_c;
  double h_T;
};

/// Critical point of the interacting Bose gas for d > 2 at the template's
/// temperature (mu_c, n_c, F_c) and for density n_phys (T_c).
/// DimensionError for d <= 2.
BecReport bec_critical(double d, const CouplingSpec& coupling, double n_phys, const ThermoState& state);

/// omega_F solving n = -T~^(d/2) Li_{d/2}(-e^(omega_F/T)). No coupling enters.
double fermi_energy(double d, double n, double T, double mass = 0.5);

/// omega_F at T = 0: (2 pi / m) (Gamma(d/2 + 1) n)^(2/d).
double fermi_energy_zero_T(double d, double n, double mass = 0.5);

/// Exact conversion among gamma, scattering length and h_T (h_2d in 2d).
CouplingSpec coupling_convert(const CouplingSpec& coupling, CouplingMode target, const ThermoState& state);

/// Worst relative mismatch between -dF/dmu (central differences on mu_grid) and
/// n at the interior grid points, solving the constant-kernel equation at each.
double thermodynamic_consistency(const SpeciesSpec& species, const CouplingSpec& coupling, double d,
                                 double T, const std::vector<double>& mu_grid,
                                 const saddle::SolverConfig& cfg = {});

}  // namespace gastba::thermo
