#pragma once

// Saddle-point equations for the pseudo-energy in the two-body approximation.
// A constant kernel reduces the pseudo-energy to eps(k) = omega_k - mu + T delta
// with a single unknown delta (z_delta = e^-delta).

#include <string>
#include <vector>

#include "gastba/riemann.hpp"
#include "gastba/specfun.hpp"

namespace gastba::saddle {

using specfun::ComplexOrder;

/// One particle species. statistics is +1 for bosons, -1 for fermions.
struct SpeciesSpec {
  std::string name = "a";
  double mass = 0.5;
  int statistics = 1;
  double z_mu = 1.0;  ///< fugacity e^(mu/T)

  void validate() const;  ///< DomainError on a broken invariant
};

enum class CouplingMode { gamma, scattering_length, h_T, h_2d };

const char* to_string(CouplingMode mode);
CouplingMode coupling_mode_from_string(const std::string& name);

/// A coupling in one of its equivalent forms, tied to a spatial dimension.
struct CouplingSpec {
  CouplingMode mode = CouplingMode::h_T;
  double value = 0.0;
  double d = 3.0;
};

/// The dimensionless thermal coupling h_T of `coupling` at temperature T.
/// Implemented alongside the other conversions in the thermo module.
double thermal_coupling(const CouplingSpec& coupling, double mass, double T);

struct SolverConfig {
  double tol = 1e-12;
  int max_iter = 10000;
  double damping = 0.5;
  int grid_points = 512;
  double k_max_sigmas = 4.0;
  double delta_min = -10.0;   ///< quasi-periodic delta scan range
  double delta_max = 10.0;
  int delta_samples = 2000;

  /// Defaults for solvers whose residuals go through quadrature.
  static SolverConfig quadrature();
  void validate() const;
};

struct SaddleSolution {
  double delta = 0.0;
  double z_delta = 1.0;  ///< e^-delta
  double residual = 0.0;
  int iterations = 0;
  std::string branch_note;
  std::vector<double> roots;  ///< every root found, the reported one first
};

/// Constant-kernel saddle equation in d dimensions:
///   boson   delta = h_T Li_{d/2}(z_mu e^-delta)
///   fermion delta = -h_T Li_{d/2}(-z_mu e^-delta)
/// Returns the root continuously connected to delta = 0 at h_T = 0. For d > 2
/// a boson may sit exactly at z_mu e^-delta = 1 (the condensation point).
SaddleSolution solve_delta_constant(double d, const SpeciesSpec& species, const CouplingSpec& coupling,
                                    double T, const SolverConfig& cfg = {});

/// Same, with the thermal coupling already in hand.
SaddleSolution solve_delta_constant_h(double d, const SpeciesSpec& species, double h_T,
                                      const SolverConfig& cfg = {});

/// 2d boson: z = (1 - z_mu z)^h, by bisection.
SaddleSolution solve_2d_boson(double h, double z_mu, const SolverConfig& cfg = {});

/// 2d fermion: z = (1 + z_mu z)^-h. DivergentSolution when no finite root
/// exists (h <= -1 at z_mu = 1).
SaddleSolution solve_2d_fermion(double h, double z_mu, const SolverConfig& cfg = {});

/// Several 2d species: log z_a = sum_b h_ab s_b log(1 - s_b z_mu_b z_b), by
/// damped fixed-point iteration in log z. h is row-major n x n.
std::vector<SaddleSolution> solve_2d_multispecies(const std::vector<SpeciesSpec>& species,
                                                  const std::vector<double>& h,
                                                  const SolverConfig& cfg = {});

/// Right side of the constant quasi-periodic equation,
/// -Re[T^(nu-1) h_nu Li_nu(-e^-delta)].
double quasi_rhs(const riemann::QuasiKernelSpec& kernel, double T, double delta);

/// All real roots of delta = quasi_rhs(delta) on [cfg.delta_min, cfg.delta_max],
/// ordered by |delta|; the reported delta is the smallest. EmptyBracketError
/// when there is none.
SaddleSolution solve_delta_quasi(const ComplexOrder& nu, double T,
                                 const SolverConfig& cfg = SolverConfig::quadrature());

struct PseudoEnergyProfile {
  std::vector<double> k;        ///< nodes, k >= 0 (profile is even in k)
  std::vector<double> epsilon;  ///< eps(k_i)
  std::vector<double> weights;  ///< quadrature weights for the half line
  double temperature = 0.0;
  double k_max = 0.0;
  std::string kernel_id;
  double residual = 0.0;  ///< sup |eps_new - eps| / T at exit
  int iterations = 0;
  double boundary_filling = 0.0;
  std::vector<std::string> warnings;

  /// eps at k by interpolation through the nodes (quadratic in k^2 near 0).
  double epsilon_at(double kq) const;
};

/// Full fermionic integral equation at zero chemical potential,
///   eps(k) = k^2/(2m) + int dk'/2pi Re(gamma_nu |k-k'|^(2nu-1)) f(k'),
/// f = 1/(e^(eps/T) + 1), on Gauss-Legendre panels over [-k_max, k_max].
/// Requires Re nu > 1/2. ConvergenceError when the iteration does not settle.
PseudoEnergyProfile solve_profile_quasiperiodic(const ComplexOrder& nu, double T,
                                                const riemann::QuasiKernelSpec& kernel,
                                                const SolverConfig& cfg = SolverConfig::quadrature(),
                                                double mass = 0.5);

}  // namespace gastba::saddle
