#pragma once

// Quasi-periodic kernels of complex order nu, their real-space potentials,
// a zero scanner for zeta on a vertical line, and the xi-duality and
// Casimir-channel checks.

#include <string>
#include <vector>

#include "gastba/specfun.hpp"

namespace gastba::riemann {

using specfun::ComplexOrder;
using specfun::cplx;

/// Constants of the quasi-periodic kernel K(k) = -Re(gamma_nu k^(2nu-1)).
struct QuasiKernelSpec {
  ComplexOrder nu{1.0};
  cplx gamma_nu;      ///< 1 / ((1 - 2^(1-nu)) Gamma(nu))
  cplx h_nu;          ///< gamma_nu Gamma(nu) / 2 pi
  cplx b_nu;          ///< normalization of the real-space potential
  double sigma = 0;   ///< 2 Re nu
  double alpha = 0;   ///< Im nu
  std::vector<std::string> warnings;
};

/// Builds the kernel constants. ExcludedOrderError where 1 - 2^(1-nu) = 0 or
/// Gamma(nu) has a pole. Near nu = 1/2 the potential normalization b_nu is
/// degenerate; a "PoleWarning" is attached and b_nu is set to zero.
QuasiKernelSpec make_kernel_spec(const ComplexOrder& nu);

/// b_nu sin(pi nu) Gamma(1 - 2nu); equals gamma_nu by the duplication identity.
cplx kernel_prefactor_from_potential(const QuasiKernelSpec& spec);

/// K(k) = -Re[b_nu k^(2nu-1) sin(pi nu) Gamma(1-2nu)] for k > 0 (gamma_nu is
/// used where that product is degenerate). K(0) = 0 when Re(2nu-1) > 0,
/// DomainError otherwise.
double kernel_closed_form(const QuasiKernelSpec& spec, double k);

struct KernelIntegral {
  double value;
  double abs_error_estimate;
};

/// K(k) = Re(2 b_nu int_0^inf x^(-2nu) sin^2(kx/2) dx) by quadrature.
/// The range is split at x* = 2 pi / k; the tail is the sum of a closed-form
/// power integral and an oscillatory piece whose contour is turned onto
/// the imaginary direction. DomainError unless 1/2 < Re nu < 3/2 and k > 0.
KernelIntegral kernel_from_potential(const QuasiKernelSpec& spec, double k);

/// V(x) = Re(b_nu / |x|^(2nu)). SingularityError at x = 0.
double potential_realspace(const QuasiKernelSpec& spec, double x);

struct ZeroCandidate {
  ComplexOrder nu{0.5};
  double abs_g = 0;            ///< |(1 - 2^(1-nu)) zeta(nu)| at the candidate
  bool refined = false;
  double newton_residual = 0;  ///< |zeta(nu)| after refinement
  double abs_zeta_check = 0;   ///< |zeta(nu)| from the Euler-Maclaurin route
  int newton_iterations = 0;
};

struct ZeroScanConfig {
  double step = 0.02;        ///< t-grid spacing
  double threshold = 0.05;   ///< |g| below which a local minimum is a candidate
  double zeta_tol = 1e-8;    ///< refined candidates must reach |zeta| below this
  int max_newton = 60;
};

/// Scans g(sigma + i t) = (1 - 2^(1-nu)) zeta(nu) over [t_min, t_max], flags
/// local minima of |g| under the threshold, and refines each by Newton along
/// the line Re nu = sigma. Results are sorted by t.
std::vector<ZeroCandidate> find_zeros(double sigma, double t_min, double t_max,
                                      const ZeroScanConfig& cfg = {});

/// max over T of |Re[T^(nu-1) h_nu Li_nu(-1)]|, the right side of the constant
/// quasi-periodic saddle equation at delta = 0.
double verify_zero_delta(const ZeroCandidate& candidate, const std::vector<double>& temperatures);

/// |xi(nu) - xi(1-nu)| / (1 + |xi(nu)|).
double check_duality(const ComplexOrder& nu);

struct CasimirCheck {
  double free_energy;    ///< thermal channel coefficient
  double ground_energy;  ///< compactified channel coefficient
  double residual;       ///< |F - E0| / |F|
  std::string route;     ///< "direct" or "limit" (even d)
};

/// Thermal-channel and Casimir-channel coefficients of a free massless boson in
/// d dimensions. For even d the product Gamma(-d/2) zeta(-d) is a pole times a
/// zero and is taken as a symmetric limit with Richardson extrapolation.
CasimirCheck casimir_channel_check(int d);

}  // namespace gastba::riemann
