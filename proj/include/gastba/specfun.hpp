#pragma once

// Special functions used throughout the gas solvers: complex Gamma, Riemann
// zeta on the whole plane, Dirichlet eta, polylogarithms of complex order on
// the real axis, the real dilogarithm and Rogers' dilogarithm, and the
// completed zeta function xi.
//
// Conventions: logarithms and complex powers use the principal branch, so for
// k > 0, k^(2nu-1) == exp((2nu-1) log k).

#include <complex>
#include <string>
#include <vector>

namespace gastba::specfun {

using cplx = std::complex<double>;

/// A complex order nu = sigma + i t. Both components must be finite.
class ComplexOrder {
 public:
  ComplexOrder(double sigma, double t = 0.0);  // NOLINT: implicit from real order is intended
  explicit ComplexOrder(cplx nu) : ComplexOrder(nu.real(), nu.imag()) {}

  double sigma() const noexcept { return sigma_; }
  double t() const noexcept { return t_; }
  cplx value() const noexcept { return {sigma_, t_}; }
  bool is_real() const noexcept { return t_ == 0.0; }

 private:
  double sigma_;
  double t_;
};

/// A transcendental evaluation together with an absolute error estimate and
/// the number of series terms or quadrature nodes that produced it.
struct EvalResult {
  cplx value;
  double abs_error_estimate = 0.0;
  int terms_or_nodes_used = 0;
  std::vector<std::string> warnings;
};

// --- Gamma ---------------------------------------------------------------

/// Gamma(nu). Lanczos approximation with reflection for Re nu < 1/2.
/// Throws PoleError at 0, -1, -2, ...
cplx gamma(const ComplexOrder& nu);

/// A logarithm of Gamma(z): exp(log_gamma(z)) == Gamma(z). The imaginary part
/// is not normalized to the principal sheet. Stable for large |Im z|.
cplx log_gamma(cplx z);

// --- Zeta and eta --------------------------------------------------------

/// Dirichlet eta(nu) = sum_{n>=1} (-1)^(n-1) n^-nu for Re nu > 0, using the
/// Cohen-Rodriguez Villegas-Zagier accelerated alternating sum.
EvalResult eta(const ComplexOrder& nu);

/// Riemann zeta anywhere in the plane except the pole at 1. Re nu > 0 goes
/// through eta(nu) / (1 - 2^(1-nu)); Re nu <= 0 through the functional
/// equation. A "NearTrivialZero" warning is attached near nu = -2n.
EvalResult zeta(const ComplexOrder& nu);

/// zeta(nu) computed via zeta(nu) = 2^nu pi^(nu-1) sin(pi nu/2) Gamma(1-nu) zeta(1-nu),
/// with zeta(1-nu) taken from `zeta`. Independent cross-check route for the strip.
EvalResult zeta_reflected(const ComplexOrder& nu);

/// zeta(nu) by Euler-Maclaurin summation. Shares no code with the eta route.
EvalResult zeta_euler_maclaurin(const ComplexOrder& nu);

/// 1 - 2^(1-nu), evaluated without cancellation near nu = 1.
cplx eta_factor(cplx nu);

// --- Polylogarithms on the real axis -------------------------------------

/// Li_nu(z) = sum z^n / n^nu for real z in [-1, 1). Negative z uses the
/// accelerated alternating sum. For 1/2 < z < 1 the sum is replaced by the
/// expansion in log z around z = 1, or by the Bose integral when Re nu > 1 and
/// 1 - z < 1e-3 or nu sits next to a positive integer. Throws DomainError
/// outside [-1, 1) and at z = -1 with Re nu <= 0.
EvalResult polylog_series(const ComplexOrder& nu, double z);

/// Li_nu(-y) for any y > 0 from the Fermi-Dirac integral
///   -Li_nu(-y) Gamma(nu) = int_0^inf y x^(nu-1) / (e^x + y) dx,   Re nu > 0.
/// Complex orders rotate the contour off the real axis (collecting residues)
/// to avoid the exp(-pi|t|/2) cancellation. Throws ConvergenceError when the
/// quadrature error estimate exceeds rel_tol*|value| (plus a tiny floor).
EvalResult fermi_dirac_polylog(const ComplexOrder& nu, double y, double rel_tol = 1e-12);

/// Li_nu(z) for 0 < z < 1 from the Bose integral
///   Li_nu(z) Gamma(nu) = int_0^inf z x^(nu-1) / (e^x - z) dx,   Re nu > 0.
EvalResult bose_polylog_integral(const ComplexOrder& nu, double z, double rel_tol = 1e-12);

/// Li_nu(z) for any real z < 1, and z == 1 when Re nu > 1 (giving zeta(nu)).
/// Dispatches to the series for z in [-1, 1) and to the Fermi-Dirac integral
/// for z < -1.
EvalResult polylog(const ComplexOrder& nu, double z);

/// Li_nu(-e^w) for any real w, with Re nu > 0 once w > 0. Large w uses the
/// Sommerfeld-type asymptotic series (plus its exponentially small reflected
/// term), so e^w never has to be formed.
EvalResult polylog_neg_exp(const ComplexOrder& nu, double w);

/// Real part of Li_nu(z) for real nu (the imaginary part vanishes).
double polylog_real(double nu, double z);

// --- Dilogarithms --------------------------------------------------------

/// Real dilogarithm Li_2(x) for x <= 1.
double dilog(double x);

/// Rogers dilogarithm Lr_2(z) = Li_2(z) + 1/2 log|z| log(1-z) for z <= 1,
/// with Lr_2(0) = 0 and Lr_2(1) = pi^2/6. DomainError for z > 1.
double rogers_dilog(double z);

// --- Completed zeta ------------------------------------------------------

/// xi(nu) = pi^(-nu/2) Gamma(nu/2) zeta(nu). PoleError at nu = 0 and nu = 1.
cplx xi_function(const ComplexOrder& nu);

}  // namespace gastba::specfun
