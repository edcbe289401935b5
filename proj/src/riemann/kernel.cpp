#include <cmath>
#include <numbers>

#include "gastba/errors.hpp"
#include "gastba/numeric/quadrature.hpp"
#include "gastba/riemann.hpp"

namespace gastba::riemann {
namespace {

constexpr double kPi = std::numbers::pi;

bool is_nonpositive_integer(cplx z) {
  return z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::round(z.real());
}

bool has_pole_warning(const QuasiKernelSpec& spec) {
  for (const auto& w : spec.warnings)
    if (w == "PoleWarning") return true;
  return false;
}

}  // namespace

QuasiKernelSpec make_kernel_spec(const ComplexOrder& nu) {
  const cplx s = nu.value();
  const cplx factor = specfun::eta_factor(s);
  if (std::abs(factor) < 1e-13)
    throw ExcludedOrderError("1 - 2^(1-nu) vanishes at this order; the kernel normalization is undefined");
  if (is_nonpositive_integer(s)) throw ExcludedOrderError("Gamma(nu) has a pole at this order");

  QuasiKernelSpec spec;
  spec.nu = nu;
  spec.gamma_nu = 1.0 / (factor * specfun::gamma(nu));
  spec.h_nu = 1.0 / (2.0 * kPi * factor);
  spec.sigma = 2.0 * nu.sigma();
  spec.alpha = nu.t();

  const cplx a = (1.0 - 2.0 * s) / 2.0;
  if (is_nonpositive_integer(a)) {
    spec.b_nu = 0.0;
    spec.warnings.emplace_back("PoleWarning");
  } else {
    const cplx sh = std::sinh((1.0 - s) * std::numbers::ln2 / 2.0);
    spec.b_nu = -std::exp((5.0 * s - 3.0) / 2.0 * std::numbers::ln2) /
                (std::sqrt(kPi) * specfun::gamma(ComplexOrder(a)) * sh);
    if (std::abs(s - 0.5) < 1e-3) spec.warnings.emplace_back("PoleWarning");
  }
  return spec;
}

cplx kernel_prefactor_from_potential(const QuasiKernelSpec& spec) {
  const cplx s = spec.nu.value();
  const cplx g = 1.0 - 2.0 * s;
  if (is_nonpositive_integer(g) || has_pole_warning(spec)) return spec.gamma_nu;
  return spec.b_nu * std::sin(kPi * s) * specfun::gamma(ComplexOrder(g));
}

double kernel_closed_form(const QuasiKernelSpec& spec, double k) {
  const cplx p = 2.0 * spec.nu.value() - 1.0;
  if (k == 0.0) {
    if (p.real() > 0.0) return 0.0;
    throw DomainError("kernel is unbounded at k = 0 unless Re(2nu - 1) > 0");
  }
  if (!(k > 0.0)) throw DomainError("kernel is defined for k > 0");
  return -std::real(kernel_prefactor_from_potential(spec) * std::exp(p * std::log(k)));
}

KernelIntegral kernel_from_potential(const QuasiKernelSpec& spec, double k) {
  const cplx s = 2.0 * spec.nu.value();
  if (!(spec.nu.sigma() > 0.5 && spec.nu.sigma() < 1.5))
    throw DomainError("the potential integral converges only for 1/2 < Re(nu) < 3/2");
  if (!(k > 0.0)) throw DomainError("kernel is defined for k > 0");

  // I = int_0^inf y^-s sin^2(y/2) dy; the kernel is Re(2 b k^(s-1) I).
  // [0, 1]: termwise from (1 - cos y)/2 = sum_j (-1)^(j+1) y^(2j) / (2 (2j)!).
  cplx head = 0.0;
  double fact = 1.0;
  for (int j = 1; j <= 20; ++j) {
    fact *= (2.0 * j - 1.0) * (2.0 * j);
    const double sign = (j % 2 == 1) ? 1.0 : -1.0;
    head += sign / (2.0 * fact) / (2.0 * j + 1.0 - s);
  }

  numeric::QuadratureOptions opts;
  opts.abs_tol = 1e-16;
  opts.rel_tol = 1e-14;
  const double Y = 2.0 * kPi;
  const auto mid = numeric::integrate(
      [&](double y) { return std::exp(-s * std::log(y)) * (0.5 * (1.0 - std::cos(y))); }, 1.0, Y, opts);

  // Tail: (1/2) int_Y^inf y^-s dy - (1/2) int_Y^inf y^-s cos y dy. The
  // oscillatory part is split into e^(+-iy) and each contour is turned to
  // y = Y +- i u, where the integrand decays like e^-u.
  const cplx i(0.0, 1.0);
  const auto up = numeric::integrate(
      [&](double u) { return std::exp(-s * std::log(cplx(Y, u)) - u); }, 0.0, 60.0, opts);
  const auto down = numeric::integrate(
      [&](double u) { return std::exp(-s * std::log(cplx(Y, -u)) - u); }, 0.0, 60.0, opts);
  const cplx jp = i * std::exp(i * Y) * up.value;
  const cplx jm = -i * std::exp(-i * Y) * down.value;
  const cplx power_tail = std::exp((1.0 - s) * std::log(Y)) / (s - 1.0);
  const cplx I = head + mid.value + 0.5 * power_tail - 0.25 * (jp + jm);

  const cplx pref = 2.0 * spec.b_nu * std::exp((s - 1.0) * std::log(k));
  const double err_I = mid.abs_error + 0.25 * (up.abs_error + down.abs_error) +
                       1e-15 * (std::abs(head) + std::abs(power_tail));
  if (!mid.converged || !up.converged || !down.converged)
    throw ConvergenceError("potential integral quadrature did not converge");
  return {std::real(pref * I), std::abs(pref) * err_I};
}

double potential_realspace(const QuasiKernelSpec& spec, double x) {
  if (x == 0.0) throw SingularityError("the potential is singular at x = 0");
  return std::real(spec.b_nu * std::exp(-2.0 * spec.nu.value() * std::log(std::abs(x))));
}

}  // namespace gastba::riemann
