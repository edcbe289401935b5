#include <cmath>
#include <numbers>

#include "gastba/errors.hpp"
#include "gastba/specfun.hpp"
#include "detail.hpp"

namespace gastba::specfun {
namespace {

constexpr double kPi = std::numbers::pi;

// Lanczos coefficients for g = 7, n = 9.
constexpr double kLanczosG = 7.0;
constexpr double kLanczos[9] = {
    0.99999999999980993227684700473478, 676.520368121885098567009190444019,
    -1259.13921672240287047156078755283, 771.3234287776530788486528258894,
    -176.61502916214059906584551354,     12.507343278686904814458936853,
    -0.13857109526572011689554707,       9.984369578019570859563e-6,
    1.50563273514931155834e-7};

bool is_nonpositive_integer(cplx z) {
  return z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::round(z.real());
}

// log Gamma(z) for Re z >= 1/2.
cplx log_gamma_lanczos(cplx z) {
  z -= 1.0;
  cplx x = kLanczos[0];
  for (int i = 1; i < 9; ++i) x += kLanczos[i] / (z + static_cast<double>(i));
  const cplx t = z + kLanczosG + 0.5;
  return 0.5 * std::log(2.0 * kPi) + (z + 0.5) * std::log(t) - t + std::log(x);
}

}  // namespace

cplx detail::sin_pi(cplx z) {
  // Reduce the real part exactly so that sin stays relatively accurate
  // next to the integers.
  const double a = z.real() - 2.0 * std::round(z.real() / 2.0);
  cplx w(a, z.imag());
  if (a > 0.5) return std::sin(kPi * (1.0 - w));
  if (a < -0.5) return -std::sin(kPi * (1.0 + w));
  return std::sin(kPi * w);
}

cplx detail::log_sin_pi(cplx z) {
  if (std::abs(z.imag()) < 30.0) return std::log(detail::sin_pi(z));
  if (z.imag() > 0.0) {
    // sin(pi z) = (i/2) e^{-i pi z} (1 - e^{2 i pi z})
    const cplx i(0.0, 1.0);
    return std::log(i / 2.0) - i * kPi * z + std::log(1.0 - std::exp(2.0 * i * kPi * z));
  }
  return std::conj(log_sin_pi(std::conj(z)));
}

ComplexOrder::ComplexOrder(double sigma, double t) : sigma_(sigma), t_(t) {
  if (!std::isfinite(sigma) || !std::isfinite(t))
    throw DomainError("complex order must have finite components");
}

cplx log_gamma(cplx z) {
  if (is_nonpositive_integer(z)) throw PoleError("Gamma has a pole at a non-positive integer");
  if (z.real() >= 0.5) return log_gamma_lanczos(z);
  return std::log(kPi) - detail::log_sin_pi(z) - log_gamma_lanczos(1.0 - z);
}

cplx gamma(const ComplexOrder& nu) {
  const cplx z = nu.value();
  if (is_nonpositive_integer(z)) throw PoleError("Gamma has a pole at a non-positive integer");
  if (z.real() >= 0.5) {
    // Direct product form keeps full relative accuracy for moderate |z|.
    if (std::abs(z) < 140.0) {
      const cplx zm = z - 1.0;
      cplx x = kLanczos[0];
      for (int i = 1; i < 9; ++i) x += kLanczos[i] / (zm + static_cast<double>(i));
      const cplx t = zm + kLanczosG + 0.5;
      return std::sqrt(2.0 * kPi) * std::pow(t, zm + 0.5) * std::exp(-t) * x;
    }
    return std::exp(log_gamma_lanczos(z));
  }
  if (std::abs(z.imag()) < 30.0 && std::abs(z) < 140.0)
    return kPi / (detail::sin_pi(z) * gamma(ComplexOrder(1.0 - z)));
  return std::exp(log_gamma(z));
}

}  // namespace gastba::specfun
