#include <cmath>
#include <numbers>

#include "gastba/errors.hpp"
#include "gastba/riemann.hpp"

namespace gastba::riemann {

double check_duality(const ComplexOrder& nu) {
  const cplx a = specfun::xi_function(nu);
  const cplx b = specfun::xi_function(ComplexOrder(1.0 - nu.value()));
  return std::abs(a - b) / (1.0 + std::abs(a));
}

CasimirCheck casimir_channel_check(int d) {
  if (d < 1) throw DomainError("dimension must be at least 1");
  constexpr double kPi = std::numbers::pi;
  const double dd = d;
  auto G = [](double x) { return specfun::gamma(ComplexOrder(x)).real(); };
  auto Z = [](double x) { return specfun::zeta(ComplexOrder(x)).value.real(); };

  CasimirCheck c;
  c.free_energy = -G(dd + 1.0) * Z(dd + 1.0) / (std::pow(2.0, dd - 1.0) * std::pow(kPi, dd / 2.0) * G(dd / 2.0) * dd);
  double product;
  if (d % 2 == 1) {
    product = G(-dd / 2.0) * Z(-dd);
    c.route = "direct";
  } else {
    // Gamma(-d/2) has a pole where zeta(-d) has a trivial zero; the product is
    // smooth in the shift, so average +-eps and extrapolate in eps^2.
    const double eps = 1e-6;
    auto P = [&](double e) { return G(-(dd + e) / 2.0) * Z(-(dd + e)); };
    const double s1 = 0.5 * (P(eps) + P(-eps));
    const double s2 = 0.5 * (P(2.0 * eps) + P(-2.0 * eps));
    product = (4.0 * s1 - s2) / 3.0;
    c.route = "limit";
  }
  c.ground_energy = -std::pow(kPi, dd / 2.0) * product;
  c.residual = std::abs(c.free_energy - c.ground_energy) / std::abs(c.free_energy);
  return c;
}

}  // namespace gastba::riemann
