#include <cmath>
#include <numbers>

#include "gastba/errors.hpp"
#include "gastba/thermo.hpp"

namespace gastba {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void check_common(double d, double mass, double T) {
  if (!(d > 0.0) || !std::isfinite(d)) throw DomainError("dimension must be positive");
  if (!(mass > 0.0)) throw DomainError("mass must be positive");
  if (!(T > 0.0)) throw DomainError("temperature must be positive");
}

// a^(d-2) = m gamma / (2 pi)^(d/2), the temperature-free coupling (d != 2).
double power_coupling(const saddle::CouplingSpec& c, double mass, double T) {
  using saddle::CouplingMode;
  const double d = c.d;
  switch (c.mode) {
    case CouplingMode::gamma:
      return mass * c.value / std::pow(kTwoPi, d / 2.0);
    case CouplingMode::scattering_length:
      if (!(c.value > 0.0)) throw DomainError("scattering length must be positive");
      return std::pow(c.value, d - 2.0);
    case CouplingMode::h_T:
      return c.value / std::pow(mass * T, (d - 2.0) / 2.0);
    case CouplingMode::h_2d:
      throw DomainError("the dimensionless 2d coupling only exists at d = 2");
  }
  throw DomainError("unknown coupling mode");
}

}  // namespace

double saddle::thermal_coupling(const CouplingSpec& coupling, double mass, double T) {
  check_common(coupling.d, mass, T);
  if (!std::isfinite(coupling.value)) throw DomainError("coupling must be finite");
  if (coupling.mode == CouplingMode::h_T) return coupling.value;
  if (coupling.d == 2.0) {
    switch (coupling.mode) {
      case CouplingMode::h_2d: return coupling.value;
      case CouplingMode::gamma: return mass * coupling.value / kTwoPi;
      case CouplingMode::scattering_length:
        throw DomainError("a scattering length does not set the coupling in 2d; give h or gamma");
      default: break;
    }
  }
  return power_coupling(coupling, mass, T) * std::pow(mass * T, (coupling.d - 2.0) / 2.0);
}

namespace thermo {

CouplingSpec coupling_convert(const CouplingSpec& coupling, CouplingMode target, const ThermoState& state) {
  check_common(coupling.d, state.mass, state.T);
  const double d = coupling.d;
  CouplingSpec out{target, 0.0, d};
  if (target == coupling.mode) {
    out.value = coupling.value;
    if (target == CouplingMode::h_2d && d != 2.0)
      throw DomainError("the dimensionless 2d coupling only exists at d = 2");
    return out;
  }
  const double hT = saddle::thermal_coupling(coupling, state.mass, state.T);
  const double mT = state.mass * state.T;
  switch (target) {
    case CouplingMode::h_T:
      out.value = hT;
      break;
    case CouplingMode::h_2d:
      if (d != 2.0) throw DomainError("the dimensionless 2d coupling only exists at d = 2");
      out.value = hT;
      break;
    case CouplingMode::gamma:
      out.value = hT / std::pow(mT, (d - 2.0) / 2.0) * std::pow(kTwoPi, d / 2.0) / state.mass;
      break;
    case CouplingMode::scattering_length: {
      if (d == 2.0) throw DomainError("a scattering length does not set the coupling in 2d");
      const double A = hT / std::pow(mT, (d - 2.0) / 2.0);
      if (!(A > 0.0)) throw DomainError("a^(d-2) must be positive to take its root");
      out.value = std::pow(A, 1.0 / (d - 2.0));
      break;
    }
  }
  return out;
}

}  // namespace thermo
}  // namespace gastba
