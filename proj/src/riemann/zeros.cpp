#include <algorithm>
#include <cmath>

#include "gastba/errors.hpp"
#include "gastba/numeric/parallel.hpp"
#include "gastba/riemann.hpp"
#include "gastba/saddle.hpp"

namespace gastba::riemann {
namespace {

cplx zeta_on_line(double sigma, double t) { return specfun::zeta(ComplexOrder(sigma, t)).value; }

// Newton for zeta(sigma + i t) = 0 with t the only unknown: the complex step
// -zeta/zeta' is projected onto the line, with a central-difference derivative.
ZeroCandidate refine(double sigma, double t0, const ZeroScanConfig& cfg) {
  double t = t0;
  cplx z = zeta_on_line(sigma, t);
  double last_step = 1.0;
  int it = 0;
  for (; it < cfg.max_newton; ++it) {
    const double h = 1e-5;
    const cplx dz = (zeta_on_line(sigma, t + h) - zeta_on_line(sigma, t - h)) / (2.0 * h);
    if (std::abs(dz) == 0.0) break;
    double step = -std::real(z / dz);
    // damp until |zeta| does not grow
    cplx zn = zeta_on_line(sigma, t + step);
    for (int k = 0; k < 30 && std::abs(zn) > std::abs(z); ++k) {
      step *= 0.5;
      zn = zeta_on_line(sigma, t + step);
    }
    if (std::abs(zn) > std::abs(z)) break;
    t += step;
    z = zn;
    last_step = std::abs(step);
    if (last_step < 1e-13 * std::max(1.0, std::abs(t)) || std::abs(z) == 0.0) break;
  }
  ZeroCandidate c;
  c.nu = ComplexOrder(sigma, t);
  c.abs_g = std::abs(specfun::eta(c.nu).value);
  c.newton_residual = std::abs(z);
  c.abs_zeta_check = std::abs(specfun::zeta_euler_maclaurin(c.nu).value);
  c.newton_iterations = it;
  c.refined = c.newton_residual < cfg.zeta_tol && last_step < 1e-8 && c.abs_zeta_check < cfg.zeta_tol;
  return c;
}

}  // namespace

std::vector<ZeroCandidate> find_zeros(double sigma, double t_min, double t_max, const ZeroScanConfig& cfg) {
  if (!(sigma > 0.0 && sigma < 1.0)) throw DomainError("scan line must lie inside 0 < sigma < 1");
  if (!(t_max > t_min) || !(t_min >= 0.0)) throw DomainError("scan needs t_max > t_min >= 0");
  if (!(cfg.step > 0.0) || !(cfg.threshold > 0.0)) throw DomainError("scan step and threshold must be positive");

  const auto n = static_cast<std::size_t>(std::floor((t_max - t_min) / cfg.step + 1e-9)) + 1;
  std::vector<double> t(n), g(n);
  for (std::size_t i = 0; i < n; ++i) t[i] = t_min + cfg.step * static_cast<double>(i);
  numeric::parallel_for(n, [&](std::size_t i) { g[i] = std::abs(specfun::eta(ComplexOrder(sigma, t[i])).value); });

  std::vector<std::size_t> minima;
  for (std::size_t i = 1; i + 1 < n; ++i)
    if (g[i] < cfg.threshold && g[i] < g[i - 1] && g[i] <= g[i + 1]) minima.push_back(i);

  std::vector<ZeroCandidate> found(minima.size());
  numeric::parallel_for(minima.size(), [&](std::size_t j) { found[j] = refine(sigma, t[minima[j]], cfg); });

  std::vector<ZeroCandidate> out;
  for (const auto& c : found) {
    if (c.refined && (c.nu.t() < t_min - cfg.step || c.nu.t() > t_max + cfg.step)) continue;
    const bool dup = std::any_of(out.begin(), out.end(), [&](const ZeroCandidate& o) {
      return o.refined && c.refined && std::abs(o.nu.t() - c.nu.t()) < 1e-6;
    });
    if (!dup) out.push_back(c);
  }
  std::sort(out.begin(), out.end(), [](const ZeroCandidate& a, const ZeroCandidate& b) { return a.nu.t() < b.nu.t(); });
  return out;
}

double verify_zero_delta(const ZeroCandidate& candidate, const std::vector<double>& temperatures) {
  const QuasiKernelSpec spec = make_kernel_spec(candidate.nu);
  double worst = 0.0;
  for (double T : temperatures) {
    if (!(T > 0.0)) throw DomainError("temperatures must be positive");
    worst = std::max(worst, std::abs(saddle::quasi_rhs(spec, T, 0.0)));
  }
  return worst;
}

}  // namespace gastba::riemann
