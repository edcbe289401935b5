#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "gastba/errors.hpp"
#include "gastba/numeric/quadrature.hpp"
#include "gastba/saddle.hpp"

namespace gastba::saddle {
namespace {

constexpr int kPanelNodes = 16;

double fermi(double eps, double T) {
  const double x = eps / T;
  if (x > 0.0) {
    const double e = std::exp(-x);
    return e / (1.0 + e);
  }
  return 1.0 / (std::exp(x) + 1.0);
}

}  // namespace

double PseudoEnergyProfile::epsilon_at(double kq) const {
  kq = std::abs(kq);
  if (k.size() < 4) throw DomainError("profile has too few nodes to interpolate");
  if (kq <= k[0]) {
    // even in k: quadratic in k^2 through the first three nodes
    const double x0 = k[0] * k[0], x1 = k[1] * k[1], x2 = k[2] * k[2], x = kq * kq;
    const double l0 = (x - x1) * (x - x2) / ((x0 - x1) * (x0 - x2));
    const double l1 = (x - x0) * (x - x2) / ((x1 - x0) * (x1 - x2));
    const double l2 = (x - x0) * (x - x1) / ((x2 - x0) * (x2 - x1));
    return l0 * epsilon[0] + l1 * epsilon[1] + l2 * epsilon[2];
  }
  const auto it = std::lower_bound(k.begin(), k.end(), kq);
  std::size_t hi = static_cast<std::size_t>(it - k.begin());
  hi = std::clamp<std::size_t>(hi, 2, k.size() - 2);
  const std::size_t lo = hi - 2;
  double sum = 0.0;
  for (std::size_t i = lo; i < lo + 4; ++i) {
    double w = 1.0;
    for (std::size_t j = lo; j < lo + 4; ++j)
      if (j != i) w *= (kq - k[j]) / (k[i] - k[j]);
    sum += w * epsilon[i];
  }
  return sum;
}

PseudoEnergyProfile solve_profile_quasiperiodic(const ComplexOrder& nu, double T,
                                                const riemann::QuasiKernelSpec& kernel,
                                                const SolverConfig& cfg, double mass) {
  cfg.validate();
  if (!(T > 0.0)) throw DomainError("temperature must be positive");
  if (!(mass > 0.0)) throw DomainError("mass must be positive");
  if (!(nu.sigma() > 0.5)) throw DomainError("profile solver needs Re(nu) > 1/2 (kernel vanishing at k = 0)");

  const double k_max = cfg.k_max_sigmas * std::sqrt(2.0 * mass * T * std::log(1.0 / cfg.tol));
  const int panels = std::max(1, (cfg.grid_points + kPanelNodes) / (2 * kPanelNodes));
  const auto rule = numeric::gauss_legendre(kPanelNodes);
  const int n = panels * kPanelNodes;
  const double width = k_max / panels;

  PseudoEnergyProfile prof;
  prof.temperature = T;
  prof.k_max = k_max;
  prof.k.resize(n);
  prof.weights.resize(n);
  for (int p = 0; p < panels; ++p)
    for (int j = 0; j < kPanelNodes; ++j) {
      prof.k[p * kPanelNodes + j] = width * (p + 0.5 * (rule.nodes[j] + 1.0));
      prof.weights[p * kPanelNodes + j] = 0.5 * width * rule.weights[j];
    }
  std::ostringstream id;
  id.precision(10);
  id << "quasi-periodic nu=" << nu.sigma() << (nu.t() < 0 ? "-" : "+") << std::abs(nu.t()) << "i";
  prof.kernel_id = id.str();

  // Mirror the half line: eps_i = omega_i + sum_j W_ij f_j with both k_j and -k_j.
  const specfun::cplx gam = kernel.gamma_nu;
  const specfun::cplx p = 2.0 * nu.value() - 1.0;
  auto kt = [&](double x) { return std::real(gam * std::exp(p * std::log(x))); };
  std::vector<double> W(static_cast<std::size_t>(n) * n);
  const double inv2pi = 1.0 / (2.0 * std::numbers::pi);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const double w = prof.weights[j];
      double direct;
      if (i == j) {
        // cell average of |x|^p over [-w/2, w/2]
        direct = std::real(gam * std::exp(p * std::log(0.5 * w)) / (1.0 + p));
      } else {
        direct = kt(std::abs(prof.k[i] - prof.k[j]));
      }
      W[static_cast<std::size_t>(i) * n + j] = w * inv2pi * (direct + kt(prof.k[i] + prof.k[j]));
    }

  std::vector<double> omega(n), eps(n), next(n), f(n);
  for (int i = 0; i < n; ++i) omega[i] = prof.k[i] * prof.k[i] / (2.0 * mass);
  eps = omega;
  auto update = [&] {
    for (int j = 0; j < n; ++j) f[j] = fermi(eps[j], T);
    double worst = 0.0;
    for (int i = 0; i < n; ++i) {
      double s = omega[i];
      const double* row = &W[static_cast<std::size_t>(i) * n];
      for (int j = 0; j < n; ++j) s += row[j] * f[j];
      next[i] = s;
      worst = std::max(worst, std::abs(s - eps[i]));
    }
    return worst / T;
  };

  double lambda = cfg.damping;
  double r = update();
  double best = r;
  int since_best = 0;
  int it = 0;
  for (; it < cfg.max_iter && r >= cfg.tol; ++it) {
    const std::vector<double> prev = eps;
    for (int i = 0; i < n; ++i) eps[i] += lambda * (next[i] - eps[i]);
    const double rn = update();
    if (!std::isfinite(rn)) throw ConvergenceError("profile iteration produced non-finite energies");
    // the sup residual is not monotone along a convergent path, so only a
    // marked growth rejects the step
    if (rn > 2.0 * r && lambda > 1e-3) {
      eps = prev;
      lambda *= 0.5;
      r = update();
      continue;
    }
    if (rn < r) lambda = std::min(cfg.damping, 1.1 * lambda);
    r = rn;
    // a slowly decaying residual that never sets a new best is a damped cycle
    if (r < 0.9 * best) {
      best = r;
      since_best = 0;
    } else if (++since_best > 25 && lambda > 1e-3) {
      lambda *= 0.5;
      since_best = 0;
    }
  }
  prof.residual = r;
  prof.iterations = it;
  if (!(r < cfg.tol)) {
    std::ostringstream msg;
    msg << "profile fixed point stalled at residual " << r << " after " << it << " iterations";
    throw ConvergenceError(msg.str());
  }
  prof.epsilon = eps;
  prof.boundary_filling = fermi(eps.back(), T);
  if (prof.boundary_filling > cfg.tol) prof.warnings.emplace_back("TruncationWarning");
  return prof;
}

}  // namespace gastba::saddle
