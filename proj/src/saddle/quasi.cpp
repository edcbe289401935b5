#include <algorithm>
#include <cmath>

#include "gastba/errors.hpp"
#include "gastba/numeric/parallel.hpp"
#include "gastba/numeric/roots.hpp"
#include "gastba/saddle.hpp"

namespace gastba::saddle {

namespace {

// The complex product whose real part is the right side. Its modulus sets the
// rounding floor of the residual: for complex orders it can exceed the real
// part by many orders of magnitude.
specfun::cplx quasi_product(const riemann::QuasiKernelSpec& kernel, double T, double delta) {
  const specfun::cplx s = kernel.nu.value();
  const specfun::cplx li = specfun::polylog_neg_exp(kernel.nu, -delta).value;
  return std::exp((s - 1.0) * std::log(T)) * kernel.h_nu * li;
}

}  // namespace

double quasi_rhs(const riemann::QuasiKernelSpec& kernel, double T, double delta) {
  return -std::real(quasi_product(kernel, T, delta));
}

SaddleSolution solve_delta_quasi(const ComplexOrder& nu, double T, const SolverConfig& cfg) {
  cfg.validate();
  if (!(T > 0.0)) throw DomainError("temperature must be positive");
  if (!(nu.sigma() > 0.0)) throw DomainError("quasi-periodic delta equation needs Re(nu) > 0");
  const riemann::QuasiKernelSpec kernel = riemann::make_kernel_spec(nu);
  auto g = [&](double delta) { return delta - quasi_rhs(kernel, T, delta); };

  const int n = cfg.delta_samples;
  std::vector<double> grid(n), values(n);
  for (int i = 0; i < n; ++i)
    grid[i] = cfg.delta_min + (cfg.delta_max - cfg.delta_min) * i / (n - 1.0);
  numeric::parallel_for(n, [&](std::size_t i) { values[i] = g(grid[i]); });

  std::vector<double> roots;
  int evaluations = n;
  const bool zero_in_range = cfg.delta_min <= 0.0 && cfg.delta_max >= 0.0;
  if (zero_in_range && std::abs(g(0.0)) <= cfg.tol) roots.push_back(0.0);
  for (int i = 0; i + 1 < n; ++i) {
    if (values[i] == 0.0) {
      roots.push_back(grid[i]);
      continue;
    }
    if (!std::isfinite(values[i]) || !std::isfinite(values[i + 1])) continue;
    if ((values[i] < 0.0) == (values[i + 1] < 0.0) || values[i + 1] == 0.0) continue;
    const auto r = numeric::bisect(g, grid[i], grid[i + 1]);
    evaluations += r.iterations;
    const double scale = std::max({1.0, std::abs(r.root), std::abs(quasi_product(kernel, T, r.root))});
    if (!(r.residual <= cfg.tol * scale))
      throw ConvergenceError("quasi-periodic delta bisection did not meet tolerance");
    roots.push_back(r.root);
  }
  if (!values.empty() && values.back() == 0.0) roots.push_back(grid.back());
  if (roots.empty())
    throw EmptyBracketError("no root of the quasi-periodic delta equation on [" +
                            std::to_string(cfg.delta_min) + ", " + std::to_string(cfg.delta_max) + "]");

  std::sort(roots.begin(), roots.end(), [](double a, double b) { return std::abs(a) < std::abs(b); });
  std::vector<double> unique;
  for (double r : roots)
    if (std::none_of(unique.begin(), unique.end(), [&](double u) { return std::abs(u - r) <= 1e-9 * std::max(1.0, std::abs(r)); }))
      unique.push_back(r);

  SaddleSolution sol;
  sol.delta = unique.front();
  sol.z_delta = std::exp(-sol.delta);
  sol.residual = std::abs(g(sol.delta));
  sol.iterations = evaluations;
  sol.branch_note = unique.size() == 1 ? "single root on the scan range"
                                       : std::to_string(unique.size()) + " roots, smallest |delta| reported";
  sol.roots = unique;
  return sol;
}

}  // namespace gastba::saddle
