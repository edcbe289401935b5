#include <cmath>
#include <string>

#include "gastba/errors.hpp"
#include "gastba/numeric/roots.hpp"
#include "gastba/saddle.hpp"

namespace gastba::saddle {
namespace {

SaddleSolution from_z(double z, double residual, int iterations, std::string note) {
  SaddleSolution s;
  s.z_delta = z;
  s.delta = -std::log(z);
  s.residual = residual;
  s.iterations = iterations;
  s.branch_note = std::move(note);
  s.roots = {s.delta};
  return s;
}

void check_fugacity(double z_mu) {
  if (!(z_mu > 0.0) || !std::isfinite(z_mu)) throw DomainError("fugacity must be positive");
}

}  // namespace

SaddleSolution solve_2d_boson(double h, double z_mu, const SolverConfig& cfg) {
  check_fugacity(z_mu);
  if (!std::isfinite(h)) throw DomainError("coupling must be finite");
  if (h == 0.0) return from_z(1.0, 0.0, 0, "free theory");
  // phi(z) = log z - h log(1 - z_mu z) on 0 < z < 1/z_mu.
  auto phi = [&](double z) { return std::log(z) - h * std::log1p(-z_mu * z); };
  auto residual = [&](double z) { return std::abs(z - std::pow(1.0 - z_mu * z, h)); };
  const double zmax = 1.0 / z_mu;
  const double tiny = 1e-300;
  if (h > 0.0) {
    // phi runs from -inf to +inf monotonically; the root is below min(1, 1/z_mu).
    const double hi = std::min(1.0, std::nextafter(zmax, 0.0));
    const auto r = numeric::bisect(phi, tiny, hi);
    const double res = residual(r.root);
    if (!(res <= cfg.tol)) throw ConvergenceError("2d boson bisection did not meet tolerance");
    return from_z(r.root, res, r.iterations, "repulsive: unique root in (0, 1)");
  }
  // h < 0: phi is concave with phi -> -inf at both ends; the smaller root
  // continues the free branch z = 1.
  const double a = -h;
  const double zstar = 1.0 / (z_mu * (1.0 + a));  // phi'(z*) = 0
  if (phi(zstar) < 0.0)
    throw NoSolutionError("attractive 2d bosons: z = (1 - z_mu z)^h has no root with z_mu z < 1");
  const auto r = numeric::bisect(phi, tiny, zstar);
  const double res = residual(r.root);
  if (!(res <= cfg.tol * std::max(1.0, r.root)))
    throw ConvergenceError("2d boson bisection did not meet tolerance");
  return from_z(r.root, res, r.iterations, "attractive: root on the free branch");
}

SaddleSolution solve_2d_fermion(double h, double z_mu, const SolverConfig& cfg) {
  check_fugacity(z_mu);
  if (!std::isfinite(h)) throw DomainError("coupling must be finite");
  if (h == 0.0) return from_z(1.0, 0.0, 0, "free theory");
  // phi(z) = log z + h log(1 + z_mu z).
  auto phi = [&](double z) { return std::log(z) + h * std::log1p(z_mu * z); };
  auto residual = [&](double z) { return std::abs(z - std::pow(1.0 + z_mu * z, -h)); };
  auto accept = [&](const numeric::RootResult& r, const char* note) {
    const double res = residual(r.root);
    if (!(res <= cfg.tol * std::max(1.0, r.root)))
      throw ConvergenceError("2d fermion bisection did not meet tolerance");
    return from_z(r.root, res, r.iterations, note);
  };
  if (h > 0.0) return accept(numeric::bisect(phi, 1e-300, 1.0), "repulsive: unique root in (0, 1)");

  const double a = -h;
  if (a < 1.0) {
    // phi increases to +inf; bracket upward from z = 1.
    double hi = 2.0;
    while (phi(hi) < 0.0) {
      hi *= 2.0;
      if (!std::isfinite(hi)) throw ConvergenceError("2d fermion: failed to bracket the root");
    }
    return accept(numeric::bisect(phi, 1.0, hi), "attractive: finite root above 1");
  }
  if (a == 1.0) {
    // phi increases to log(1/z_mu).
    if (z_mu >= 1.0) throw DivergentSolution("2d fermions at h = -1: z grows without bound (c -> 1)", 1.0);
    return from_z(1.0 / (1.0 - z_mu), 0.0, 0, "attractive: h = -1 closed form");
  }
  // a > 1: phi is maximal at z* = 1 / ((a - 1) z_mu).
  const double zstar = 1.0 / ((a - 1.0) * z_mu);
  if (phi(zstar) < 0.0)
    throw DivergentSolution("2d fermions with h < -1: no finite root, z runs to infinity", 1.0);
  return accept(numeric::bisect(phi, 1e-300, zstar), "attractive: root on the free branch");
}

std::vector<SaddleSolution> solve_2d_multispecies(const std::vector<SpeciesSpec>& species,
                                                  const std::vector<double>& h,
                                                  const SolverConfig& cfg) {
  cfg.validate();
  const std::size_t n = species.size();
  if (n == 0) throw DomainError("at least one species is required");
  if (h.size() != n * n) throw DomainError("coupling matrix size does not match the species count");
  for (const auto& s : species) s.validate();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (std::abs(h[a * n + b] - h[b * n + a]) > 1e-12) throw DomainError("coupling matrix must be symmetric");

  std::vector<double> L(n), next(n);
  for (std::size_t a = 0; a < n; ++a)
    L[a] = std::log(species[a].statistics == 1 ? std::min(0.5, 0.5 / species[a].z_mu) : 0.5);

  auto rhs = [&](const std::vector<double>& logz, std::vector<double>& out) {
    std::vector<double> term(n);
    for (std::size_t b = 0; b < n; ++b) {
      const double sb = species[b].statistics;
      const double arg = 1.0 - sb * species[b].z_mu * std::exp(logz[b]);
      if (!(arg > 0.0))
        throw DomainError("boson '" + species[b].name + "' left the domain 1 - z_mu z > 0");
      term[b] = sb * std::log(arg);
    }
    for (std::size_t a = 0; a < n; ++a) {
      double s = 0.0;
      for (std::size_t b = 0; b < n; ++b) s += h[a * n + b] * term[b];
      out[a] = s;
    }
  };
  auto sup_residual = [&](const std::vector<double>& logz) {
    rhs(logz, next);
    double m = 0.0;
    for (std::size_t a = 0; a < n; ++a) m = std::max(m, std::abs(logz[a] - next[a]));
    return m;
  };

  double lambda = cfg.damping;
  double r = sup_residual(L);
  int it = 0;
  int stalled = 0;
  for (; it < cfg.max_iter; ++it) {
    // Polish below tol until rounding stops the improvement.
    if (r < cfg.tol && (r < 1e-3 * cfg.tol || stalled >= 5)) break;
    std::vector<double> trial(n);
    for (std::size_t a = 0; a < n; ++a) trial[a] = (1.0 - lambda) * L[a] + lambda * next[a];
    const double rt = sup_residual(trial);
    if (rt > r && lambda > 1e-6) {
      lambda *= 0.5;
      sup_residual(L);  // restore next for the current point
      ++stalled;
      continue;
    }
    stalled = (rt >= r) ? stalled + 1 : 0;
    L = trial;
    r = rt;
    if (r == 0.0) break;
  }
  if (!(r < cfg.tol)) throw ConvergenceError("multispecies fixed point did not converge");
  rhs(L, next);
  std::vector<SaddleSolution> out;
  for (std::size_t a = 0; a < n; ++a) {
    out.push_back(from_z(std::exp(L[a]), std::abs(L[a] - next[a]), it, "damped log-space fixed point"));
  }
  return out;
}

}  // namespace gastba::saddle
