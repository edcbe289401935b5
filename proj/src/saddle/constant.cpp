#include <cmath>
#include <cstdio>
#include <limits>

#include "gastba/errors.hpp"
#include "gastba/numeric/roots.hpp"
#include "gastba/saddle.hpp"
#include "gastba/specfun.hpp"

namespace gastba::saddle {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Li_s(e^lx) for lx <= 0; +inf at lx = 0 when the sum diverges.
double bose_li(double s, double lx) {
  if (lx == 0.0) return s > 1.0 ? specfun::zeta(s).value.real() : kInf;
  return specfun::polylog(s, std::exp(lx)).value.real();
}

// -Li_s(-e^lx) > 0 for any lx.
double fermi_li(double s, double lx) { return -specfun::polylog_neg_exp(s, lx).value.real(); }

SaddleSolution finish(double delta, double residual, int iterations, std::string note,
                      std::vector<double> roots, double tol) {
  if (!(residual <= tol * std::max(1.0, std::abs(delta))))
  {
    char buf[96];
    std::snprintf(buf, sizeof buf, "saddle residual %.3g above tolerance", residual);
    throw ConvergenceError(buf);
  }
  SaddleSolution sol;
  sol.delta = delta;
  sol.z_delta = std::exp(-delta);
  sol.residual = residual;
  sol.iterations = iterations;
  sol.branch_note = std::move(note);
  sol.roots = std::move(roots);
  return sol;
}

SaddleSolution solve_boson(double d, double z_mu, double h, const SolverConfig& cfg) {
  const double s = d / 2.0;
  const double delta_b = std::log(z_mu);  // z_mu e^-delta = 1 here
  auto g = [&](double delta) {
    const double lx = std::min(0.0, delta_b - delta);
    return delta - h * bose_li(s, lx);
  };
  // A point just right of the boundary, pushed closer until pred holds.
  auto near_boundary = [&](auto pred) {
    for (int k = 1; k < 1100; ++k) {
      const double delta = delta_b + std::ldexp(1.0, -k) * std::max(1.0, std::abs(delta_b));
      if (!(delta > delta_b)) break;
      if (pred(delta)) return delta;
    }
    throw NoSolutionError("constant saddle equation: no admissible root next to z_mu z_delta = 1");
  };

  if (h > 0.0) {
    double lo;
    if (s > 1.0) {
      const double gb = g(delta_b);
      if (gb > 0.0)
        throw NoSolutionError("fugacity beyond the condensation point: z_mu z_delta < 1 has no root");
      if (gb == 0.0) return finish(delta_b, 0.0, 0, "condensation boundary", {delta_b}, cfg.tol);
      lo = delta_b;
    } else {
      lo = near_boundary([&](double x) { return g(x) < 0.0; });
    }
    const double d0 = std::max(delta_b, 0.0) + 1.0;
    const double hi = d0 + h * bose_li(s, delta_b - d0) + 1.0;
    const auto r = numeric::bisect(g, lo, hi);
    return finish(r.root, r.residual, r.iterations, "repulsive: unique root", {r.root}, cfg.tol);
  }

  // Attractive: g is convex on (delta_b, inf), so there are zero or two roots;
  // the larger one continues the free branch.
  const double a = -h;
  auto dg = [&](double delta) {
    const double lx = std::min(0.0, delta_b - delta);
    return 1.0 - a * bose_li(s - 1.0, lx);
  };
  double hi = std::max(delta_b, 0.0) + 1.0;
  while (dg(hi) <= 0.0) hi = delta_b + 2.0 * (hi - delta_b);
  double argmin;
  if (s - 1.0 > 1.0 && dg(delta_b) >= 0.0) {
    argmin = delta_b;
  } else {
    const double lo = (s - 1.0 > 1.0) ? delta_b : near_boundary([&](double x) { return dg(x) < 0.0; });
    argmin = numeric::bisect(dg, lo, hi).root;
  }
  const double gmin = g(argmin);
  if (gmin > 0.0)
    throw NoSolutionError("attractive bosons: the fixed-point curve detaches, no real root");
  const auto upper = numeric::bisect(g, argmin, hi);
  std::vector<double> roots{upper.root};
  if (argmin > delta_b) {
    const bool lower_exists = (s > 1.0) ? g(delta_b) >= 0.0 : true;
    if (lower_exists) {
      const double lo = (s > 1.0) ? delta_b : near_boundary([&](double x) { return g(x) > 0.0; });
      roots.push_back(numeric::bisect(g, lo, argmin).root);
    }
  }
  if (roots.size() == 2 && std::abs(roots[0] - roots[1]) <= cfg.tol * std::max(1.0, std::abs(roots[0])))
    throw BranchAmbiguityError("attractive bosons: the two roots merge, the free branch is ambiguous");
  return finish(upper.root, upper.residual, upper.iterations, "attractive: root on the free branch",
                roots, cfg.tol);
}

SaddleSolution solve_fermion(double d, double z_mu, double h, const SolverConfig& cfg) {
  const double s = d / 2.0;
  const double lzm = std::log(z_mu);
  auto g = [&](double delta) { return delta - h * fermi_li(s, lzm - delta); };
  const double f0 = fermi_li(s, lzm);
  if (h >= 0.0) {
    const auto r = numeric::bisect(g, 0.0, h * f0);
    return finish(r.root, r.residual, r.iterations, "repulsive: unique root", {r.root}, cfg.tol);
  }
  // Attractive: walk down from delta = 0 (where g > 0) to the first sign change.
  const double scale = 0.1 * std::max(1.0, -h * f0);
  double prev = 0.0;
  for (int k = 1; k < 400; ++k) {
    const double delta = -scale * (std::pow(1.1, k) - 1.0);
    if (delta < -1e9) break;
    if (g(delta) <= 0.0) {
      const auto r = numeric::bisect(g, delta, prev);
      return finish(r.root, r.residual, r.iterations, "attractive: first root below zero", {r.root}, cfg.tol);
    }
    prev = delta;
  }
  if (d == 2.0) throw DivergentSolution("attractive 2d fermions: z_delta grows without bound", 1.0);
  throw NoSolutionError("attractive fermions: no finite root of the constant saddle equation");
}

}  // namespace

void SpeciesSpec::validate() const {
  if (!(mass > 0.0) || !std::isfinite(mass)) throw DomainError("species mass must be positive");
  if (!(z_mu > 0.0) || !std::isfinite(z_mu)) throw DomainError("species fugacity must be positive");
  if (statistics != 1 && statistics != -1) throw DomainError("statistics must be +1 or -1");
}

const char* to_string(CouplingMode mode) {
  switch (mode) {
    case CouplingMode::gamma: return "gamma";
    case CouplingMode::scattering_length: return "a";
    case CouplingMode::h_T: return "h_T";
    case CouplingMode::h_2d: return "h";
  }
  return "?";
}

CouplingMode coupling_mode_from_string(const std::string& name) {
  if (name == "gamma") return CouplingMode::gamma;
  if (name == "a" || name == "scattering_length") return CouplingMode::scattering_length;
  if (name == "h_T") return CouplingMode::h_T;
  if (name == "h" || name == "h_2d") return CouplingMode::h_2d;
  throw DomainError("unknown coupling mode '" + name + "'");
}

SolverConfig SolverConfig::quadrature() {
  SolverConfig c;
  c.tol = 1e-10;
  c.max_iter = 5000;
  return c;
}

void SolverConfig::validate() const {
  if (!(tol > 0.0)) throw DomainError("tol must be positive");
  if (!(damping > 0.0 && damping <= 1.0)) throw DomainError("damping must lie in (0, 1]");
  if (grid_points < 16) throw DomainError("grid_points must be at least 16");
  if (max_iter < 1) throw DomainError("max_iter must be positive");
  if (!(delta_max > delta_min) || delta_samples < 2) throw DomainError("delta scan range is empty");
  if (!(k_max_sigmas > 0.0)) throw DomainError("k_max_sigmas must be positive");
}

SaddleSolution solve_delta_constant_h(double d, const SpeciesSpec& species, double h_T,
                                      const SolverConfig& cfg) {
  species.validate();
  cfg.validate();
  if (!(d > 0.0) || !std::isfinite(d)) throw DomainError("dimension must be positive");
  if (!std::isfinite(h_T)) throw DomainError("coupling must be finite");
  if (h_T == 0.0) return finish(0.0, 0.0, 0, "free theory", {0.0}, cfg.tol);
  return species.statistics == 1 ? solve_boson(d, species.z_mu, h_T, cfg)
                                 : solve_fermion(d, species.z_mu, h_T, cfg);
}

SaddleSolution solve_delta_constant(double d, const SpeciesSpec& species, const CouplingSpec& coupling,
                                    double T, const SolverConfig& cfg) {
  if (coupling.d != d) throw DomainError("coupling was specified for a different dimension");
  return solve_delta_constant_h(d, species, thermal_coupling(coupling, species.mass, T), cfg);
}

}  // namespace gastba::saddle
