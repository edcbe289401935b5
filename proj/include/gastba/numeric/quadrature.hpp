#pragma once

#include <complex>
#include <functional>
#include <vector>

namespace gastba::numeric {

using cplx = std::complex<double>;

struct QuadratureResult {
  cplx value;
  double abs_error = 0.0;
  double l1 = 0.0;  ///< Kronrod estimate of the integral of |f|
  int evaluations = 0;
  bool converged = false;
};

struct QuadratureOptions {
  double abs_tol = 1e-15;
  double rel_tol = 1e-13;
  int max_subdivisions = 4000;
};

/// Globally adaptive 7/15-point Gauss-Kronrod on a finite interval [a, b].
/// Bisects the interval with the largest error until the summed error
/// estimate satisfies max(abs_tol, rel_tol*|I|) or the subdivision cap hits.
QuadratureResult integrate(const std::function<cplx(double)>& f, double a, double b,
                           const QuadratureOptions& opts = {});

/// Same as `integrate` but over a sequence of breakpoints a = x0 < x1 < ... < xn,
/// each sub-interval seeded separately (useful for sharp features).
QuadratureResult integrate(const std::function<cplx(double)>& f,
                           const std::vector<double>& breakpoints,
                           const QuadratureOptions& opts = {});

/// Nodes and weights of the n-point Gauss-Legendre rule on [-1, 1], ascending.
struct GaussLegendreRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};
GaussLegendreRule gauss_legendre(int n);

}  // namespace gastba::numeric
