#pragma once

#include <functional>
#include <optional>
#include <vector>

namespace gastba::numeric {

struct RootResult {
  double root = 0.0;
  double residual = 0.0;  ///< |f(root)|
  int iterations = 0;
};

/// Bisection on a sign-change bracket, run until the bracket collapses to
/// adjacent doubles or |f| <= ftol. Requires f(lo) and f(hi) of opposite sign
/// (a zero at either end is returned immediately).
RootResult bisect(const std::function<double(double)>& f, double lo, double hi,
                  double ftol = 0.0, int max_iter = 2000);

/// Locates every sign change of f on the ordered sample points and refines each
/// by bisection. Exact zeros at sample points are reported once.
std::vector<RootResult> bracket_roots(const std::function<double(double)>& f,
                                      const std::vector<double>& samples, double ftol = 0.0);

}  // namespace gastba::numeric
