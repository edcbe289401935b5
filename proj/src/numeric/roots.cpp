#include "gastba/numeric/roots.hpp"

#include <cmath>

namespace gastba::numeric {

RootResult bisect(const std::function<double(double)>& f, double lo, double hi, double ftol,
                  int max_iter) {
  double flo = f(lo);
  double fhi = f(hi);
  if (flo == 0.0) return {lo, 0.0, 0};
  if (fhi == 0.0) return {hi, 0.0, 0};
  RootResult best{std::abs(flo) < std::abs(fhi) ? lo : hi, std::min(std::abs(flo), std::abs(fhi)), 0};
  int it = 0;
  for (; it < max_iter; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (!(mid > std::min(lo, hi) && mid < std::max(lo, hi))) break;
    const double fm = f(mid);
    if (std::abs(fm) < best.residual) best = {mid, std::abs(fm), it + 1};
    if (fm == 0.0 || std::abs(fm) <= ftol) {
      best = {mid, std::abs(fm), it + 1};
      break;
    }
    if ((fm < 0.0) == (flo < 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  best.iterations = it;
  return best;
}

std::vector<RootResult> bracket_roots(const std::function<double(double)>& f,
                                      const std::vector<double>& samples, double ftol) {
  std::vector<RootResult> roots;
  if (samples.empty()) return roots;
  std::vector<double> values(samples.size());
  for (std::size_t i = 0; i < samples.size(); ++i) values[i] = f(samples[i]);
  for (std::size_t i = 0; i < samples.size(); ++i) {
    if (values[i] == 0.0) {
      roots.push_back({samples[i], 0.0, 0});
      continue;
    }
    if (i + 1 < samples.size() && values[i + 1] != 0.0 &&
        std::isfinite(values[i]) && std::isfinite(values[i + 1]) &&
        (values[i] < 0.0) != (values[i + 1] < 0.0)) {
      roots.push_back(bisect(f, samples[i], samples[i + 1], ftol));
    }
  }
  return roots;
}

}  // namespace gastba::numeric
