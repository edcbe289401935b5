#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>

#include "detail.hpp"
#include "gastba/errors.hpp"
#include "gastba/specfun.hpp"

namespace gastba::specfun {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kEps = std::numeric_limits<double>::epsilon();
const double kLog3p8 = std::log(3.0 + std::sqrt(8.0));

// Number of weighted terms so that the CVZ truncation bound
// 2 Gamma(sigma) / |Gamma(nu)| / (3+sqrt 8)^n drops below ~1e-17.
int cvz_terms(const ComplexOrder& nu) {
  const double sigma = nu.sigma();
  const double log_tv = std::lgamma(sigma) - log_gamma(nu.value()).real();
  const double n = (std::log(2.0) + std::max(0.0, log_tv) + 39.2) / kLog3p8;
  return std::clamp(static_cast<int>(std::ceil(n)), 12, 40000);
}

// B_{2k} / (2k)! for k = 1..kBernoulliTerms, from (-1)^{k+1} 2 zeta(2k) / (2 pi)^{2k}.
constexpr int kBernoulliTerms = 22;
const std::array<double, kBernoulliTerms + 1>& bernoulli_ratios() {
  static const auto table = [] {
    std::array<double, kBernoulliTerms + 1> b{};
    const double pi2 = kPi * kPi;
    const double small[5] = {pi2 / 6.0, pi2 * pi2 / 90.0, pi2 * pi2 * pi2 / 945.0,
                             pi2 * pi2 * pi2 * pi2 / 9450.0,
                             pi2 * pi2 * pi2 * pi2 * pi2 / 93555.0};
    for (int k = 1; k <= kBernoulliTerms; ++k) {
      double z2k = 0.0;
      if (k <= 5) {
        z2k = small[k - 1];
      } else {
        for (int n = 300; n >= 1; --n) z2k += std::pow(static_cast<double>(n), -2.0 * k);
      }
      const double sign = (k % 2 == 1) ? 1.0 : -1.0;
      b[k] = sign * 2.0 * z2k / std::pow(2.0 * kPi, 2.0 * k);
    }
    return b;
  }();
  return table;
}

bool is_positive_integer_at_least_two(cplx z) {
  return z.imag() == 0.0 && z.real() >= 2.0 && z.real() == std::round(z.real());
}

}  // namespace

cplx eta_factor(cplx nu) {
  const cplx w = (1.0 - nu) * std::numbers::ln2;
  if (std::abs(w) < 1e-3) return -(w + w * w / 2.0 + w * w * w / 6.0 + w * w * w * w / 24.0);
  return 1.0 - std::exp(w);
}

EvalResult detail::alternating_sum(const ComplexOrder& nu, double y) {
  if (!(nu.sigma() > 0.0)) throw DomainError("accelerated alternating sum requires Re(nu) > 0");
  if (!(y > 0.0 && y <= 1.0)) throw DomainError("alternating sum requires 0 < y <= 1");
  const int n = cvz_terms(nu);

  // log a_i with a_i = (n+i-1)! 4^i / ((n-i)! (2i)!), a_0 = 1/n.
  std::vector<double> loga(n + 1);
  loga[0] = -std::log(static_cast<double>(n));
  for (int i = 1; i <= n; ++i) {
    const double ratio = 4.0 * (n + i - 1.0) * (n - i + 1.0) / ((2.0 * i) * (2.0 * i - 1.0));
    loga[i] = loga[i - 1] + std::log(ratio);
  }
  const double lmax = *std::max_element(loga.begin(), loga.end());
  std::vector<double> suffix(n + 2, 0.0);
  for (int i = n; i >= 0; --i) suffix[i] = suffix[i + 1] + std::exp(loga[i] - lmax);
  const double total = suffix[0];

  const cplx s = nu.value();
  cplx sum = 0.0;
  double magnitude = 0.0;
  const double logy = std::log(y);
  for (int k = 0; k < n; ++k) {
    const double weight = suffix[k + 1] / total;  // (d_n - d_k) / d_n
    const double kp1 = k + 1.0;
    const cplx term = weight * std::exp(kp1 * logy - s * std::log(kp1));
    sum += (k % 2 == 0) ? term : -term;
    magnitude += std::abs(term);
  }
  const double truncation =
      2.0 * std::exp(std::lgamma(nu.sigma()) - log_gamma(s).real() - n * kLog3p8);
  return {sum, truncation + 4.0 * kEps * magnitude, n, {}};
}

EvalResult eta(const ComplexOrder& nu) { return detail::alternating_sum(nu, 1.0); }

EvalResult zeta_euler_maclaurin(const ComplexOrder& nu) {
  const cplx s = nu.value();
  if (s == cplx(1.0, 0.0)) throw PoleError("zeta has a pole at nu = 1");
  if (nu.sigma() < -2.0 * kBernoulliTerms + 4.0)
    throw DomainError("Euler-Maclaurin route supports Re(nu) > -40");
  const auto& b = bernoulli_ratios();
  const int big_n = std::max(12, static_cast<int>(std::ceil(std::abs(s) / 2.0)) + 12);
  const double N = big_n;

  cplx sum = 0.0;
  for (int n = big_n - 1; n >= 1; --n) sum += std::exp(-s * std::log(static_cast<double>(n)));
  const cplx n_pow = std::exp(-s * std::log(N));  // N^{-s}
  sum += N * n_pow / (s - 1.0) + 0.5 * n_pow;

  // sum_k B_{2k}/(2k)! * s(s+1)...(s+2k-2) N^{-s-2k+1}
  cplx poch = s;             // s (s+1) ... (s+2k-2) for k = 1
  cplx npow = n_pow / N;     // N^{-s-1}
  cplx last = 0.0;
  for (int k = 1; k <= kBernoulliTerms - 1; ++k) {
    last = b[k] * poch * npow;
    sum += last;
    poch *= (s + (2.0 * k - 1.0)) * (s + 2.0 * k);
    npow /= N * N;
  }
  const cplx next = b[kBernoulliTerms] * poch * npow;
  return {sum, 2.0 * std::abs(next) + 8.0 * kEps * (std::abs(sum) + N), big_n + kBernoulliTerms, {}};
}

EvalResult zeta(const ComplexOrder& nu) {
  const cplx s = nu.value();
  if (s == cplx(1.0, 0.0)) throw PoleError("zeta has a pole at nu = 1");
  if (s == cplx(0.0, 0.0)) return {-0.5, 0.0, 0, {}};
  if (nu.sigma() > 0.0) {
    const cplx factor = eta_factor(s);
    if (std::abs(factor) < 1e-3 && std::abs(nu.t()) > 1.0) return zeta_euler_maclaurin(nu);
    EvalResult e = eta(nu);
    e.value /= factor;
    e.abs_error_estimate = e.abs_error_estimate / std::abs(factor) + 2.0 * kEps * std::abs(e.value);
    return e;
  }
  EvalResult r = zeta_reflected(nu);
  if (nu.t() == 0.0) {
    const double n2 = std::round(-nu.sigma() / 2.0);
    if (n2 >= 1.0 && std::abs(nu.sigma() + 2.0 * n2) < 1e-3)
      r.warnings.emplace_back("NearTrivialZero");
  }
  return r;
}

EvalResult zeta_reflected(const ComplexOrder& nu) {
  const cplx s = nu.value();
  if (s == cplx(1.0, 0.0)) throw PoleError("zeta has a pole at nu = 1");
  if (s == cplx(0.0, 0.0)) return {-0.5, 0.0, 0, {}};
  // Gamma(1-nu) has poles exactly where sin(pi nu/2) vanishes or zeta is regular;
  // the functional equation degenerates there, so fall back to the direct route.
  if (is_positive_integer_at_least_two(s)) return zeta(nu);

  const EvalResult dual = zeta(ComplexOrder(1.0 - s));
  cplx factor;
  if (std::abs(nu.t()) < 30.0 && std::abs(s) < 100.0) {
    factor = std::pow(2.0, s) * std::pow(kPi, s - 1.0) * detail::sin_pi(s / 2.0) *
             gamma(ComplexOrder(1.0 - s));
  } else {
    factor = std::exp(s * std::numbers::ln2 + (s - 1.0) * std::log(kPi) +
                      detail::log_sin_pi(s / 2.0) + log_gamma(1.0 - s));
  }
  const cplx value = factor * dual.value;
  const double err = std::abs(factor) * dual.abs_error_estimate + 16.0 * kEps * std::abs(value);
  return {value, err, dual.terms_or_nodes_used, dual.warnings};
}

cplx xi_function(const ComplexOrder& nu) {
  const cplx s = nu.value();
  if (s == cplx(0.0, 0.0) || s == cplx(1.0, 0.0)) throw PoleError("xi has poles at nu = 0 and nu = 1");
  // At the trivial zeros Gamma(nu/2) has a pole; use the symmetric point.
  if (nu.t() == 0.0 && nu.sigma() < 0.0 && std::fmod(-nu.sigma(), 2.0) == 0.0)
    return xi_function(ComplexOrder(1.0 - s));
  const cplx z = zeta(nu).value;
  if (std::abs(nu.t()) < 60.0) return std::pow(kPi, -s / 2.0) * gamma(ComplexOrder(s / 2.0)) * z;
  return std::exp(-s / 2.0 * std::log(kPi) + log_gamma(s / 2.0)) * z;
}

}  // namespace gastba::specfun
