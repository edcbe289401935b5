#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "detail.hpp"
#include "gastba/errors.hpp"
#include "gastba/numeric/quadrature.hpp"
#include "gastba/specfun.hpp"

namespace gastba::specfun {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr int kHeadTerms = 60;
constexpr long kMaxSeriesTerms = 20000000;

cplx expm1c(cplx w) {
  if (std::abs(w) > 0.5) return std::exp(w) - 1.0;
  cplx term = w, sum = w;
  for (int k = 2; k < 30; ++k) {
    term *= w / static_cast<double>(k);
    sum += term;
    if (std::abs(term) < 1e-18 * std::abs(sum)) break;
  }
  return sum;
}

double distance_to_positive_integer(cplx s) {
  const double n = std::max(1.0, std::round(s.real()));
  return std::abs(s - n);
}

// Scaled Taylor coefficients q_j rho^j of c / (e^x + a) at x = 0, given
// e0 = 1 + a. Uses 1/E with E(x) = e0 + sum_{j>=1} x^j / j!; the scaling keeps
// the coefficients finite when e0 is tiny.
std::vector<double> reciprocal_exp_series(double c, double e0, double rho) {
  std::vector<double> pw(kHeadTerms + 1);
  pw[0] = 1.0;
  for (int j = 1; j <= kHeadTerms; ++j) pw[j] = pw[j - 1] * rho / j;
  std::vector<double> q(kHeadTerms + 1);
  q[0] = c / e0;
  for (int j = 1; j <= kHeadTerms; ++j) {
    double s = 0.0;
    for (int i = 1; i <= j; ++i) s += q[j - i] * pw[i];
    q[j] = -s / e0;
  }
  return q;
}

struct Contour {
  cplx value;        // Gamma(nu) times the polylog (up to sign)
  double abs_error;  // absolute, same scale as value
  double scale;      // magnitude of the pieces that were summed
  int nodes;
};

// int_0^inf x^(nu-1) g(x) dx along the ray arg x = theta: an analytic head on
// |x| <= rho from the scaled Taylor coefficients of g, then quadrature in
// u = log|x|.
Contour rotated_mellin(const ComplexOrder& nu, double theta, double rho,
                       const std::vector<double>& head_coeffs,
                       const std::function<cplx(cplx)>& g, double r_max,
                       std::vector<double> extra_breaks) {
  const cplx s = nu.value();
  const cplx log_rho(std::log(rho), theta);
  cplx head = 0.0;
  double head_mag = 0.0;
  const cplx lead = std::exp(s * log_rho);
  for (std::size_t j = 0; j < head_coeffs.size(); ++j) {
    const cplx sj = s + static_cast<double>(j);
    const cplx term = head_coeffs[j] * lead * std::polar(1.0, static_cast<double>(j) * theta) / sj;
    head += term;
    head_mag += std::abs(term);
  }

  const cplx rot(0.0, theta);
  auto integrand = [&](double u) -> cplx {
    const cplx lx = u + rot;
    return std::exp(s * lx) * g(std::exp(lx));
  };
  std::vector<double> breaks{std::log(rho)};
  std::sort(extra_breaks.begin(), extra_breaks.end());
  for (double b : extra_breaks)
    if (b > breaks.back() + 1e-3 && b < std::log(r_max) - 1e-3) breaks.push_back(b);
  breaks.push_back(std::log(r_max));
  numeric::QuadratureOptions opts;
  opts.abs_tol = 1e-300;
  opts.rel_tol = 1e-14;
  opts.max_subdivisions = 6000;
  const auto q = numeric::integrate(integrand, breaks, opts);

  Contour c;
  c.value = head + q.value;
  c.scale = head_mag + q.l1;
  c.abs_error = q.abs_error + 8.0 * kEps * head_mag;
  c.nodes = q.evaluations + static_cast<int>(head_coeffs.size());
  return c;
}

double default_rotation(double t) {
  if (t == 0.0) return 0.0;
  const double margin = std::max(0.05, 3.0 / std::abs(t));
  return std::copysign(std::max(0.0, kPi / 2.0 - margin), t);
}

// 2 eta(2k), with 2 eta(0) = 1.
double twice_eta_even(int k) {
  static const std::vector<double> table = [] {
    std::vector<double> t(201);
    t[0] = 1.0;
    for (int j = 1; j <= 200; ++j)
      t[j] = 2.0 * (1.0 - std::pow(2.0, 1.0 - 2.0 * j)) * zeta(ComplexOrder(2.0 * j)).value.real();
    return t;
  }();
  return table[k];
}

// -Li_nu(-e^w) for large w: sum_k 2 eta(2k) w^(nu-2k) / Gamma(nu+1-2k) plus the
// exponentially small reflected piece cos(pi nu) Li_nu(-e^-w).
EvalResult fermi_asymptotic(const ComplexOrder& nu, double w) {
  const cplx s = nu.value();
  const double lw = std::log(w);
  cplx sum = 0.0;
  double prev = std::numeric_limits<double>::infinity();
  double last = 0.0;
  int k = 0;
  for (; k < 200; ++k) {
    const double coeff = twice_eta_even(k);
    const cplx a = s + 1.0 - 2.0 * k;
    cplx term = 0.0;
    // 1/Gamma vanishes at non-positive integers: the series terminates.
    if (!(a.imag() == 0.0 && a.real() <= 0.0 && a.real() == std::round(a.real())))
      term = coeff * std::exp((s - 2.0 * k) * lw - log_gamma(a));
    const double mag = std::abs(term);
    if (k > 1 && mag > prev) break;  // asymptotic: stop at the smallest term
    sum += term;
    prev = mag;
    last = mag;
    if (k > 1 && mag <= kEps * 1e-2 * std::abs(sum)) break;
  }
  cplx reflected = 0.0;
  if (w < 700.0) reflected = -std::cos(kPi * s) * detail::alternating_sum(nu, std::exp(-w)).value;
  const cplx value = sum + reflected;
  return {-value, last + 4.0 * kEps * std::abs(value), k, {}};
}

bool asymptotic_applies(const ComplexOrder& nu, double w) {
  return w > 40.0 + 3.0 * std::abs(nu.t()) + 2.0 * std::max(0.0, nu.sigma());
}

// Li_nu(e^mu) = Gamma(1-nu) (-mu)^(nu-1) + sum_k zeta(nu-k) mu^k / k!, |mu| < 2 pi.
EvalResult log_expansion(const ComplexOrder& nu, double mu) {
  const cplx s = nu.value();
  const cplx lead = gamma(ComplexOrder(1.0 - s)) * std::exp((s - 1.0) * std::log(-mu));
  cplx sum = lead;
  double mag = std::abs(lead);
  double fact = 1.0;
  double mupow = 1.0;
  int small = 0;
  int k = 0;
  double last = 0.0;
  for (; k < 120; ++k) {
    if (k > 0) {
      fact *= k;
      mupow *= mu;
    }
    const cplx term = zeta(ComplexOrder(s - static_cast<double>(k))).value * (mupow / fact);
    sum += term;
    mag += std::abs(term);
    last = std::abs(term);
    if (last < 1e-18 * std::abs(sum)) {
      if (++small >= 3) break;
    } else {
      small = 0;
    }
  }
  return {sum, last + 16.0 * kEps * mag, k, {}};
}

EvalResult direct_series(const ComplexOrder& nu, double z) {
  const cplx s = nu.value();
  const double az = std::abs(z);
  const double grow = std::max(0.0, -nu.sigma());
  cplx sum = 0.0;
  double tail = 0.0;
  long n = 1;
  for (; n <= kMaxSeriesTerms; ++n) {
    const double lognn = std::log(static_cast<double>(n));
    const double mag = std::exp(n * std::log(az) - nu.sigma() * lognn);
    cplx term = std::exp(n * std::log(az) - s * lognn);
    if (z < 0.0 && (n % 2 == 1)) term = -term;
    sum += term;
    const double q = az * std::pow(1.0 + 1.0 / n, grow);
    if (q < 1.0) {
      tail = mag * q / (1.0 - q);
      if (tail <= 1e-17 * std::abs(sum) || tail < 1e-300) break;
    }
  }
  EvalResult r{sum, tail + 4.0 * kEps * std::abs(sum), static_cast<int>(std::min(n, 2000000000L)), {}};
  if (n > kMaxSeriesTerms) r.warnings.emplace_back("SeriesTermCap");
  return r;
}

}  // namespace

EvalResult polylog_series(const ComplexOrder& nu, double z) {
  if (!std::isfinite(z) || z >= 1.0 || z < -1.0)
    throw DomainError("polylog_series requires z in [-1, 1); use fermi_dirac_polylog for z < -1");
  if (z == 0.0) return {0.0, 0.0, 0, {}};
  const cplx s = nu.value();
  if (z < 0.0) {
    if (nu.sigma() > 0.0) {
      EvalResult r = detail::alternating_sum(nu, -z);
      r.value = -r.value;
      return r;
    }
    if (z == -1.0) throw DomainError("Li_nu(-1) series requires Re(nu) > 0");
    return direct_series(nu, z);
  }
  if (s == cplx(1.0, 0.0)) return {-std::log1p(-z), kEps * std::abs(std::log1p(-z)), 1, {}};
  if (z <= 0.5) return direct_series(nu, z);
  if (nu.sigma() > 1.0 && 1.0 - z < 1e-3) return bose_polylog_integral(nu, z);
  if (distance_to_positive_integer(s) < 1e-3) return bose_polylog_integral(nu, z);
  return log_expansion(nu, std::log(z));
}

EvalResult fermi_dirac_polylog(const ComplexOrder& nu, double y, double rel_tol) {
  if (!(nu.sigma() > 0.0)) throw DomainError("Fermi-Dirac integral requires Re(nu) > 0");
  if (!(y > 0.0) || !std::isfinite(y)) throw DomainError("Fermi-Dirac integral requires finite y > 0");
  const cplx s = nu.value();
  const double ly = std::log(y);
  double theta = default_rotation(nu.t());

  // Poles of 1/(e^x + y) sit at log y + i pi (2m+1); only those with
  // Re > 0 can fall inside the rotated sector. Keep the ray clear of them.
  auto pole = [&](int m) { return cplx(ly, std::copysign(kPi * (2 * m + 1), theta)); };
  auto too_close = [&](double th) {
    if (ly <= 0.0) return false;
    for (int m = 0;; ++m) {
      const cplx p = pole(m);
      const double arg = std::abs(std::arg(p));
      const double dist = std::abs(p) * std::sin(std::abs(arg - std::abs(th)));
      if (dist < 0.5) return true;
      if (arg > std::abs(th)) return false;  // later poles only move away
    }
  };
  while (theta != 0.0 && too_close(theta)) {
    theta -= std::copysign(0.01, theta);
    if (std::abs(theta) < 0.01) theta = 0.0;
  }

  cplx residues = 0.0;
  double residue_mag = 0.0;
  if (theta != 0.0 && ly > 0.0) {
    for (int m = 0;; ++m) {
      const cplx p = pole(m);
      if (std::abs(std::arg(p)) >= std::abs(theta)) break;
      const cplx r = std::exp((s - 1.0) * std::log(p));
      residues += r;
      residue_mag += std::abs(r);
    }
  }
  // int_real = int_ray -/+ 2 pi i sum x_m^(nu-1) for theta >/< 0.
  const cplx residue_term = -std::copysign(1.0, theta) * cplx(0.0, 2.0 * kPi) * residues;

  const double c = std::cos(theta);
  const double edge = std::max(ly, 0.0);
  const double r_max = (edge + 50.0 + std::max(0.0, nu.sigma()) * std::log(edge + 50.0)) / c;
  std::vector<double> breaks;
  if (edge / c > 1.0) breaks.push_back(std::log(edge / c));
  auto g = [y, ly](cplx x) -> cplx {
    if (x.real() > ly) {
      const cplx e = y * std::exp(-x);
      return e / (1.0 + e);
    }
    return 1.0 / (std::exp(x) / y + 1.0);
  };
  const Contour ct = rotated_mellin(nu, theta, 1.0, reciprocal_exp_series(y, 1.0 + y, 1.0), g, r_max, breaks);

  const cplx gam = gamma(nu);
  const double ag = std::abs(gam);
  const cplx value = -(ct.value + residue_term) / gam;
  const double scale = (ct.scale + 2.0 * kPi * residue_mag) / ag;
  const double err = ct.abs_error / ag + 8.0 * kEps * scale + 8.0 * kEps * std::abs(value);
  if (!(err <= rel_tol * std::abs(value) + 64.0 * kEps * scale) || !std::isfinite(std::abs(value)))
    throw ConvergenceError("Fermi-Dirac quadrature did not reach the requested tolerance");
  return {value, err, ct.nodes, {}};
}

EvalResult bose_polylog_integral(const ComplexOrder& nu, double z, double rel_tol) {
  if (!(nu.sigma() > 0.0)) throw DomainError("Bose integral requires Re(nu) > 0");
  if (!(z > 0.0 && z < 1.0)) throw DomainError("Bose integral requires 0 < z < 1");
  const double lz = std::log(z);
  // Poles of 1/(e^x - z) are at log z + 2 pi i m, all left of the imaginary
  // axis, so rotation collects nothing.
  const double theta = default_rotation(nu.t());
  const double rho = std::min(1.0, -lz / 2.0);
  const double c = std::cos(theta);
  const double r_max = (50.0 + std::max(0.0, nu.sigma()) * std::log(50.0)) / c;
  std::vector<double> breaks;
  if (-lz < 1.0 && -lz > rho) breaks.push_back(std::log(-lz));
  auto g = [z](cplx x) -> cplx {
    const cplx e = std::exp(-x);
    // z e^-x / (1 - z e^-x) with 1 - z e^-x = (1 - z) - z expm1(-x)
    return z * e / ((1.0 - z) - z * expm1c(-x));
  };
  // Taylor series of z / (e^x - z) = z / (E(x)) with E(0) = 1 - z.
  const Contour ct = rotated_mellin(nu, theta, rho, reciprocal_exp_series(z, 1.0 - z, rho), g, r_max, breaks);
  const cplx gam = gamma(nu);
  const double ag = std::abs(gam);
  const cplx value = ct.value / gam;
  const double scale = ct.scale / ag;
  const double err = ct.abs_error / ag + 8.0 * kEps * scale + 8.0 * kEps * std::abs(value);
  if (!(err <= rel_tol * std::abs(value) + 64.0 * kEps * scale) || !std::isfinite(std::abs(value)))
    throw ConvergenceError("Bose quadrature did not reach the requested tolerance");
  return {value, err, ct.nodes, {}};
}

EvalResult polylog_neg_exp(const ComplexOrder& nu, double w) {
  if (!std::isfinite(w)) throw DomainError("polylog_neg_exp requires finite w");
  if (w <= 0.0) return polylog_series(nu, -std::exp(w));
  if (asymptotic_applies(nu, w)) return fermi_asymptotic(nu, w);
  if (w > 700.0) throw DomainError("argument too large for the Fermi-Dirac integral");
  return fermi_dirac_polylog(nu, std::exp(w));
}

EvalResult polylog(const ComplexOrder& nu, double z) {
  if (!std::isfinite(z)) throw DomainError("polylog requires finite z");
  if (z == 1.0) {
    if (nu.sigma() > 1.0) return zeta(nu);
    throw DomainError("Li_nu(1) diverges for Re(nu) <= 1");
  }
  if (z > 1.0) throw DomainError("polylog is only provided for real z <= 1");
  if (z >= -1.0) return polylog_series(nu, z);
  return polylog_neg_exp(nu, std::log(-z));
}

double polylog_real(double nu, double z) { return polylog(ComplexOrder(nu), z).value.real(); }

}  // namespace gastba::specfun
