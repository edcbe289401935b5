#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "gastba/errors.hpp"
#include "gastba/riemann.hpp"
#include "oracles.hpp"

using namespace gastba;
using namespace gastba::riemann;

namespace {

constexpr double kPi = std::numbers::pi;

// Re(2 b k^(s-1) I), I = int_0^inf y^-s sin^2(y/2) dy, s = 2 nu. Dyadic panels
// toward y = 0, uniform panels over 200 periods, and the asymptotic series of
// the cosine tail at Y = 400 pi where sin Y = 0 and cos Y = 1.
double kernel_oracle(const QuasiKernelSpec& spec, double k) {
  using oracle::cld;
  using oracle::ld;
  const cld s(2.0L * spec.nu.sigma(), 2.0L * spec.nu.t());
  static std::vector<ld> x, w;
  if (x.empty()) oracle::gauss_legendre(20, x, w);
  auto f = [&](ld y) {
    const ld sh = std::sin(y / 2);
    return std::exp(-s * std::log(y)) * (sh * sh);
  };
  auto panel = [&](ld a, ld b) {
    cld sum = 0;
    for (std::size_t j = 0; j < x.size(); ++j) sum += w[j] * f(0.5L * (a + b) + 0.5L * (b - a) * x[j]);
    return sum * 0.5L * (b - a);
  };
  cld I = 0;
  for (int e = 0; e < 80; ++e) I += panel(std::ldexp(1.0L, -e - 1), std::ldexp(1.0L, -e));
  const ld Y = 400.0L * oracle::kPi;
  const int n = 2000;
  for (int p = 0; p < n; ++p) I += panel(1.0L + (Y - 1.0L) * p / n, 1.0L + (Y - 1.0L) * (p + 1) / n);
  // (1/2) int_Y y^-s dy - (1/2) int_Y y^-s cos y dy
  I += 0.5L * std::exp((1.0L - s) * std::log(Y)) / (s - 1.0L);
  cld poch = s, cos_tail = 0;
  for (int j = 0; j < 8; ++j) {
    const ld sign = (j % 2 == 0) ? 1.0L : -1.0L;
    cos_tail += sign * poch * std::exp(-(s + static_cast<ld>(2 * j + 1)) * std::log(Y));
    poch *= (s + static_cast<ld>(2 * j + 1)) * (s + static_cast<ld>(2 * j + 2));
  }
  I -= 0.5L * cos_tail;
  const cld b(spec.b_nu.real(), spec.b_nu.imag());
  return static_cast<double>(std::real(2.0L * b * std::exp((s - 1.0L) * std::log(static_cast<ld>(k))) * I));
}

double kernel_scale(const QuasiKernelSpec& spec, double k) {
  return std::abs(spec.gamma_nu * std::exp((2.0 * spec.nu.value() - 1.0) * std::log(k)));
}

ZeroCandidate candidate_at(ComplexOrder nu) {
  ZeroCandidate c;
  c.nu = nu;
  return c;
}

}  // namespace

TEST_CASE("kernel constants") {
  const auto s = make_kernel_spec(0.9);
  const double lit = -std::pow(2.0, (0.9 - 3.0) / 2.0) / (2.0 * kPi * std::sinh(0.1 * std::log(2.0) / 2.0));
  CHECK(std::abs(s.h_nu - lit) < 1e-14 * std::abs(lit));
  CHECK(std::abs(s.gamma_nu - 1.0 / ((1.0 - std::pow(2.0, 0.1)) * std::tgamma(0.9))) < 1e-13 * std::abs(s.gamma_nu));
  CHECK(s.sigma == doctest::Approx(1.8));
  CHECK(s.alpha == 0.0);
  CHECK(s.warnings.empty());

  const auto c = make_kernel_spec(ComplexOrder(0.75, 2.0));
  CHECK(std::abs(kernel_prefactor_from_potential(c) - c.gamma_nu) < 1e-10 * std::abs(c.gamma_nu));
  CHECK(c.alpha == 2.0);

  CHECK_THROWS_AS(make_kernel_spec(1.0), ExcludedOrderError);
  CHECK_THROWS_AS(make_kernel_spec(ComplexOrder(1.0, 2.0 * kPi / std::log(2.0))), ExcludedOrderError);
  CHECK_THROWS_AS(make_kernel_spec(-1.0), ExcludedOrderError);
  const auto half = make_kernel_spec(ComplexOrder(0.5 + 1e-5, 0.0));
  CHECK_FALSE(half.warnings.empty());
}

TEST_CASE("closed-form kernel: limits and scaling") {
  const auto s = make_kernel_spec(0.8);
  CHECK(kernel_closed_form(s, 0.0) == 0.0);
  CHECK(std::abs(kernel_closed_form(s, 1e-12)) < 1e-6);
  const double ratio = kernel_closed_form(s, 2.6) / kernel_closed_form(s, 1.3);
  CHECK(std::abs(ratio - std::pow(2.0, 0.6)) < 1e-13);
  CHECK_THROWS_AS(kernel_closed_form(make_kernel_spec(0.4), 0.0), DomainError);
  CHECK_THROWS_AS(kernel_closed_form(s, -1.0), DomainError);
}

TEST_CASE("kernel from the potential matches the closed form and the oracle") {
  struct Case {
    ComplexOrder nu;
    double k;
    double tol;
  };
  const Case cases[] = {{ComplexOrder(0.75, 1.0), 1.0, 1e-8},
                        {ComplexOrder(0.8), 0.7, 1e-6},
                        {ComplexOrder(0.8), 3.0, 1e-6},
                        {ComplexOrder(0.51), 1.0, 1e-6},
                        {ComplexOrder(1.3, -2.0), 2.0, 1e-8}};
  for (const auto& c : cases) {
    const auto spec = make_kernel_spec(c.nu);
    const double closed = kernel_closed_form(spec, c.k);
    const auto q = kernel_from_potential(spec, c.k);
    const double o = kernel_oracle(spec, c.k);
    const double scale = kernel_scale(spec, c.k);
    CHECK_MESSAGE(std::abs(q.value - closed) < c.tol * scale, "nu=" << c.nu.sigma() << "+" << c.nu.t() << "i");
    CHECK_MESSAGE(std::abs(o - closed) < c.tol * scale, "nu=" << c.nu.sigma() << "+" << c.nu.t() << "i");
    CHECK(q.abs_error_estimate >= 0.0);
  }
  CHECK_THROWS_AS(kernel_from_potential(make_kernel_spec(0.4), 1.0), DomainError);
  CHECK_THROWS_AS(kernel_from_potential(make_kernel_spec(0.8), 0.0), DomainError);
}

TEST_CASE("property: potential and closed-form kernels agree on random orders") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> sig(0.55, 1.45), tt(-5.0, 5.0), kk(0.1, 10.0);
  for (int i = 0; i < 20; ++i) {
    const ComplexOrder nu(sig(rng), tt(rng));
    const double k = kk(rng);
    const auto spec = make_kernel_spec(nu);
    const double closed = kernel_closed_form(spec, k);
    const double q = kernel_from_potential(spec, k).value;
    CHECK_MESSAGE(std::abs(q - closed) < 1e-5 * kernel_scale(spec, k),
                  "nu=" << nu.sigma() << "+" << nu.t() << "i k=" << k);
  }
}

TEST_CASE("real-space potential") {
  const auto s = make_kernel_spec(0.8);
  CHECK(std::abs(potential_realspace(s, 1.0) - s.b_nu.real()) < 1e-15 * std::abs(s.b_nu));
  CHECK(std::abs(potential_realspace(s, 3.0) / potential_realspace(s, 1.5) - std::pow(2.0, -1.6)) < 1e-13);
  CHECK(potential_realspace(s, -2.0) == potential_realspace(s, 2.0));
  // complex order: log-periodic modulation, x -> x e^(pi / 2 alpha) flips the sign
  const auto c = make_kernel_spec(ComplexOrder(0.7, 1.5));
  const double x = 1.3, lam = std::exp(kPi / 3.0);
  CHECK(std::abs(potential_realspace(c, lam * x) + std::pow(lam, -1.4) * potential_realspace(c, x)) <
        1e-12 * std::abs(c.b_nu));
  CHECK_THROWS_AS(potential_realspace(s, 0.0), SingularityError);
}

TEST_CASE("zero scanner against the Borwein oracle") {
  const auto ref = oracle::zeta_line_minima(0.5L, 10.0L, 40.0L, 0.1L);
  const auto found = find_zeros(0.5, 10.0, 40.0);
  std::vector<double> refined;
  for (const auto& c : found)
    if (c.refined) refined.push_back(c.nu.t());
  REQUIRE(refined.size() == ref.size());
  REQUIRE(ref.size() == 6);
  for (std::size_t i = 0; i < ref.size(); ++i) CHECK(std::abs(refined[i] - ref[i]) < 1e-4);

  for (const auto& c : found) {
    if (!c.refined) continue;
    // soundness through the Fermi-Dirac route at fugacity one
    const cplx li = specfun::fermi_dirac_polylog(c.nu, 1.0).value;
    CHECK(std::abs(li / specfun::eta_factor(c.nu.value())) < 1e-8);
    CHECK(c.abs_zeta_check < 1e-8);
    CHECK(verify_zero_delta(c, {0.1, 1.0, 10.0}) < 1e-8);
    CHECK(verify_zero_delta(c, {0.5, 1.0, 2.0}) < 1e-8);
  }
  CHECK(verify_zero_delta(candidate_at(ComplexOrder(0.5, 15.0)), {0.5, 1.0, 2.0}) > 1e-3);

  for (const auto& c : find_zeros(0.9, 0.0, 50.0)) CHECK_FALSE(c.refined);
  CHECK(find_zeros(0.5, 0.0, 5.0).empty());
}

TEST_CASE("xi duality") {
  for (double s : {0.1, 0.3, 0.5, 0.7, 0.9})
    for (double t : {-20.0, -5.0, 0.5, 7.0, 25.0}) CHECK(check_duality(ComplexOrder(s, t)) < 1e-9);
  CHECK(std::abs(specfun::xi_function(2.0) - specfun::xi_function(-1.0)) < 1e-14);
}

TEST_CASE("Casimir channel") {
  const auto d1 = casimir_channel_check(1);
  CHECK(std::abs(d1.free_energy + kPi / 6.0) < 1e-14);
  CHECK(d1.residual < 1e-10);
  CHECK(d1.route == "direct");
  const auto d2 = casimir_channel_check(2);
  CHECK(std::abs(d2.free_energy + static_cast<double>(oracle::kZeta3) / (2.0 * kPi)) < 1e-14);
  CHECK(d2.residual < 1e-8);
  CHECK(d2.route == "limit");
  CHECK(casimir_channel_check(3).residual < 1e-10);
  CHECK_THROWS_AS(casimir_channel_check(0), DomainError);
}
