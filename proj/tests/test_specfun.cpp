#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "gastba/errors.hpp"
#include "gastba/specfun.hpp"
#include "oracles.hpp"

using namespace gastba;
using namespace gastba::specfun;

namespace {

constexpr double kPi = std::numbers::pi;

double rel(cplx a, cplx b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

}  // namespace

TEST_CASE("gamma: identity cases and integral oracle") {
  CHECK(std::abs(specfun::gamma(1.0) - 1.0) < 1e-15);
  CHECK(std::abs(specfun::gamma(0.5) - std::sqrt(kPi)) < 1e-15);
  const cplx z(0.75, 2.0);
  CHECK(rel(gamma(ComplexOrder(z)), oracle::gamma_integral(z)) < 1e-13);
  for (double x : {0.3, 1.7, 4.25, 9.5}) CHECK(rel(specfun::gamma(x), std::tgamma(x)) < 1e-13);
  CHECK_THROWS_AS(specfun::gamma(-2.0), PoleError);
}

TEST_CASE("gamma: reflection region matches the integral oracle through recursion") {
  // Gamma(z) = Gamma(z + 2) / (z (z + 1)), with the oracle on the right
  for (cplx z : {cplx(-0.3, 1.5), cplx(-1.6, -0.4), cplx(0.2, 7.0)}) {
    const cplx ref = oracle::gamma_integral(z + 2.0) / (z * (z + 1.0));
    CHECK(rel(gamma(ComplexOrder(z)), ref) < 1e-12);
  }
}

TEST_CASE("zeta: classical values") {
  CHECK(std::abs(zeta(2.0).value - kPi * kPi / 6.0) < 1e-15);
  CHECK(std::abs(zeta(4.0).value - std::pow(kPi, 4) / 90.0) < 1e-15);
  CHECK(std::abs(zeta(0.0).value + 0.5) < 1e-15);
  CHECK(std::abs(zeta_euler_maclaurin(0.0).value + 0.5) < 1e-14);
  CHECK(std::abs(zeta(0.5).value - static_cast<double>(oracle::kZetaHalf)) < 1e-14);
  CHECK(std::abs(zeta(-1.0).value + 1.0 / 12.0) < 1e-15);
  CHECK_THROWS_AS(zeta(1.0), PoleError);
}

TEST_CASE("zeta: Borwein oracle across the strip") {
  for (cplx s : {cplx(0.5, 14.0), cplx(0.25, 3.0), cplx(0.9, 25.0), cplx(0.5, 30.0)}) {
    const auto o = oracle::zeta_borwein({s.real(), s.imag()});
    CHECK(rel(zeta(ComplexOrder(s)).value, cplx(static_cast<double>(o.real()), static_cast<double>(o.imag()))) <
          1e-12);
  }
}

TEST_CASE("zeta: trivial zero carries a warning") {
  const auto r = zeta(ComplexOrder(-2.0 + 1e-9));
  CHECK(std::abs(r.value) < 1e-9);
  CHECK_FALSE(r.warnings.empty());
}

TEST_CASE("property: reflection consistency on the strip") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> sig(0.01, 0.99), tt(-40.0, 40.0);
  for (int i = 0; i < 100; ++i) {
    const ComplexOrder nu(sig(rng), tt(rng));
    const cplx a = zeta(nu).value;
    const cplx b = zeta_reflected(nu).value;
    CHECK(std::abs(a - b) < 1e-10 * (1.0 + std::abs(a)));
  }
}

TEST_CASE("polylog: closed forms") {
  CHECK(std::abs(polylog(1.0, 0.5).value - std::log(2.0)) < 1e-15);
  CHECK(std::abs(polylog(3.0, 1.0).value - zeta(3.0).value) < 1e-15);
  CHECK(std::abs(polylog(3.0, 1.0 - 1e-12).value - static_cast<double>(oracle::kZeta3)) < 1e-11);
  const double l2 = std::log(2.0);
  CHECK(std::abs(polylog_series(2.0, 0.5).value - (kPi * kPi / 12.0 - l2 * l2 / 2.0)) < 1e-15);
  CHECK(std::abs(polylog_series(2.0, 1e-10).value - 1e-10) < 1e-20);
  const cplx ref = oracle::polylog_direct(1.5, 0.99);
  CHECK(rel(polylog_series(1.5, 0.99).value, ref) < 1e-12);
  CHECK_THROWS_AS(polylog(2.0, 1.5), DomainError);
}

TEST_CASE("polylog: alternating value at -1 is the eta function") {
  const ComplexOrder nu(0.5, 14.0);
  const cplx lhs = -polylog(nu, -1.0).value;
  const cplx rhs = eta_factor(nu.value()) * zeta(nu).value;
  CHECK(std::abs(lhs - rhs) < 1e-12 * (1.0 + std::abs(rhs)));
}

TEST_CASE("fermi-dirac: limits and oracles") {
  const double y = 1e-9;
  CHECK(std::abs(fermi_dirac_polylog(2.0, y).value + y) < 1e-17);
  const cplx half = fermi_dirac_polylog(0.5, 1.0).value;
  const double ref = -(1.0 - std::sqrt(2.0)) * static_cast<double>(oracle::kZetaHalf);
  CHECK(std::abs(half - ref) < 1e-13);
  // deep Fermi sea: the leading Sommerfeld term plus the exact quadrature oracle
  const double w = 40.0;
  const double lead = std::pow(w, 1.5) / std::tgamma(2.5);
  const double v = -polylog_neg_exp(1.5, w).value.real();
  CHECK(std::abs(v - lead) / lead < 2e-3);
  CHECK(std::abs(v - oracle::fermi_dirac_integral(1.5, w)) / v < 1e-12);
  CHECK(std::abs(-fermi_dirac_polylog(1.5, std::exp(w)).value.real() - v) / v < 1e-11);
}

TEST_CASE("fermi-dirac: quadrature oracle over the real line of w") {
  for (double s : {0.5, 1.0, 1.5, 2.5}) {
    for (double w : {-5.0, -0.5, 0.0, 2.0, 10.0, 35.0, 60.0}) {
      const double o = oracle::fermi_dirac_integral(s, w);
      const double v = -polylog_neg_exp(s, w).value.real();
      CHECK_MESSAGE(std::abs(v - o) / o < 1e-11, "s=" << s << " w=" << w);
    }
  }
}

TEST_CASE("property: series and Bose integral agree") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> sig(0.6, 4.0), tt(-5.0, 5.0), zz(0.0, 0.95);
  for (int i = 0; i < 60; ++i) {
    const ComplexOrder nu(sig(rng), tt(rng));
    double z = zz(rng);
    if (z == 0.0) z = 0.5;
    const cplx a = polylog_series(nu, z).value;
    const cplx b = bose_polylog_integral(nu, z).value;
    CHECK_MESSAGE(std::abs(a - b) < 1e-9, "nu=" << nu.sigma() << "+" << nu.t() << "i z=" << z);
  }
}

TEST_CASE("property: Fermi-Dirac integral continues the alternating series") {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> sig(0.1, 3.0), tt(-20.0, 20.0), yy(0.0, 1.0);
  for (int i = 0; i < 60; ++i) {
    const ComplexOrder nu(sig(rng), tt(rng));
    double y = yy(rng);
    if (y == 0.0) y = 1.0;
    const cplx a = fermi_dirac_polylog(nu, y).value;
    const cplx b = polylog_series(nu, -y).value;
    CHECK_MESSAGE(std::abs(a - b) < 1e-9, "nu=" << nu.sigma() << "+" << nu.t() << "i y=" << y);
  }
}

TEST_CASE("polylog: direct series oracle for complex order") {
  for (double z : {-0.9, -0.3, 0.2, 0.45, 0.7, 0.9}) {
    const cplx s(1.3, 4.0);
    CHECK(rel(polylog(ComplexOrder(s), z).value, oracle::polylog_direct(s, z)) < 1e-11);
  }
}

TEST_CASE("dilogarithm: values and series oracle") {
  CHECK(std::abs(rogers_dilog(0.5) - kPi * kPi / 12.0) < 1e-13);
  CHECK(rogers_dilog(0.0) == 0.0);
  const double r = (std::sqrt(5.0) - 1.0) / 2.0;
  CHECK(std::abs(rogers_dilog(r) - kPi * kPi / 10.0) < 1e-13);
  CHECK(std::abs(rogers_dilog(1.0) - kPi * kPi / 6.0) < 1e-15);
  for (double x : {-0.5, -0.2, 0.1, 0.3, 0.5}) CHECK(std::abs(dilog(x) - oracle::dilog_series(x)) < 1e-15);
  CHECK_THROWS_AS(rogers_dilog(1.5), DomainError);
}

TEST_CASE("property: Rogers functional equations") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 1000; ++i) {
    double z = u(rng);
    if (z == 0.0) continue;
    CHECK(std::abs(rogers_dilog(z) + rogers_dilog(1.0 - z) - kPi * kPi / 6.0) < 1e-11);
    CHECK(std::abs(rogers_dilog(z) + rogers_dilog(-z / (1.0 - z))) < 1e-11);
  }
}

TEST_CASE("property: duplication identity for the potential normalization") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> sig(-1.3, 2.3), tt(-6.0, 6.0);
  for (int i = 0; i < 100; ++i) {
    const cplx nu(sig(rng), tt(rng));
    const cplx lhs = std::sin(kPi * nu) * gamma(ComplexOrder(1.0 - 2.0 * nu)) * gamma(ComplexOrder(nu));
    const cplx rhs = std::sqrt(kPi) * std::exp(-2.0 * nu * std::log(2.0)) * gamma(ComplexOrder(0.5 - nu));
    CHECK(rel(lhs, rhs) < 1e-10);
  }
}

TEST_CASE("xi: values and duality") {
  CHECK(std::abs(xi_function(2.0) - kPi / 6.0) < 1e-15);
  CHECK(std::abs(xi_function(-1.0) - kPi / 6.0) < 1e-14);
  CHECK(std::abs(xi_function(ComplexOrder(0.3, 5.0)) - xi_function(ComplexOrder(0.7, -5.0))) < 1e-10);
  const auto zs = oracle::zeta_line_minima(0.5L, 14.0L, 14.3L, 0.1L);
  REQUIRE(zs.size() == 1);
  const double scale = std::abs(xi_function(ComplexOrder(0.5, 15.0)));
  CHECK(std::abs(xi_function(ComplexOrder(0.5, zs[0]))) < 1e-4 * scale);
  CHECK_THROWS_AS(xi_function(1.0), PoleError);
}

TEST_CASE("every evaluation reports an error estimate") {
  CHECK(zeta(ComplexOrder(0.5, 10.0)).abs_error_estimate > 0.0);
  CHECK(eta(ComplexOrder(0.5, 10.0)).abs_error_estimate > 0.0);
  CHECK(fermi_dirac_polylog(ComplexOrder(0.7, 3.0), 5.0).abs_error_estimate > 0.0);
  CHECK(polylog_series(2.0, 0.3).terms_or_nodes_used > 0);
}
