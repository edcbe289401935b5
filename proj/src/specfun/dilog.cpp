#include <cmath>
#include <numbers>

#include "gastba/errors.hpp"
#include "gastba/specfun.hpp"

namespace gastba::specfun {
namespace {

constexpr double kPi2Over6 = std::numbers::pi * std::numbers::pi / 6.0;

// B_2k for k = 1..12.
constexpr double kBernoulli[12] = {
    1.0 / 6.0,          -1.0 / 30.0,          1.0 / 42.0,       -1.0 / 30.0,
    5.0 / 66.0,         -691.0 / 2730.0,      7.0 / 6.0,        -3617.0 / 510.0,
    43867.0 / 798.0,    -174611.0 / 330.0,    854513.0 / 138.0, -236364091.0 / 2730.0};

// Li_2(x) = sum_n B_n u^(n+1) / (n+1)!, u = -log(1-x); fine for |u| <= log 2.
double dilog_core(double x) {
  const double u = -std::log1p(-x);
  const double u2 = u * u;
  double sum = u - u2 / 4.0;
  double p = u;     // u^(2k+1)
  double fact = 1;  // (2k+1)!
  for (int k = 1; k <= 12; ++k) {
    p *= u2;
    fact *= (2.0 * k) * (2.0 * k + 1.0);
    sum += kBernoulli[k - 1] * p / fact;
  }
  return sum;
}

}  // namespace

double dilog(double x) {
  if (!(x <= 1.0)) throw DomainError("real dilogarithm needs x <= 1");
  if (x == 1.0) return kPi2Over6;
  if (x == 0.0) return 0.0;
  if (x > 0.5) return kPi2Over6 - std::log(x) * std::log1p(-x) - dilog_core(1.0 - x);
  if (x >= -1.0) return dilog_core(x);
  const double l = std::log(-x);
  return -kPi2Over6 - 0.5 * l * l - dilog_core(1.0 / x);
}

double rogers_dilog(double z) {
  if (!(z <= 1.0)) throw DomainError("Rogers dilogarithm has a branch cut for z > 1");
  if (z == 0.0) return 0.0;
  if (z == 1.0) return kPi2Over6;
  return dilog(z) + 0.5 * std::log(std::abs(z)) * std::log1p(-z);
}

}  // namespace gastba::specfun
