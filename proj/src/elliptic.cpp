#include "qrtrap/elliptic.hpp"

#include <cmath>
#include <numbers>

#include <fmt/format.h>

#include "qrtrap/error.hpp"

namespace qrtrap {
namespace {

constexpr int kMaxAgmIterations = 40;
constexpr double kAgmTolerance = 1e-16;

double agm(double a, double b) {
  for (int i = 0; i < kMaxAgmIterations; ++i) {
    if (std::abs(a - b) <= kAgmTolerance * a) {
      break;
    }
    const double next_a = 0.5 * (a + b);
    const double next_b = std::sqrt(a * b);
    if (next_a == a && next_b == b) {
      break;
    }
    a = next_a;
    b = next_b;
  }
  return 0.5 * (a + b);
}

// sqrt(1 - x^2) without cancellation near x = 1.
double complement(double x) { return std::sqrt((1.0 - x) * (1.0 + x)); }

}  // namespace

double ellip_K(double lambda) {
  if (!(lambda >= 0.0 && lambda < 1.0)) {
    throw DomainError(fmt::format("K(lambda) needs lambda in [0, 1), got {}", lambda));
  }
  return std::numbers::pi / (2.0 * agm(1.0, complement(lambda)));
}

double ellip_K_prime(double lambda) {
  if (!(lambda > 0.0 && lambda <= 1.0)) {
    throw DomainError(fmt::format("K'(lambda) needs lambda in (0, 1], got {}", lambda));
  }
  // K(sqrt(1 - lambda^2)) = pi / (2 AGM(1, lambda)).
  return std::numbers::pi / (2.0 * agm(1.0, lambda));
}

double g_of(double lambda) {
  if (!(lambda > 0.0 && lambda < 1.0)) {
    throw DomainError(fmt::format("g(lambda) needs lambda in (0, 1), got {}", lambda));
  }
  return lambda * ellip_K_prime(lambda) / ellip_K(lambda);
}

double lambda0_residual(double lambda) {
  return (1.0 - lambda) * (1.0 + lambda) * ellip_K(lambda) * ellip_K_prime(lambda) -
         std::numbers::pi / 2.0;
}

double find_lambda0() {
  double lo = 0.1;
  double hi = 0.99;
  double f_lo = lambda0_residual(lo);
  const double f_hi = lambda0_residual(hi);
  if (!(f_lo * f_hi < 0.0)) {
    throw ConvergenceError(
        fmt::format("no sign change of the lambda0 equation on [{}, {}]: {} {}", lo, hi, f_lo, f_hi));
  }
  for (int i = 0; i < 200 && hi - lo > 1e-15; ++i) {
    const double mid = 0.5 * (lo + hi);
    const double f_mid = lambda0_residual(mid);
    if (f_mid == 0.0) {
      return mid;
    }
    if ((f_mid < 0.0) == (f_lo < 0.0)) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
    }
  }
  if (hi - lo > 1e-10) {
    throw ConvergenceError("bisection for lambda0 did not reach 1e-10");
  }
  return 0.5 * (lo + hi);
}

double lambda0() {
  static const double value = find_lambda0();
  return value;
}

double C_of_alpha(double alpha) {
  if (!std::isfinite(alpha) || alpha <= 0.0 || alpha > 0.5) {
    throw DomainError(fmt::format("C(alpha) needs alpha in (0, 1/2], got {}", alpha));
  }
  if (alpha == 0.5) {
    return 0.0;
  }
  const double half_tan = 0.5 * std::tan(std::numbers::pi * alpha);
  const double s = std::sqrt(1.0 + half_tan * half_tan) + half_tan;
  return 1.0 / (s * s);
}

double C_of_alpha_difference_form(double alpha) {
  if (!std::isfinite(alpha) || alpha <= 0.0 || alpha >= 0.5) {
    throw DomainError(fmt::format("difference form of C(alpha) needs alpha in (0, 1/2), got {}", alpha));
  }
  const double tan = std::tan(std::numbers::pi * alpha);
  const double s = std::sqrt(1.0 + tan * tan / 4.0) - tan / 2.0;
  return s * s;
}

EllipticValue evaluate_elliptic(double lambda) {
  const double k = ellip_K(lambda);
  const double kp = ellip_K_prime(lambda);
  if (!(lambda > 0.0)) {
    throw DomainError("g(lambda) needs lambda > 0");
  }
  return {lambda, k, kp, lambda * kp / k};
}

}  // namespace qrtrap
