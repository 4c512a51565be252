#include "qrtrap/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <fmt/format.h>

#include "qrtrap/dilatation.hpp"
#include "qrtrap/elliptic.hpp"
#include "qrtrap/error.hpp"

namespace qrtrap {

std::string_view to_string(LowerBranch branch) {
  return branch == LowerBranch::RatioAtLeastLambda0 ? "ratio>=lambda0" : "ratio<lambda0";
}

LowerBound lower_bound(const Trapezoid& t) {
  const double ratio = t.c() / t.d();
  const double l0 = lambda0();
  const double scale = (1.0 + C_of_alpha(t.alpha())) * t.d();
  if (ratio >= l0) {
    return {g_of(l0) * scale, LowerBranch::RatioAtLeastLambda0};
  }
  return {g_of(ratio) * scale, LowerBranch::RatioBelowLambda0};
}

TauBound upper_bound_tau(const Trapezoid& t) {
  const double c = t.c();
  const double d = t.d();
  const double tau = std::max(c + d, (1.0 - c * c + d * d) / (2.0 * c));
  const double s = std::sqrt(1.0 + tau * tau) + tau;
  return {s * s, tau};
}

double upper_bound_new(double c, double d) {
  if (!(c > 0.0) || !(d >= c) || !std::isfinite(d)) {
    throw DomainError(fmt::format("upper bound needs 0 < c <= d, got c={} d={}", c, d));
  }
  const double k = d - c;
  const double s = std::sqrt((d + c) * (d + c) + d * d * k * k) + k * std::sqrt(1.0 + d * d);
  const double s2 = s * s;
  return std::numbers::pi * s2 * s2 / (8.0 * c * c * d);
}

double upper_bound_new(const Trapezoid& t) { return upper_bound_new(t.c(), t.d()); }

double asymptotic_slope(double alpha) {
  const double k = cot_pi(alpha);
  const double s = std::sqrt(4.0 + k * k) + k;
  const double s2 = s * s;
  return std::numbers::pi / 8.0 * s2 * s2;
}

double upper_bound_parallelogram(const Parallelogram& pg) {
  const double a = pg.a();
  const double k = pg.cot();
  const double ak = a + k;
  const double s = std::sqrt(4.0 * a * a + ak * ak * k * k) + k * std::sqrt(4.0 + ak * ak);
  const double s2 = s * s;
  const double gap = a - k;
  return std::numbers::pi * s2 * s2 / (16.0 * ak * gap * gap);
}

double rectangle_reflection_coefficient(double d) { return 2.0 * std::numbers::pi * d; }

WernerBounds werner_bounds(double m) {
  if (!std::isfinite(m) || m < 1.0) {
    throw DomainError(fmt::format("rectangle side ratio m must be >= 1, got {}", m));
  }
  return {std::numbers::pi * m / 3.0, std::numbers::pi * m};
}

double kuhnau_inscribed(double alpha_min) {
  if (!std::isfinite(alpha_min) || alpha_min <= 0.0 || alpha_min >= 1.0) {
    throw DomainError(fmt::format("minimal angle fraction must lie in (0, 1), got {}", alpha_min));
  }
  return 2.0 / alpha_min - 1.0;
}

BoundsReport bounds_report(const Trapezoid& t) {
  const LowerBound lo = lower_bound(t);
  const TauBound tau = upper_bound_tau(t);
  return {t, lo.value, lo.branch, tau.value, tau.tau, upper_bound_new(t), global_K(t)};
}

std::vector<ScanRow> compare_scan(double alpha, double c_min, double c_max, int n,
                                  Spacing spacing) {
  if (!(c_min > 0.0) || !(c_max > c_min) || !std::isfinite(c_max)) {
    throw DomainError(fmt::format("scan range must satisfy 0 < c_min < c_max, got [{}, {}]", c_min, c_max));
  }
  if (n < 2) {
    throw DomainError(fmt::format("scan needs at least 2 points, got {}", n));
  }
  const double cot = cot_pi(alpha);
  std::vector<ScanRow> rows;
  rows.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const double s = static_cast<double>(i) / (n - 1);
    double c = spacing == Spacing::Log ? c_min * std::pow(c_max / c_min, s)
                                       : c_min + s * (c_max - c_min);
    if (i == n - 1) {
      c = c_max;
    }
    const Trapezoid t = make_trapezoid(alpha, c + cot);
    const BoundsReport r = bounds_report(t);
    rows.push_back({c, t.d(), r.lower, r.upper_tau, r.upper_new});
  }
  return rows;
}

}  // namespace qrtrap
