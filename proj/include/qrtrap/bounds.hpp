#pragma once

#include <string_view>
#include <vector>

#include "qrtrap/geometry.hpp"

namespace qrtrap {

// Bounds on QR_L, the smallest K admitting a K-quasiconformal reflection in
// the boundary L. Every evaluator below uses sums of radicals only; do not
// rewrite them into differences of nearly equal square roots.

enum class LowerBranch { RatioAtLeastLambda0, RatioBelowLambda0 };

[[nodiscard]] std::string_view to_string(LowerBranch branch);

struct LowerBound {
  double value;
  LowerBranch branch;
};

/// g(lambda*) (1 + C(alpha)) d with lambda* = lambda0 when c/d >= lambda0 and
/// lambda* = c/d otherwise.
[[nodiscard]] LowerBound lower_bound(const Trapezoid& t);

struct TauBound {
  double value;
  double tau;
};

/// (sqrt(1 + tau^2) + tau)^2, tau = max{c + d, (1 - c^2 + d^2) / (2c)}.
[[nodiscard]] TauBound upper_bound_tau(const Trapezoid& t);

/// pi (sqrt((d + c)^2 + d^2 (d - c)^2) + (d - c) sqrt(1 + d^2))^4 / (8 c^2 d),
/// the squared coefficient of the trapezoid-to-rectangle map times the
/// rectangle reflection coefficient 2 pi d.
[[nodiscard]] double upper_bound_new(const Trapezoid& t);

/// Same formula for raw half-base lengths 0 < c <= d.
[[nodiscard]] double upper_bound_new(double c, double d);

/// C1(alpha) = (pi / 8) (sqrt(4 + cot^2(pi alpha)) + cot(pi alpha))^4, the slope
/// of upper_bound_new in d as d -> infinity.
[[nodiscard]] double asymptotic_slope(double alpha);

/// Parallelogram majorant
/// pi (sqrt(4a^2 + (a + k)^2 k^2) + k sqrt(4 + (a + k)^2))^4 / (16 (a + k) (a - k)^2),
/// k = cot(pi alpha).
[[nodiscard]] double upper_bound_parallelogram(const Parallelogram& pg);

/// Reflection coefficient used for the rectangle [-d, d] x [0, 1].
[[nodiscard]] double rectangle_reflection_coefficient(double d);

struct WernerBounds {
  double lower;
  double upper;
};

/// pi m / 3 < QR < pi m for the boundary of [0, m] x [0, 1], m >= 1.
[[nodiscard]] WernerBounds werner_bounds(double m);

/// 2 / alpha_min - 1 for polygons with an inscribed circle and minimal inner
/// angle pi alpha_min, alpha_min in (0, 1).
[[nodiscard]] double kuhnau_inscribed(double alpha_min);

struct BoundsReport {
  Trapezoid trapezoid;
  double lower;
  LowerBranch branch;
  double upper_tau;
  double tau;
  double upper_new;
  double K_tilde;
};

[[nodiscard]] BoundsReport bounds_report(const Trapezoid& t);

struct ScanRow {
  double c;
  double d;
  double lower;
  double upper_tau;
  double upper_new;
};

enum class Spacing { Uniform, Log };

/// Bounds along c in [c_min, c_max] with d = c + cot(pi alpha). Throws
/// DomainError unless 0 < c_min < c_max and n >= 2.
[[nodiscard]] std::vector<ScanRow> compare_scan(double alpha, double c_min, double c_max, int n,
                                                Spacing spacing = Spacing::Uniform);

}  // namespace qrtrap
