#include "qrtrap/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include <fmt/format.h>

#include "qrtrap/error.hpp"

namespace qrtrap {

bool PlanePoint::finite() const { return std::isfinite(x) && std::isfinite(y); }

void require_finite(PlanePoint p, std::string_view what) {
  if (!p.finite()) {
    throw DomainError(fmt::format("{} must have finite coordinates, got ({}, {})", what, p.x, p.y));
  }
}

double cot_pi(double alpha) {
  if (!std::isfinite(alpha) || alpha <= 0.0 || alpha > 0.5) {
    throw DomainError(fmt::format("alpha must lie in (0, 1/2], got {}", alpha));
  }
  return std::tan(std::numbers::pi * (0.5 - alpha));
}

Trapezoid::Trapezoid(double alpha, double d, double c)
    : alpha_(alpha), d_(d), c_(c), ell_((d - c) / d) {}

namespace {
constexpr double kDegenerateUlps = 4.0;
}

Trapezoid make_trapezoid(double alpha, double d) {
  const double cot = cot_pi(alpha);
  if (!std::isfinite(d)) {
    throw DomainError(fmt::format("d must be finite, got {}", d));
  }
  // c below a few ulps of d is a rounding artefact of cot, not a trapezoid
  if (!(d - cot > kDegenerateUlps * std::numeric_limits<double>::epsilon() * std::abs(d)) || !(d > 0.0)) {
    throw DomainError(fmt::format("d must exceed cot(pi*alpha)={:g}, got d={:g}", cot, d));
  }
  return Trapezoid(alpha, d, d - cot);
}

Parallelogram::Parallelogram(double alpha, double a)
    : alpha_(alpha),
      a_(a),
      cot_(cot_pi(alpha)),
      half_c_((a - cot_) / 2.0),
      half_d_((a + cot_) / 2.0) {}

Parallelogram make_parallelogram(double alpha, double a) {
  if (!std::isfinite(alpha) || alpha <= 0.0 || alpha >= 0.5) {
    throw DomainError(fmt::format("parallelogram alpha must lie in (0, 1/2), got {}", alpha));
  }
  const double cot = cot_pi(alpha);
  if (!std::isfinite(a) || !(a - cot > kDegenerateUlps * std::numeric_limits<double>::epsilon() * std::abs(a))) {
    throw DomainError(fmt::format("a must exceed cot(pi*alpha)={:g}, got a={:g}", cot, a));
  }
  return Parallelogram(alpha, a);
}

std::string_view to_string(Piece piece) {
  switch (piece) {
    case Piece::G1: return "G1";
    case Piece::G2: return "G2";
    case Piece::G3: return "G3";
    case Piece::G4: return "G4";
    case Piece::G5: return "G5";
  }
  return "?";
}

std::string_view to_string(Half half) { return half == Half::Right ? "right" : "left"; }

std::string to_string(Region region) {
  return fmt::format("{}/{}", to_string(region.piece), to_string(region.half));
}

Piece classify_piece(const Trapezoid& t, PlanePoint p) {
  const double x = std::abs(p.x);
  const double y = p.y;
  if (y >= 0.0 && y <= 1.0) {
    return x <= t.d() * (1.0 - t.ell() * y) ? Piece::G1 : Piece::G2;
  }
  if (y > 1.0) {
    return x <= t.c() ? Piece::G3 : Piece::G4;
  }
  return Piece::G5;
}

Region classify_region(const Trapezoid& t, PlanePoint p) {
  require_finite(p, "point");
  return {classify_piece(t, p), p.x < 0.0 ? Half::Left : Half::Right};
}

namespace {

double segment_distance(double px, double py, double ax, double ay, double bx, double by) {
  const double dx = bx - ax;
  const double dy = by - ay;
  const double len2 = dx * dx + dy * dy;
  double s = len2 > 0.0 ? ((px - ax) * dx + (py - ay) * dy) / len2 : 0.0;
  s = std::clamp(s, 0.0, 1.0);
  return std::hypot(px - (ax + s * dx), py - (ay + s * dy));
}

}  // namespace

double seam_distance(const Trapezoid& t, PlanePoint p) {
  require_finite(p, "point");
  const double x = std::abs(p.x);
  const double y = p.y;
  const double axis = x;
  const double bottom = std::abs(y);
  const double top = std::abs(y - 1.0);
  const double riser = y >= 1.0 ? std::abs(x - t.c()) : std::hypot(x - t.c(), y - 1.0);
  const double slant = segment_distance(x, y, t.d(), 0.0, t.c(), 1.0);
  return std::min({axis, bottom, top, riser, slant});
}

void validate(const Window& w) {
  const bool finite = std::isfinite(w.x_min) && std::isfinite(w.x_max) &&
                      std::isfinite(w.y_min) && std::isfinite(w.y_max);
  if (!finite || !(w.x_max > w.x_min) || !(w.y_max > w.y_min)) {
    throw DomainError(fmt::format("degenerate window [{}, {}] x [{}, {}]", w.x_min, w.x_max,
                                  w.y_min, w.y_max));
  }
}

Window right_half_window(const Trapezoid& t) { return {0.0, 3.0 * t.d(), -2.0, 3.0}; }

Window default_window(const Trapezoid& t) { return {-3.0 * t.d(), 3.0 * t.d(), -2.0, 3.0}; }

}  // namespace qrtrap
