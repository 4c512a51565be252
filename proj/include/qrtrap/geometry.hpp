#pragma once

#include <compare>
#include <complex>
#include <cstdint>
#include <string>
#include <string_view>

namespace qrtrap {

/// A point of the plane, read as the complex number x + iy.
struct PlanePoint {
  double x = 0.0;
  double y = 0.0;

  [[nodiscard]] std::complex<double> complex() const { return {x, y}; }
  [[nodiscard]] static PlanePoint from_complex(std::complex<double> z) {
    return {z.real(), z.imag()};
  }
  [[nodiscard]] bool finite() const;

  friend bool operator==(const PlanePoint&, const PlanePoint&) = default;
};

/// Throws DomainError when either coordinate is NaN or infinite.
void require_finite(PlanePoint p, std::string_view what);

/// cot(pi * alpha) for alpha in (0, 1/2], evaluated as tan(pi * (1/2 - alpha))
/// so that alpha = 1/2 yields exactly 0.
[[nodiscard]] double cot_pi(double alpha);

/// Isosceles trapezoid of unit height, symmetric about the imaginary axis,
/// bigger base [-d, d] on the real axis and acute base angles pi * alpha.
/// The smaller base is [-c, c] + i with c = d - cot(pi * alpha).
class Trapezoid {
 public:
  [[nodiscard]] double alpha() const { return alpha_; }
  [[nodiscard]] double d() const { return d_; }
  [[nodiscard]] double c() const { return c_; }
  /// (d - c) / d, in [0, 1); zero only for the rectangle alpha = 1/2.
  [[nodiscard]] double ell() const { return ell_; }
  /// d - c, i.e. cot(pi * alpha).
  [[nodiscard]] double shift() const { return d_ - c_; }

 private:
  Trapezoid(double alpha, double d, double c);
  friend Trapezoid make_trapezoid(double alpha, double d);

  double alpha_;
  double d_;
  double c_;
  double ell_;
};

/// Throws DomainError unless alpha in (0, 1/2] and d > cot(pi * alpha).
[[nodiscard]] Trapezoid make_trapezoid(double alpha, double d);

/// Parallelogram of unit height with horizontal sides of length a and acute
/// angle pi * alpha, centrally symmetric about i/2. The imaginary axis cuts it
/// into two rectangular trapezoids whose horizontal sides are half_c and half_d.
class Parallelogram {
 public:
  [[nodiscard]] double alpha() const { return alpha_; }
  [[nodiscard]] double a() const { return a_; }
  [[nodiscard]] double half_c() const { return half_c_; }
  [[nodiscard]] double half_d() const { return half_d_; }
  [[nodiscard]] double cot() const { return cot_; }

 private:
  Parallelogram(double alpha, double a);
  friend Parallelogram make_parallelogram(double alpha, double a);

  double alpha_;
  double a_;
  double cot_;
  double half_c_;
  double half_d_;
};

/// Throws DomainError unless alpha in (0, 1/2) and a > cot(pi * alpha).
[[nodiscard]] Parallelogram make_parallelogram(double alpha, double a);

// Pieces of the right half-plane decomposition:
//   G1  the right half of the trapezoid (closed)
//   G2  the rest of the strip 0 <= y <= 1
//   G3  y > 1 above the smaller base, 0 <= x <= c
//   G4  y > 1, x > c
//   G5  y < 0
enum class Piece : std::uint8_t { G1 = 0, G2, G3, G4, G5 };
enum class Half : std::uint8_t { Right = 0, Left };

inline constexpr int kPieceCount = 5;

struct Region {
  Piece piece = Piece::G1;
  Half half = Half::Right;

  friend auto operator<=>(const Region&, const Region&) = default;
};

[[nodiscard]] std::string_view to_string(Piece piece);
[[nodiscard]] std::string_view to_string(Half half);
/// "G1/right", "G5/left", ...
[[nodiscard]] std::string to_string(Region region);

/// Classifies a point with x >= 0 (the sign of x is ignored). Boundary ties
/// resolve in the order G1 > G2 > G3 > G4 > G5.
[[nodiscard]] Piece classify_piece(const Trapezoid& t, PlanePoint p);

/// Full-plane classification: the piece of (|x|, y) and the half containing x
/// (x = 0 and x = -0 belong to the right half).
[[nodiscard]] Region classify_region(const Trapezoid& t, PlanePoint p);

/// Euclidean distance from p to the nearest seam of the decomposition,
/// including the imaginary axis.
[[nodiscard]] double seam_distance(const Trapezoid& t, PlanePoint p);

/// Axis-aligned rectangle [x_min, x_max] x [y_min, y_max].
struct Window {
  double x_min = 0.0;
  double x_max = 1.0;
  double y_min = 0.0;
  double y_max = 1.0;

  [[nodiscard]] double width() const { return x_max - x_min; }
  [[nodiscard]] double height() const { return y_max - y_min; }
};

/// Throws DomainError for empty, inverted or non-finite windows.
void validate(const Window& w);

/// [0, 3d] x [-2, 3]: right half-plane window used to truncate unbounded seams.
[[nodiscard]] Window right_half_window(const Trapezoid& t);
/// [-3d, 3d] x [-2, 3]: shows all five pieces in both halves.
[[nodiscard]] Window default_window(const Trapezoid& t);

}  // namespace qrtrap
