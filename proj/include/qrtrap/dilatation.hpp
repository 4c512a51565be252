#pragma once

#include <array>
#include <complex>
#include <vector>

#include "qrtrap/geometry.hpp"

namespace qrtrap {

/// Complex partial derivatives f_z = (f_x - i f_y) / 2, f_zbar = (f_x + i f_y) / 2.
struct WirtingerPair {
  std::complex<double> fz;
  std::complex<double> fzbar;
};

/// Closed-form derivatives of the branch of `region`, evaluated at p.
[[nodiscard]] WirtingerPair branch_wirtinger(const Trapezoid& t, Region region, PlanePoint p);

/// Closed-form derivatives of the piecewise map; seam points use the
/// classifier's branch.
[[nodiscard]] WirtingerPair wirtinger_analytic(const Trapezoid& t, PlanePoint p);

inline constexpr double kDefaultStep = 1e-5;

/// Central differences on the stencil {p +- h, p +- ih}. Throws
/// StencilStraddlesSeam if any stencil point leaves the region of p.
[[nodiscard]] WirtingerPair wirtinger_fd(const Trapezoid& t, PlanePoint p, double h = kDefaultStep);

/// (|f_z| + |f_zbar|) / (|f_z| - |f_zbar|). Throws DegenerateJacobian when
/// |f_z| <= |f_zbar|.
[[nodiscard]] double dilatation_at(const WirtingerPair& pair);

/// |f_zbar / f_z|, the modulus of the Beltrami coefficient.
[[nodiscard]] double beltrami_modulus(const WirtingerPair& pair);

/// Majorant of the dilatation on a piece:
///   G1  (sqrt((2 - l)^2 + l^2 d^2) + l sqrt(1 + d^2))^2 / (4 (1 - l))
///   G2  ((d - c) + sqrt((d - c)^2 + 4))^2 / 4
///   G3  1 / (1 - l)
///   G4, G5  1
/// Mirror regions share the bound of their right-half counterpart.
[[nodiscard]] double region_bound(const Trapezoid& t, Piece piece);
[[nodiscard]] double region_bound(const Trapezoid& t, Region region);

/// Quasiconformality coefficient of the whole map, which is the G1 majorant.
[[nodiscard]] double global_K(const Trapezoid& t);

/// The same coefficient written in c, d and cot(pi alpha):
/// (sqrt((d + c)^2 + d^2 cot^2) + cot sqrt(1 + d^2))^2 / (4 c d).
[[nodiscard]] double global_K_from_bases(const Trapezoid& t);

struct DilatationSample {
  PlanePoint point;
  Region region;
  double dilatation;
};

struct RegionMaximum {
  double value = 0.0;  // 0 when the region received no samples
  PlanePoint at;
  long count = 0;
};

struct DilatationField {
  std::vector<DilatationSample> samples;  // filled only when requested
  std::array<RegionMaximum, 2 * kPieceCount> max_per_region;

  [[nodiscard]] const RegionMaximum& max_of(Region r) const;
};

[[nodiscard]] int region_index(Region r);
[[nodiscard]] Region region_from_index(int index);

/// Dilatation sampled on the (resolution + 1)^2 lattice nodes spanning `window`,
/// using analytic derivatives. Throws DomainError for resolution < 8 or a
/// degenerate window.
[[nodiscard]] DilatationField grid_max(const Trapezoid& t, int resolution, const Window& window,
                                       bool keep_samples = false);

}  // namespace qrtrap
