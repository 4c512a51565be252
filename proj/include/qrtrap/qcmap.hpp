#pragma once

#include <complex>
#include <string_view>
#include <vector>

#include "qrtrap/geometry.hpp"

namespace qrtrap {

struct MapEvaluation {
  PlanePoint input;
  PlanePoint output;
  Region region;
};

// Branch formulas of the piecewise map, for a point with x >= 0:
//   G1  (x, y) -> (x / (1 - l y), y)
//   G2  (x, y) -> (x + (d - c) y, y)
//   G3  (x, y) -> (x / (1 - l), y)
//   G4  (x, y) -> (x + (d - c), y)
//   G5  identity
// Left-half regions use the mirror extension f(z) = -conj(f(-conj z)).
// The formula of `region` is applied whether or not p lies in it, which is
// what seam continuity checks need.
[[nodiscard]] PlanePoint branch_forward(const Trapezoid& t, Region region, PlanePoint p);

/// Algebraic inverse of branch_forward for the image of `region`.
[[nodiscard]] PlanePoint branch_inverse(const Trapezoid& t, Region region, PlanePoint w);

/// Piecewise map of the plane taking the trapezoid onto [-d, d] x [0, 1].
[[nodiscard]] MapEvaluation forward(const Trapezoid& t, PlanePoint p);

/// Complex form of the G1 branch, (4z + i l (z - zbar)^2) / (4 + 2 i l (z - zbar)).
/// Kept as an independent cross-check of the real form.
[[nodiscard]] std::complex<double> forward_g1_complex(const Trapezoid& t, std::complex<double> z);

/// Image-side decomposition: G~1 = [0, d] x [0, 1], G~2 = {0 <= v <= 1, u > d},
/// G~3 = {v > 1, 0 <= u <= d}, G~4 = {v > 1, u > d}, G~5 = {v < 0}, mirrored for u < 0.
[[nodiscard]] Region classify_image(const Trapezoid& t, PlanePoint w);

/// Inverse of forward; the region reported is that of the preimage.
[[nodiscard]] MapEvaluation inverse(const Trapezoid& t, PlanePoint w);

/// Same construction for a parallelogram centred at i/2. The right half is a
/// rectangular trapezoid with its bigger base half_d on top; it is handled by
/// flipping y -> 1 - y, applying forward for T(alpha, half_d) and flipping back.
/// The left half is the central reflection i - f(i - p). The reported region is
/// the piece in flipped coordinates, with the half of p.
[[nodiscard]] MapEvaluation forward_parallelogram(const Parallelogram& pg, PlanePoint p);

/// The trapezoid matching the flipped right half of a parallelogram.
[[nodiscard]] Trapezoid half_trapezoid(const Parallelogram& pg);

struct SeamSample {
  PlanePoint point;
  Region first;
  Region second;
  std::string_view seam;
};

/// n points on every seam, both halves, plus the imaginary axis. Unbounded
/// seams are truncated to `window` (x taken as |x|). n == 2 yields the
/// endpoints of each seam segment. Throws DomainError for n < 2.
[[nodiscard]] std::vector<SeamSample> seam_samples(const Trapezoid& t, int n, const Window& window);
[[nodiscard]] std::vector<SeamSample> seam_samples(const Trapezoid& t, int n);

}  // namespace qrtrap
