#include "qrtrap/qcmap.hpp"

#include <algorithm>
#include <cmath>

#include "qrtrap/error.hpp"

namespace qrtrap {
namespace {

PlanePoint mirror(PlanePoint p) { return {-p.x, p.y}; }

PlanePoint right_forward(const Trapezoid& t, Piece piece, PlanePoint p) {
  const double l = t.ell();
  switch (piece) {
    case Piece::G1: return {p.x / (1.0 - l * p.y), p.y};
    case Piece::G2: return {p.x + t.shift() * p.y, p.y};
    case Piece::G3: return {p.x / (1.0 - l), p.y};
    case Piece::G4: return {p.x + t.shift(), p.y};
    case Piece::G5: return p;
  }
  return p;
}

PlanePoint right_inverse(const Trapezoid& t, Piece piece, PlanePoint w) {
  const double l = t.ell();
  switch (piece) {
    case Piece::G1: return {w.x * (1.0 - l * w.y), w.y};
    case Piece::G2: return {w.x - t.shift() * w.y, w.y};
    case Piece::G3: return {w.x * (1.0 - l), w.y};
    case Piece::G4: return {w.x - t.shift(), w.y};
    case Piece::G5: return w;
  }
  return w;
}

Piece classify_image_piece(const Trapezoid& t, PlanePoint w) {
  const double u = std::abs(w.x);
  if (w.y >= 0.0 && w.y <= 1.0) {
    return u <= t.d() ? Piece::G1 : Piece::G2;
  }
  if (w.y > 1.0) {
    return u <= t.d() ? Piece::G3 : Piece::G4;
  }
  return Piece::G5;
}

}  // namespace

PlanePoint branch_forward(const Trapezoid& t, Region region, PlanePoint p) {
  if (region.half == Half::Left) {
    return mirror(right_forward(t, region.piece, mirror(p)));
  }
  return right_forward(t, region.piece, p);
}

PlanePoint branch_inverse(const Trapezoid& t, Region region, PlanePoint w) {
  if (region.half == Half::Left) {
    return mirror(right_inverse(t, region.piece, mirror(w)));
  }
  return right_inverse(t, region.piece, w);
}

MapEvaluation forward(const Trapezoid& t, PlanePoint p) {
  const Region region = classify_region(t, p);
  return {p, branch_forward(t, region, p), region};
}

std::complex<double> forward_g1_complex(const Trapezoid& t, std::complex<double> z) {
  using namespace std::complex_literals;
  const std::complex<double> two_iy = z - std::conj(z);
  const double l = t.ell();
  return (4.0 * z + 1i * l * two_iy * two_iy) / (4.0 + 2i * l * two_iy);
}

Region classify_image(const Trapezoid& t, PlanePoint w) {
  require_finite(w, "image point");
  return {classify_image_piece(t, w), w.x < 0.0 ? Half::Left : Half::Right};
}

MapEvaluation inverse(const Trapezoid& t, PlanePoint w) {
  const Region image = classify_image(t, w);
  const PlanePoint p = branch_inverse(t, image, w);
  // The preimage of G~k lies in the closure of G_k; report the classifier's
  // verdict so ties follow the same precedence as forward.
  return {w, p, classify_region(t, p)};
}

Trapezoid half_trapezoid(const Parallelogram& pg) {
  return make_trapezoid(pg.alpha(), pg.half_d());
}

MapEvaluation forward_parallelogram(const Parallelogram& pg, PlanePoint p) {
  require_finite(p, "point");
  const Trapezoid t = half_trapezoid(pg);
  if (p.x < 0.0) {
    // i - F(i - p), with F on the right half written out: the vertical flips cancel.
    const MapEvaluation e = forward(t, mirror(p));
    return {p, mirror(e.output), {e.region.piece, Half::Left}};
  }
  const MapEvaluation e = forward(t, {p.x, 1.0 - p.y});
  return {p, {e.output.x, 1.0 - e.output.y}, {e.region.piece, Half::Right}};
}

namespace {

void sample_segment(std::vector<SeamSample>& out, int n, PlanePoint a, PlanePoint b, Piece first,
                    Piece second, std::string_view name) {
  for (int i = 0; i < n; ++i) {
    const double s = static_cast<double>(i) / (n - 1);
    const PlanePoint p{a.x + s * (b.x - a.x), a.y + s * (b.y - a.y)};
    out.push_back({p, {first, Half::Right}, {second, Half::Right}, name});
  }
}

}  // namespace

std::vector<SeamSample> seam_samples(const Trapezoid& t, int n, const Window& window) {
  if (n < 2) {
    throw DomainError("seam_samples needs n >= 2");
  }
  validate(window);
  const double x_far = std::max({std::abs(window.x_min), std::abs(window.x_max), 1.5 * t.d()});
  const double y_low = std::min(window.y_min, -1.0);
  const double y_high = std::max(window.y_max, 2.0);
  const double c = t.c();
  const double d = t.d();

  std::vector<SeamSample> right;
  sample_segment(right, n, {d, 0.0}, {c, 1.0}, Piece::G1, Piece::G2, "slant");
  sample_segment(right, n, {0.0, 1.0}, {c, 1.0}, Piece::G1, Piece::G3, "top-inner");
  sample_segment(right, n, {c, 1.0}, {x_far, 1.0}, Piece::G2, Piece::G4, "top-outer");
  sample_segment(right, n, {c, 1.0}, {c, y_high}, Piece::G3, Piece::G4, "riser");
  sample_segment(right, n, {0.0, 0.0}, {d, 0.0}, Piece::G1, Piece::G5, "bottom-inner");
  sample_segment(right, n, {d, 0.0}, {x_far, 0.0}, Piece::G2, Piece::G5, "bottom-outer");

  std::vector<SeamSample> out = right;
  for (SeamSample s : right) {
    s.point = mirror(s.point);
    s.first.half = Half::Left;
    s.second.half = Half::Left;
    out.push_back(s);
  }
  for (int i = 0; i < n; ++i) {
    const double s = static_cast<double>(i) / (n - 1);
    const PlanePoint p{0.0, y_low + s * (y_high - y_low)};
    const Piece piece = classify_piece(t, p);
    out.push_back({p, {piece, Half::Right}, {piece, Half::Left}, "axis"});
  }
  return out;
}

std::vector<SeamSample> seam_samples(const Trapezoid& t, int n) {
  return seam_samples(t, n, right_half_window(t));
}

}  // namespace qrtrap
