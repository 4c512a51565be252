#include "qrtrap/dilatation.hpp"

#include <cmath>

#include <fmt/format.h>

#include "qrtrap/error.hpp"
#include "qrtrap/qcmap.hpp"

namespace qrtrap {
namespace {

using namespace std::complex_literals;

WirtingerPair right_wirtinger(const Trapezoid& t, Piece piece, PlanePoint p) {
  const double l = t.ell();
  switch (piece) {
    case Piece::G1: {
      const double s = 1.0 - l * p.y;
      const double shear = l * p.x / (s * s);
      return {0.5 * ((2.0 - l * p.y) / s - 1i * shear), 0.5 * (l * p.y / s + 1i * shear)};
    }
    case Piece::G2:
      return {0.5 * (2.0 - 1i * t.shift()), 0.5i * t.shift()};
    case Piece::G3:
      return {0.5 * (1.0 / (1.0 - l) + 1.0), std::complex<double>(0.5 * l / (1.0 - l))};
    case Piece::G4:
    case Piece::G5:
      return {1.0, 0.0};
  }
  return {1.0, 0.0};
}

}  // namespace

WirtingerPair branch_wirtinger(const Trapezoid& t, Region region, PlanePoint p) {
  if (region.half == Half::Left) {
    // F(z) = -conj(g(-conj z)) gives F_z = conj(g_z), F_zbar = conj(g_zbar) at -conj z.
    const WirtingerPair g = right_wirtinger(t, region.piece, {-p.x, p.y});
    return {std::conj(g.fz), std::conj(g.fzbar)};
  }
  return right_wirtinger(t, region.piece, p);
}

WirtingerPair wirtinger_analytic(const Trapezoid& t, PlanePoint p) {
  return branch_wirtinger(t, classify_region(t, p), p);
}

WirtingerPair wirtinger_fd(const Trapezoid& t, PlanePoint p, double h) {
  if (!(h > 0.0) || !std::isfinite(h)) {
    throw DomainError(fmt::format("finite-difference step must be positive, got {}", h));
  }
  const Region region = classify_region(t, p);
  const std::array<PlanePoint, 4> stencil{
      {{p.x + h, p.y}, {p.x - h, p.y}, {p.x, p.y + h}, {p.x, p.y - h}}};
  std::array<std::complex<double>, 4> values;
  for (std::size_t k = 0; k < stencil.size(); ++k) {
    const MapEvaluation e = forward(t, stencil[k]);
    if (e.region != region) {
      throw StencilStraddlesSeam(fmt::format("stencil at ({}, {}) with h={} leaves {}", p.x, p.y, h,
                                             to_string(region)));
    }
    values[k] = e.output.complex();
  }
  const std::complex<double> fx = (values[0] - values[1]) / (2.0 * h);
  const std::complex<double> fy = (values[2] - values[3]) / (2.0 * h);
  return {0.5 * (fx - 1i * fy), 0.5 * (fx + 1i * fy)};
}

double dilatation_at(const WirtingerPair& pair) {
  const double a = std::abs(pair.fz);
  const double b = std::abs(pair.fzbar);
  if (!(a > b)) {
    throw DegenerateJacobian(fmt::format("|f_z|={} does not exceed |f_zbar|={}", a, b));
  }
  return (a + b) / (a - b);
}

double beltrami_modulus(const WirtingerPair& pair) {
  return std::abs(pair.fzbar) / std::abs(pair.fz);
}

double region_bound(const Trapezoid& t, Piece piece) {
  const double l = t.ell();
  const double d = t.d();
  switch (piece) {
    case Piece::G1: {
      const double s = std::sqrt((2.0 - l) * (2.0 - l) + l * l * d * d) + l * std::sqrt(1.0 + d * d);
      return s * s / (4.0 * (1.0 - l));
    }
    case Piece::G2: {
      const double k = t.shift();
      const double s = k + std::sqrt(k * k + 4.0);
      return s * s / 4.0;
    }
    case Piece::G3:
      return 1.0 / (1.0 - l);
    case Piece::G4:
    case Piece::G5:
      return 1.0;
  }
  return 1.0;
}

double region_bound(const Trapezoid& t, Region region) { return region_bound(t, region.piece); }

double global_K(const Trapezoid& t) { return region_bound(t, Piece::G1); }

double global_K_from_bases(const Trapezoid& t) {
  const double c = t.c();
  const double d = t.d();
  const double cot = cot_pi(t.alpha());
  const double s = std::sqrt((d + c) * (d + c) + d * d * cot * cot) + cot * std::sqrt(1.0 + d * d);
  return s * s / (4.0 * c * d);
}

int region_index(Region r) {
  return static_cast<int>(r.piece) + (r.half == Half::Left ? kPieceCount : 0);
}

Region region_from_index(int index) {
  return {static_cast<Piece>(index % kPieceCount), index < kPieceCount ? Half::Right : Half::Left};
}

const RegionMaximum& DilatationField::max_of(Region r) const {
  return max_per_region[static_cast<std::size_t>(region_index(r))];
}

DilatationField grid_max(const Trapezoid& t, int resolution, const Window& window,
                         bool keep_samples) {
  if (resolution < 8) {
    throw DomainError(fmt::format("grid resolution must be at least 8, got {}", resolution));
  }
  validate(window);
  DilatationField field;
  if (keep_samples) {
    field.samples.reserve(static_cast<std::size_t>(resolution + 1) * (resolution + 1));
  }
  for (int j = 0; j <= resolution; ++j) {
    const double y = window.y_min + window.height() * j / resolution;
    for (int i = 0; i <= resolution; ++i) {
      const double x = window.x_min + window.width() * i / resolution;
      const PlanePoint p{x, y};
      const Region region = classify_region(t, p);
      const double k = dilatation_at(branch_wirtinger(t, region, p));
      RegionMaximum& m = field.max_per_region[static_cast<std::size_t>(region_index(region))];
      if (m.count == 0 || k > m.value) {
        m.value = k;
        m.at = p;
      }
      ++m.count;
      if (keep_samples) {
        field.samples.push_back({p, region, k});
      }
    }
  }
  return field;
}

}  // namespace qrtrap
