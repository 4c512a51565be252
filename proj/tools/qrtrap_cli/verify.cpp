#include <algorithm>
#include <cmath>
#include <random>

#include <fmt/format.h>

#include "cli.hpp"
#include "qrtrap/dilatation.hpp"
#include "qrtrap/qcmap.hpp"

namespace qrtrap::cli {
namespace {

double scaled_error(PlanePoint a, PlanePoint b) {
  const double scale = std::max({1.0, std::abs(b.x), std::abs(b.y)});
  return std::max(std::abs(a.x - b.x), std::abs(a.y - b.y)) / scale;
}

CheckResult finish(CheckResult r) {
  r.passed = r.value <= r.limit;
  return r;
}

CheckResult seam_continuity(const Trapezoid& t, const VerifyOptions& o) {
  CheckResult r = CheckResult::named("seam_continuity");
  r.tolerance = o.seam_tol;
  r.limit = o.seam_tol;
  for (const SeamSample& s : seam_samples(t, o.seam_points)) {
    const PlanePoint a = branch_forward(t, s.first, s.point);
    const PlanePoint b = branch_forward(t, s.second, s.point);
    const double diff = std::max(std::abs(a.x - b.x), std::abs(a.y - b.y));
    if (diff > r.value) {
      r.value = diff;
      r.detail = fmt::format("worst on {} at ({}, {})", s.seam, s.point.x, s.point.y);
    }
    ++r.samples;
  }
  return finish(r);
}

CheckResult complex_form(const Trapezoid& t, const VerifyOptions& o, std::mt19937_64& rng) {
  CheckResult r = CheckResult::named("g1_complex_form");
  r.tolerance = o.complex_form_tol;
  r.limit = o.complex_form_tol;
  std::uniform_real_distribution<double> uy(0.0, 1.0);
  std::uniform_real_distribution<double> us(0.0, 1.0);
  for (int i = 0; i < o.fd_points_per_region; ++i) {
    const double y = uy(rng);
    const PlanePoint p{us(rng) * t.d() * (1.0 - t.ell() * y), y};
    const std::complex<double> w = forward_g1_complex(t, p.complex());
    const PlanePoint real = branch_forward(t, {Piece::G1, Half::Right}, p);
    r.value = std::max(r.value, std::abs(w - real.complex()));
    ++r.samples;
  }
  return finish(r);
}

CheckResult fd_agreement(const Trapezoid& t, const VerifyOptions& o, std::mt19937_64& rng) {
  CheckResult r = CheckResult::named("fd_vs_analytic");
  r.tolerance = o.fd_tol;
  r.limit = o.fd_tol;
  const Window w = right_half_window(t);
  std::uniform_real_distribution<double> ux(w.x_min, w.x_max);
  std::uniform_real_distribution<double> uy(w.y_min, w.y_max);
  const double margin = 4.0 * o.fd_step;
  for (int index = 0; index < 2 * kPieceCount; ++index) {
    const Region region = region_from_index(index);
    const double sign = region.half == Half::Left ? -1.0 : 1.0;
    int accepted = 0;
    for (long tries = 0; accepted < o.fd_points_per_region && tries < 1000L * o.fd_points_per_region;
         ++tries) {
      const PlanePoint p{sign * ux(rng), uy(rng)};
      if (classify_region(t, p) != region || seam_distance(t, p) < margin) {
        continue;
      }
      const WirtingerPair exact = wirtinger_analytic(t, p);
      const WirtingerPair approx = wirtinger_fd(t, p, o.fd_step);
      const double scale = std::abs(exact.fz);
      const double err =
          std::max(std::abs(exact.fz - approx.fz), std::abs(exact.fzbar - approx.fzbar)) / scale;
      if (err > r.value) {
        r.value = err;
        r.detail = fmt::format("worst in {} at ({}, {})", to_string(region), p.x, p.y);
      }
      ++accepted;
      ++r.samples;
    }
  }
  return finish(r);
}

std::vector<CheckResult> grid_checks(const Trapezoid& t, const VerifyOptions& o) {
  const Window right = right_half_window(t);
  const Window left{-right.x_max, -right.x_min, right.y_min, right.y_max};
  const DilatationField fr = grid_max(t, o.resolution, right);
  const DilatationField fl = grid_max(t, o.resolution, left);

  CheckResult bounds = CheckResult::named("grid_max_within_region_bounds");
  bounds.tolerance = o.bound_slack;
  // Reported as the largest excess over the bound; limit is the slack.
  bounds.value = -1e300;
  bounds.limit = o.bound_slack;
  for (int index = 0; index < 2 * kPieceCount; ++index) {
    const Region region = region_from_index(index);
    const RegionMaximum& m = (region.half == Half::Left ? fl : fr).max_of(region);
    if (m.count == 0) {
      continue;
    }
    const double excess = m.value - region_bound(t, region);
    if (excess > bounds.value) {
      bounds.value = excess;
      bounds.detail = fmt::format("tightest in {}", to_string(region));
    }
    bounds.samples += m.count;
  }

  CheckResult approach = CheckResult::named("g1_grid_max_approaches_bound");
  approach.tolerance = o.approach_tol;
  approach.limit = o.approach_tol;
  const RegionMaximum& g1 = fr.max_of({Piece::G1, Half::Right});
  const double bound = global_K(t);
  approach.value = (bound - g1.value) / bound;
  approach.samples = g1.count;
  approach.detail = fmt::format("grid max {} at ({}, {}), bound {}", g1.value, g1.at.x, g1.at.y, bound);
  return {finish(bounds), finish(approach)};
}

CheckResult round_trip(const Trapezoid& t, const VerifyOptions& o, std::mt19937_64& rng) {
  CheckResult r = CheckResult::named("round_trip");
  r.tolerance = o.round_trip_tol;
  r.limit = o.round_trip_tol;
  const Window w = default_window(t);
  std::uniform_real_distribution<double> ux(w.x_min, w.x_max);
  std::uniform_real_distribution<double> uy(w.y_min, w.y_max);
  for (int i = 0; i < o.round_trip_points; ++i) {
    const PlanePoint p{ux(rng), uy(rng)};
    const double back = scaled_error(inverse(t, forward(t, p).output).output, p);
    const double there = scaled_error(forward(t, inverse(t, p).output).output, p);
    r.value = std::max({r.value, back, there});
    r.samples += 2;
  }
  return finish(r);
}

}  // namespace

std::vector<CheckResult> run_verification(const Trapezoid& t, const VerifyOptions& options) {
  std::mt19937_64 rng(options.seed);
  std::vector<CheckResult> out;
  out.push_back(seam_continuity(t, options));
  out.push_back(fd_agreement(t, options, rng));
  for (CheckResult& r : grid_checks(t, options)) {
    out.push_back(std::move(r));
  }
  out.push_back(round_trip(t, options, rng));
  out.push_back(complex_form(t, options, rng));
  return out;
}

}  // namespace qrtrap::cli
