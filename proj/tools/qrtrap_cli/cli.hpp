#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qrtrap/bounds.hpp"
#include "qrtrap/geometry.hpp"

namespace qrtrap::cli {

// Exit codes are part of the command-line contract.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

inline constexpr int kReportSchemaVersion = 1;

enum class Format { Text, Csv, Json, Svg };

struct CheckResult {
  std::string name;
  bool passed = false;
  double value = 0.0;      // observed worst case
  double limit = 0.0;      // value must not exceed this
  double tolerance = 0.0;  // tolerance that produced `limit`
  long samples = 0;
  std::string detail;

  [[nodiscard]] static CheckResult named(std::string name) {
    CheckResult r;
    r.name = std::move(name);
    return r;
  }
  [[nodiscard]] double margin() const { return limit - value; }
};

struct VerifyOptions {
  int resolution = 512;
  double bound_slack = 1e-9;
  double seam_tol = 1e-12;
  double fd_step = 1e-5;
  double fd_tol = 1e-6;
  double approach_tol = 0.01;
  double round_trip_tol = 1e-12;
  double complex_form_tol = 1e-12;
  int seam_points = 100;
  int fd_points_per_region = 1000;
  int round_trip_points = 10000;
  unsigned long long seed = 0x5eed2024ULL;
};

/// Runs the map and dilatation invariants for one trapezoid. Deterministic
/// for a given seed.
[[nodiscard]] std::vector<CheckResult> run_verification(const Trapezoid& t,
                                                        const VerifyOptions& options);

struct SvgOptions {
  int lines = 24;             // grid lines per axis
  int samples_per_segment = 64;
  std::optional<Window> window;  // defaults to default_window(t)
};

/// Image of a Cartesian grid under the piecewise map, as an SVG 1.1 document.
[[nodiscard]] std::string render_grid_svg(const Trapezoid& t, const SvgOptions& options);

/// CSV with header c,d,lower,upper_tau,upper_new and 17 significant digits.
[[nodiscard]] std::string scan_csv(const std::vector<ScanRow>& rows);

/// Parses argv, dispatches one subcommand and returns the exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qrtrap::cli
