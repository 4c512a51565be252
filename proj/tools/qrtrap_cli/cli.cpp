#include "cli.hpp"

#include <cmath>
#include <fstream>
#include <functional>
#include <numbers>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <json.hpp>

#include "qrtrap/dilatation.hpp"
#include "qrtrap/elliptic.hpp"
#include "qrtrap/error.hpp"
#include "qrtrap/qcmap.hpp"

namespace qrtrap::cli {
namespace {

using nlohmann::json;

// Relative tolerance used to cross-validate closed forms inside reports.
constexpr double kIdentityTol = 1e-9;
constexpr double kLambda0Tol = 1e-10;

class IoError : public Error {
 public:
  using Error::Error;
};

json named(std::string_view name, double value, double tolerance) {
  return {{"name", name}, {"value", value}, {"tolerance", tolerance}};
}

json check_json(const CheckResult& c) {
  return {{"name", c.name},       {"passed", c.passed},   {"value", c.value},
          {"limit", c.limit},     {"margin", c.margin()}, {"tolerance", c.tolerance},
          {"samples", c.samples}, {"detail", c.detail}};
}

json report(std::string_view command, json config, json results, json checks) {
  return {{"schema_version", kReportSchemaVersion},
          {"command", command},
          {"config", std::move(config)},
          {"results", std::move(results)},
          {"checks", std::move(checks)}};
}

CheckResult relative_identity(std::string name, double a, double b, double tol) {
  CheckResult c = CheckResult::named(std::move(name));
  c.value = std::abs(a - b) / std::max(std::abs(a), std::abs(b));
  c.limit = tol;
  c.tolerance = tol;
  c.samples = 1;
  c.passed = c.value <= c.limit;
  return c;
}

CheckResult ordering(std::string name, double lower, double upper) {
  CheckResult c = CheckResult::named(std::move(name));
  c.value = lower;
  c.limit = upper;
  c.samples = 1;
  c.passed = lower <= upper;
  return c;
}

std::string g(double v) { return fmt::format("{:.12g}", v); }

void emit(const std::string& text, const std::string& out_path, std::ostream& out) {
  if (out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(out_path, std::ios::binary);
  if (!file) {
    throw IoError(fmt::format("cannot open output file '{}'", out_path));
  }
  file << text;
  if (!file) {
    throw IoError(fmt::format("failed writing output file '{}'", out_path));
  }
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

struct Params {
  double alpha = 0.0;
  std::optional<double> d;
  std::optional<double> a;
  bool parallelogram = false;
  double x = 0.0;
  double y = 0.0;
  bool inverse = false;
  int resolution = 512;
  double tol = 1e-9;
  double c_min = 0.1;
  double c_max = 10.0;
  int n = 200;
  int lines = 24;
  bool log_spacing = false;
  std::optional<double> x_min, x_max, y_min, y_max;
  std::string format;
  std::string out_path;
};

Trapezoid require_trapezoid(const Params& p) {
  if (!p.d) {
    throw DomainError("--d is required");
  }
  return make_trapezoid(p.alpha, *p.d);
}

int cmd_bounds(const Params& p, std::ostream& out) {
  if (!p.d && !p.parallelogram) {
    throw DomainError("bounds needs --d, or --parallelogram with --a");
  }
  json config = json::array({named("alpha", p.alpha, 0.0)});
  json results = json::array();
  json checks = json::array();
  std::vector<CheckResult> all_checks;
  std::string text;

  if (p.d) {
    const Trapezoid t = make_trapezoid(p.alpha, *p.d);
    const BoundsReport r = bounds_report(t);
    config.push_back(named("d", t.d(), 0.0));
    results.push_back(named("c", t.c(), 0.0));
    results.push_back(named("ell", t.ell(), 0.0));
    results.push_back(named("lower", r.lower, kLambda0Tol));
    results.push_back({{"name", "branch"}, {"value", to_string(r.branch)}});
    results.push_back(named("lambda0", lambda0(), kLambda0Tol));
    results.push_back(named("upper_tau", r.upper_tau, 0.0));
    results.push_back(named("tau", r.tau, 0.0));
    results.push_back(named("upper_new", r.upper_new, kIdentityTol));
    results.push_back(named("K_tilde", r.K_tilde, kIdentityTol));
    results.push_back(named("C1_alpha", asymptotic_slope(t.alpha()), 0.0));
    all_checks.push_back(ordering("lower<=upper_tau", r.lower, r.upper_tau));
    all_checks.push_back(ordering("lower<=upper_new", r.lower, r.upper_new));
    all_checks.push_back(relative_identity("upper_new==K_tilde^2*2pi*d", r.upper_new,
                                           r.K_tilde * r.K_tilde * rectangle_reflection_coefficient(t.d()),
                                           kIdentityTol));
    text += fmt::format("trapezoid  alpha={} d={} c={} ell={}\n", g(t.alpha()), g(t.d()), g(t.c()),
                        g(t.ell()));
    text += fmt::format("lower      = {}  (branch {}, lambda0={})\n", g(r.lower), to_string(r.branch),
                        g(lambda0()));
    text += fmt::format("upper_tau  = {}\n", g(r.upper_tau));
    text += fmt::format("upper_new  = {}\n", g(r.upper_new));
    text += fmt::format("K_tilde    = {}\n", g(r.K_tilde));
    text += fmt::format("tau        = {}\n", g(r.tau));
  }
  if (p.parallelogram) {
    if (!p.a) {
      throw DomainError("--parallelogram needs --a");
    }
    const Parallelogram pg = make_parallelogram(p.alpha, *p.a);
    const double value = upper_bound_parallelogram(pg);
    const double via_half = upper_bound_new(pg.half_c(), pg.half_d());
    config.push_back(named("a", pg.a(), 0.0));
    results.push_back(named("half_c", pg.half_c(), 0.0));
    results.push_back(named("half_d", pg.half_d(), 0.0));
    results.push_back(named("upper_parallelogram", value, kIdentityTol));
    all_checks.push_back(relative_identity("parallelogram==upper_new(half_c,half_d)", value, via_half,
                                           kIdentityTol));
    text += fmt::format("parallelogram alpha={} a={} half_c={} half_d={}\n", g(pg.alpha()), g(pg.a()),
                        g(pg.half_c()), g(pg.half_d()));
    text += fmt::format("upper_parallelogram = {}\n", g(value));
  }

  bool ok = true;
  for (const CheckResult& c : all_checks) {
    ok = ok && c.passed;
    checks.push_back(check_json(c));
  }
  if (p.format == "json") {
    out << dump(report("bounds", config, results, checks));
  } else {
    out << text;
  }
  return ok ? kExitOk : kExitCheckFailed;
}

int cmd_map(const Params& p, std::ostream& out) {
  const PlanePoint point{p.x, p.y};
  require_finite(point, "--x/--y");
  MapEvaluation e;
  double k = 1.0;
  json config = json::array({named("alpha", p.alpha, 0.0), named("x", p.x, 0.0), named("y", p.y, 0.0)});
  if (p.parallelogram) {
    if (!p.a) {
      throw DomainError("--parallelogram needs --a");
    }
    if (p.inverse) {
      throw DomainError("--inverse is only available for trapezoids");
    }
    const Parallelogram pg = make_parallelogram(p.alpha, *p.a);
    e = forward_parallelogram(pg, point);
    k = region_bound(half_trapezoid(pg), e.region);
    config.push_back(named("a", pg.a(), 0.0));
  } else {
    const Trapezoid t = require_trapezoid(p);
    config.push_back(named("d", t.d(), 0.0));
    if (p.inverse) {
      e = inverse(t, point);
      k = dilatation_at(wirtinger_analytic(t, e.output));
    } else {
      e = forward(t, point);
      k = dilatation_at(wirtinger_analytic(t, point));
    }
  }
  if (p.format == "json") {
    json results = json::array({named("u", e.output.x, 0.0), named("v", e.output.y, 0.0),
                                named("dilatation", k, 0.0)});
    results.push_back({{"name", "region"}, {"value", to_string(e.region)}});
    out << dump(report(p.inverse ? "map-inverse" : "map", config, results, json::array()));
  } else {
    out << fmt::format("{} ({}, {}) -> ({}, {})  region={} dilatation={}\n",
                       p.inverse ? "inverse" : "forward", g(point.x), g(point.y), g(e.output.x),
                       g(e.output.y), to_string(e.region), g(k));
  }
  return kExitOk;
}

int cmd_verify(const Params& p, std::ostream& out) {
  const Trapezoid t = require_trapezoid(p);
  VerifyOptions options;
  options.resolution = p.resolution;
  options.bound_slack = p.tol;
  const std::vector<CheckResult> results = run_verification(t, options);
  bool ok = true;
  json checks = json::array();
  std::string text = fmt::format("verify alpha={} d={} resolution={}\n", g(t.alpha()), g(t.d()),
                                 options.resolution);
  for (const CheckResult& c : results) {
    ok = ok && c.passed;
    checks.push_back(check_json(c));
    text += fmt::format("{} {:<30} value={:<12} limit={:<12} n={} {}\n", c.passed ? "PASS" : "FAIL",
                        c.name, fmt::format("{:.4g}", c.value), fmt::format("{:.4g}", c.limit),
                        c.samples, c.detail);
  }
  if (p.format == "json") {
    json config = json::array({named("alpha", t.alpha(), 0.0), named("d", t.d(), 0.0),
                               named("resolution", options.resolution, 0.0),
                               named("tol", options.bound_slack, 0.0),
                               named("fd_step", options.fd_step, 0.0)});
    json summary = json::array({{{"name", "all_passed"}, {"value", ok}}});
    out << dump(report("verify", config, summary, checks));
  } else {
    out << text;
  }
  return ok ? kExitOk : kExitCheckFailed;
}

int cmd_scan(const Params& p, std::string& text) {
  const std::vector<ScanRow> rows =
      compare_scan(p.alpha, p.c_min, p.c_max, p.n, p.log_spacing ? Spacing::Log : Spacing::Uniform);
  if (p.format == "json") {
    json config = json::array({named("alpha", p.alpha, 0.0), named("c_min", p.c_min, 0.0),
                               named("c_max", p.c_max, 0.0), named("n", p.n, 0.0)});
    config.push_back({{"name", "spacing"}, {"value", p.log_spacing ? "log" : "uniform"}});
    json results = json::array();
    for (const ScanRow& r : rows) {
      results.push_back({{"c", r.c},
                         {"d", r.d},
                         {"lower", r.lower},
                         {"upper_tau", r.upper_tau},
                         {"upper_new", r.upper_new},
                         {"tolerance", 0.0}});
    }
    text = dump(report("scan", config, results, json::array()));
  } else {
    text = scan_csv(rows);
  }
  return kExitOk;
}

int cmd_grid_svg(const Params& p, std::string& text) {
  const Trapezoid t = require_trapezoid(p);
  SvgOptions options;
  options.lines = p.lines;
  Window w = default_window(t);
  w.x_min = p.x_min.value_or(w.x_min);
  w.x_max = p.x_max.value_or(w.x_max);
  w.y_min = p.y_min.value_or(w.y_min);
  w.y_max = p.y_max.value_or(w.y_max);
  options.window = w;
  text = render_grid_svg(t, options);
  return kExitOk;
}

void add_alpha(CLI::App* sub, Params& p) {
  sub->add_option("--alpha", p.alpha, "acute base angle as a fraction of pi, in (0, 1/2]")->required();
}

void add_output(CLI::App* sub, Params& p, std::vector<std::string> formats, std::string fallback) {
  p.format = fallback;
  sub->add_option("--format", p.format, "output format")
      ->check(CLI::IsMember(std::move(formats)))
      ->capture_default_str();
  sub->add_option("--out", p.out_path, "write output to PATH instead of stdout");
}

}  // namespace

std::string scan_csv(const std::vector<ScanRow>& rows) {
  std::string s = "c,d,lower,upper_tau,upper_new\n";
  for (const ScanRow& r : rows) {
    s += fmt::format("{:.17g},{:.17g},{:.17g},{:.17g},{:.17g}\n", r.c, r.d, r.lower, r.upper_tau,
                     r.upper_new);
  }
  return s;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quasiconformal reflection bounds for isosceles trapezoids"};
  app.name("qrtrap");
  app.require_subcommand(1);

  Params bounds_p, map_p, verify_p, scan_p, svg_p;

  CLI::App* bounds = app.add_subcommand("bounds", "lower and upper bounds for QR_L");
  add_alpha(bounds, bounds_p);
  bounds->add_option("--d", bounds_p.d, "half-length of the bigger base");
  bounds->add_flag("--parallelogram", bounds_p.parallelogram, "report the parallelogram bound");
  bounds->add_option("--a", bounds_p.a, "parallelogram side length");
  add_output(bounds, bounds_p, {"text", "json"}, "text");

  CLI::App* map = app.add_subcommand("map", "evaluate the trapezoid-to-rectangle map at a point");
  add_alpha(map, map_p);
  map->add_option("--d", map_p.d, "half-length of the bigger base");
  map->add_flag("--parallelogram", map_p.parallelogram, "use the parallelogram map");
  map->add_option("--a", map_p.a, "parallelogram side length");
  map->add_option("--x", map_p.x, "x coordinate")->required();
  map->add_option("--y", map_p.y, "y coordinate")->required();
  map->add_flag("--inverse", map_p.inverse, "evaluate the inverse map");
  add_output(map, map_p, {"text", "json"}, "text");

  CLI::App* verify = app.add_subcommand("verify", "numerically verify the map and its dilatation bounds");
  add_alpha(verify, verify_p);
  verify->add_option("--d", verify_p.d, "half-length of the bigger base")->required();
  verify->add_option("--resolution", verify_p.resolution, "grid intervals per axis")->capture_default_str();
  verify->add_option("--tol", verify_p.tol, "slack when comparing grid maxima with bounds")
      ->capture_default_str();
  add_output(verify, verify_p, {"text", "json"}, "text");

  CLI::App* scan = app.add_subcommand("scan", "tabulate the bounds along the smaller base length c");
  add_alpha(scan, scan_p);
  scan->add_option("--c-min", scan_p.c_min, "smallest c")->capture_default_str();
  scan->add_option("--c-max", scan_p.c_max, "largest c")->capture_default_str();
  scan->add_option("--n", scan_p.n, "number of rows")->capture_default_str();
  scan->add_flag("--log-spacing", scan_p.log_spacing, "geometric spacing in c");
  add_output(scan, scan_p, {"csv", "json"}, "csv");

  CLI::App* svg = app.add_subcommand("grid-svg", "render the image of a Cartesian grid as SVG");
  add_alpha(svg, svg_p);
  svg->add_option("--d", svg_p.d, "half-length of the bigger base")->required();
  svg->add_option("--n", svg_p.lines, "grid lines per axis")->capture_default_str();
  svg->add_option("--x-min", svg_p.x_min, "window left edge (default -3d)");
  svg->add_option("--x-max", svg_p.x_max, "window right edge (default 3d)");
  svg->add_option("--y-min", svg_p.y_min, "window bottom edge (default -2)");
  svg->add_option("--y-max", svg_p.y_max, "window top edge (default 3)");
  add_output(svg, svg_p, {"svg"}, "svg");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    // Streamed commands render into a buffer first so a failure never leaves
    // a truncated file behind.
    std::ostringstream buffer;
    int code = kExitOk;
    std::string text;
    const Params* chosen = nullptr;
    if (bounds->parsed()) {
      code = cmd_bounds(bounds_p, buffer);
      chosen = &bounds_p;
    } else if (map->parsed()) {
      code = cmd_map(map_p, buffer);
      chosen = &map_p;
    } else if (verify->parsed()) {
      code = cmd_verify(verify_p, buffer);
      chosen = &verify_p;
    } else if (scan->parsed()) {
      code = cmd_scan(scan_p, text);
      buffer << text;
      chosen = &scan_p;
    } else if (svg->parsed()) {
      code = cmd_grid_svg(svg_p, text);
      buffer << text;
      chosen = &svg_p;
    }
    emit(buffer.str(), chosen ? chosen->out_path : std::string{}, out);
    return code;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace qrtrap::cli
