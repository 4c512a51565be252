#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include <doctest.h>
#include <json.hpp>

#include "cli.hpp"
#include "qrtrap/qcmap.hpp"

using namespace qrtrap;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "qrtrap");
  std::vector<const char*> argv;
  for (const std::string& a : args) {
    argv.push_back(a.c_str());
  }
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::size_t count(const std::string& s, const std::string& needle) {
  std::size_t n = 0;
  for (std::size_t pos = s.find(needle); pos != std::string::npos; pos = s.find(needle, pos + 1)) {
    ++n;
  }
  return n;
}

}  // namespace

TEST_CASE("bounds command") {
  const Run rect = run({"bounds", "--alpha", "0.5", "--d", "3"});
  CHECK(rect.code == 0);
  CHECK(rect.out.find("upper_new  = 18.8495559215") != std::string::npos);

  const Run t = run({"bounds", "--alpha", "0.25", "--d", "2", "--format", "json"});
  REQUIRE(t.code == 0);
  const auto j = nlohmann::json::parse(t.out);
  CHECK(j["schema_version"] == cli::kReportSchemaVersion);
  CHECK(j["config"].is_array());
  CHECK(j["results"].is_array());
  CHECK(j["checks"].is_array());
  for (const auto& c : j["checks"]) {
    CHECK(c["passed"] == true);
    CHECK(c.contains("tolerance"));
  }
  double lower = 0, upper_tau = 0, upper_new = 0;
  for (const auto& r : j["results"]) {
    if (r["name"] == "lower") lower = r["value"];
    if (r["name"] == "upper_tau") upper_tau = r["value"];
    if (r["name"] == "upper_new") upper_new = r["value"];
    if (r["value"].is_number()) {
      CHECK(r.contains("tolerance"));
    }
  }
  CHECK(lower > 0);
  CHECK(lower <= upper_tau);
  CHECK(lower <= upper_new);

  const Run bad = run({"bounds", "--alpha", "0.25", "--d", "0.5"});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("d must exceed cot(pi*alpha)=1") != std::string::npos);

  const Run pg = run({"bounds", "--alpha", "0.25", "--parallelogram", "--a", "3"});
  CHECK(pg.code == 0);
  CHECK(pg.out.find("upper_parallelogram") != std::string::npos);

  CHECK(run({"bounds", "--alpha", "0.25"}).code == 2);
  CHECK(run({"bounds", "--d", "2"}).code == 2);
  CHECK(run({"bounds", "--alpha", "0.25", "--d", "2", "--format", "xml"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("map command") {
  const Run r = run({"map", "--alpha", "0.25", "--d", "2", "--x", "1.2", "--y", "0.4", "--format", "json"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  double u = 0, v = 0;
  for (const auto& e : j["results"]) {
    if (e["name"] == "u") u = e["value"];
    if (e["name"] == "v") v = e["value"];
  }
  CHECK(u == doctest::Approx(1.5));
  CHECK(v == doctest::Approx(0.4));

  const Run inv = run({"map", "--alpha", "0.25", "--d", "2", "--x", "2", "--y", "1", "--inverse"});
  CHECK(inv.code == 0);
  CHECK(inv.out.find("-> (1, 1)") != std::string::npos);

  const Run pg = run({"map", "--alpha", "0.25", "--parallelogram", "--a", "3", "--x", "1", "--y", "0"});
  CHECK(pg.code == 0);
  CHECK(pg.out.find("-> (2, 0)") != std::string::npos);
}

TEST_CASE("verify command") {
  const Run rect = run({"verify", "--alpha", "0.5", "--d", "2", "--resolution", "64"});
  CHECK(rect.code == 0);
  CHECK(count(rect.out, "PASS") == 6);

  const Run t = run({"verify", "--alpha", "0.25", "--d", "2", "--format", "json"});
  CHECK(t.code == 0);
  const auto j = nlohmann::json::parse(t.out);
  CHECK(j["checks"].size() == 6);
  for (const auto& c : j["checks"]) {
    CHECK(c["passed"] == true);
    CHECK(c["margin"].get<double>() >= 0.0);
  }

  const Run stress = run({"verify", "--alpha", "0.05", "--d", "50"});
  CHECK(stress.code == 0);
  CHECK(stress.out.find("FAIL") == std::string::npos);

  // an impossible slack makes the grid check fail
  const Run strict = run({"verify", "--alpha", "0.25", "--d", "2", "--resolution", "32", "--tol", "-1"});
  CHECK(strict.code == 1);
  CHECK(run({"verify", "--alpha", "0.25", "--d", "1"}).code == 2);
}

TEST_CASE("scan command") {
  const Run two = run({"scan", "--alpha", "0.3", "--c-min", "0.1", "--c-max", "10", "--n", "2"});
  REQUIRE(two.code == 0);
  CHECK(two.out.rfind("c,d,lower,upper_tau,upper_new\n", 0) == 0);
  CHECK(count(two.out, "\n") == 3);
  CHECK(two.out.find('\r') == std::string::npos);

  const Run again = run({"scan", "--alpha", "0.3", "--c-min", "0.1", "--c-max", "10", "--n", "2"});
  CHECK(again.out == two.out);

  // 17 significant digits round-trip
  std::istringstream lines(two.out);
  std::string header, row;
  std::getline(lines, header);
  std::getline(lines, row);
  const double c = std::stod(row.substr(0, row.find(',')));
  CHECK(c == 0.1);
  const auto rows = compare_scan(0.3, 0.1, 10.0, 2);
  std::istringstream fields(row);
  std::string field;
  std::vector<double> values;
  while (std::getline(fields, field, ',')) {
    values.push_back(std::stod(field));
  }
  REQUIRE(values.size() == 5);
  CHECK(values[4] == rows[0].upper_new);

  const Run json = run({"scan", "--alpha", "0.45", "--n", "5", "--format", "json", "--log-spacing"});
  CHECK(json.code == 0);
  CHECK(nlohmann::json::parse(json.out)["results"].size() == 5);

  CHECK(run({"scan", "--alpha", "0.3", "--c-min", "2", "--c-max", "1"}).code == 2);
  CHECK(run({"scan", "--alpha", "0.3", "--n", "1"}).code == 2);
}

TEST_CASE("grid-svg command") {
  const Trapezoid t = make_trapezoid(0.25, 2.0);
  cli::SvgOptions options;
  options.lines = 6;
  const std::string svg = cli::render_grid_svg(t, options);
  CHECK(svg.rfind("<?xml", 0) == 0);
  CHECK(svg.find("version=\"1.1\"") != std::string::npos);
  CHECK(svg.find("viewBox=") != std::string::npos);
  CHECK(count(svg, "<polyline") == 2u * 6 * 7 + 4);
  for (const char* cls : {"class=\"G1\"", "class=\"G2\"", "class=\"G3\"", "class=\"G4\"", "class=\"G5\""}) {
    CHECK(svg.find(cls) != std::string::npos);
  }
  CHECK(svg == cli::render_grid_svg(t, options));

  // every grid polyline starts and ends at the image of its source endpoints
  const std::regex line_re(
      "<polyline class=\"G\\d\" data-x0=\"([^\"]+)\" data-y0=\"([^\"]+)\" data-x1=\"([^\"]+)\" "
      "data-y1=\"([^\"]+)\" points=\"([^\"]+)\"/>");
  long checked = 0;
  for (auto it = std::sregex_iterator(svg.begin(), svg.end(), line_re); it != std::sregex_iterator(); ++it) {
    const auto& m = *it;
    const PlanePoint a{std::stod(m[1]), std::stod(m[2])};
    const PlanePoint b{std::stod(m[3]), std::stod(m[4])};
    const std::string pts = m[5];
    const std::string first = pts.substr(0, pts.find(' '));
    const std::string last = pts.substr(pts.rfind(' ') + 1);
    CHECK(count(pts, " ") + 1 >= 64);
    const PlanePoint fa = forward(t, a).output;
    const PlanePoint fb = forward(t, b).output;
    CHECK(std::stod(first.substr(0, first.find(','))) == fa.x);
    CHECK(std::stod(first.substr(first.find(',') + 1)) == fa.y);
    CHECK(std::stod(last.substr(0, last.find(','))) == fb.x);
    CHECK(std::stod(last.substr(last.find(',') + 1)) == fb.y);
    ++checked;
  }
  CHECK(checked == 2 * 6 * 7);

  // the right slanted side is drawn on x = d
  const std::regex edge_re("<polyline class=\"boundary-image\" data-x0=\"2\" data-y0=\"0\"[^>]*points=\"([^\"]+)\"/>");
  std::smatch edge;
  REQUIRE(std::regex_search(svg, edge, edge_re));
  std::istringstream pts(edge[1].str());
  std::string pair;
  while (pts >> pair) {
    CHECK(std::stod(pair.substr(0, pair.find(','))) == doctest::Approx(2.0).epsilon(1e-14));
  }

  // the identity case leaves grid points in place
  const Trapezoid rect = make_trapezoid(0.5, 1.0);
  const std::string flat = cli::render_grid_svg(rect, options);
  const std::regex corner_re("data-x0=\"-3\" data-y0=\"-2\" data-x1=\"-3\" data-y1=\"-1\\.16666666666666[0-9]*\" points=\"-3,-2 ");
  CHECK(std::regex_search(flat, corner_re));

  const auto dir = std::filesystem::temp_directory_path() / "qrtrap_cli_test";
  std::filesystem::create_directories(dir);
  const auto path = (dir / "grid.svg").string();
  const Run r = run({"grid-svg", "--alpha", "0.25", "--d", "2", "--n", "4", "--out", path});
  CHECK(r.code == 0);
  std::ifstream in(path);
  std::stringstream content;
  content << in.rdbuf();
  cli::SvgOptions four;
  four.lines = 4;
  CHECK(content.str() == cli::render_grid_svg(t, four));

  const Run unwritable = run({"grid-svg", "--alpha", "0.25", "--d", "2", "--out", "/nonexistent/dir/x.svg"});
  CHECK(unwritable.code == 2);
  CHECK(unwritable.err.find("/nonexistent/dir/x.svg") != std::string::npos);
  CHECK(run({"grid-svg", "--alpha", "0.25", "--d", "2", "--x-min", "1", "--x-max", "1"}).code == 2);
}
