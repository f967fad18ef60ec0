#include <doctest.h>

#include "temp_path.hpp"

#include <cstdio>
#include <string>

#include "experts/csv.hpp"
#include "experts/svg.hpp"

using namespace experts;

namespace {

ExpectedRegretCurve sample_curve(const std::string& learner, std::size_t n,
                                 std::uint64_t seed) {
  ExpectedRegretCurve curve;
  curve.checkpoints = {1, 10, 100};
  curve.mean = {0.4821975234258341, 3.1914893617021276, 17.123456789012345};
  curve.std_error = {0.0, 0.017321, 0.25};
  curve.replications = 50;
  curve.learner_id = learner;
  curve.mechanism.kind = MechanismKind::StochasticGap;
  curve.mechanism.n_experts = n;
  curve.mechanism.n_effective = 1;
  curve.base_seed = seed;
  return curve;
}

std::size_t count_occurrences(const std::string& text, const std::string& needle) {
  std::size_t count = 0;
  for (std::size_t pos = text.find(needle); pos != std::string::npos;
       pos = text.find(needle, pos + needle.size())) {
    ++count;
  }
  return count;
}

}  // namespace

TEST_CASE("curve CSV round-trips losslessly") {
  std::vector<ExpectedRegretCurve> curves{sample_curve("dhedge", 16, 7),
                                          sample_curve("care", 16, 7)};
  const std::string text = curves_to_csv(curves);
  CHECK(text.rfind(kCurveCsvHeader, 0) == 0);
  const std::vector<ExpectedRegretCurve> parsed = parse_curves_csv(text);
  REQUIRE(parsed.size() == 2);
  for (std::size_t k = 0; k < 2; ++k) {
    CHECK(parsed[k].learner_id == curves[k].learner_id);
    CHECK(parsed[k].checkpoints == curves[k].checkpoints);
    CHECK(parsed[k].mean == curves[k].mean);          // bit-exact via %.17g
    CHECK(parsed[k].std_error == curves[k].std_error);
    CHECK(parsed[k].replications == curves[k].replications);
    CHECK(parsed[k].base_seed == curves[k].base_seed);
    CHECK(parsed[k].mechanism.n_experts == curves[k].mechanism.n_experts);
    CHECK(parsed[k].mechanism.n_effective == curves[k].mechanism.n_effective);
  }
}

TEST_CASE("curve CSV parser rejects malformed input") {
  CHECK_THROWS_WITH_AS(parse_curves_csv("nope\n1,2\n"), doctest::Contains("ParseError"),
                       Error);
  CHECK_THROWS_WITH_AS(parse_curves_csv(std::string(kCurveCsvHeader) + "\n"),
                       doctest::Contains("ParseError"), Error);
  CHECK_THROWS_WITH_AS(
      parse_curves_csv(std::string(kCurveCsvHeader) + "\n1,2,3\n"),
      doctest::Contains("ParseError"), Error);
}

TEST_CASE("atomic writes leave no partial files") {
  const std::string path = temp_path("_atomic.csv");
  write_file_atomic(path, "hello\n");
  CHECK(read_file(path) == "hello\n");
  std::remove(path.c_str());

  CHECK_THROWS_WITH_AS(write_file_atomic("/nonexistent_dir_xyz/out.csv", "x"),
                       doctest::Contains("IoError"), Error);
}

TEST_CASE("svg renders one polyline per series") {
  SvgSeries single{"series-a", {{1.0, 2.0}, {10.0, 7.0}}};
  const std::string svg = render_loglog_svg({single});
  CHECK(count_occurrences(svg, "<polyline") == 1);
  CHECK(svg.find("series-a") != std::string::npos);
  CHECK(svg.find("viewBox=\"0 0 1000 700\"") != std::string::npos);

  std::vector<SvgSeries> three;
  for (int s = 0; s < 3; ++s) {
    SvgSeries series;
    series.label = "learner-" + std::to_string(s);
    for (int i = 1; i <= 5; ++i) {
      series.points.emplace_back(i * 10.0, (s + 1) * i * 2.0);
    }
    three.push_back(series);
  }
  const std::string multi = render_loglog_svg(three);
  CHECK(count_occurrences(multi, "<polyline") == 3);
}

TEST_CASE("svg output is byte-identical across regenerations") {
  std::vector<SvgSeries> series{{"a", {{1.0, 1.5}, {100.0, 31.0}, {10000.0, 320.0}}},
                                {"b", {{1.0, 4.5}, {100.0, 11.0}, {10000.0, 640.0}}}};
  CHECK(render_loglog_svg(series) == render_loglog_svg(series));
}

TEST_CASE("svg rejects empty input and skips nonpositive points") {
  CHECK_THROWS_WITH_AS(render_loglog_svg({}), doctest::Contains("EmptyInput"), Error);
  SvgSeries degenerate{"zero", {{1.0, 0.0}, {2.0, -1.0}}};
  CHECK_THROWS_WITH_AS(render_loglog_svg({degenerate}), doctest::Contains("EmptyInput"),
                       Error);
  // Mixed series still renders the positive part.
  SvgSeries mixed{"m", {{1.0, 0.0}, {2.0, 3.0}, {4.0, 9.0}}};
  CHECK(count_occurrences(render_loglog_svg({mixed}), "<polyline") == 1);
}

TEST_CASE("curves_to_series groups by axis") {
  std::vector<ExpectedRegretCurve> curves{sample_curve("dhedge", 16, 7),
                                          sample_curve("dhedge", 256, 7),
                                          sample_curve("care", 16, 7)};
  const std::vector<SvgSeries> by_time = curves_to_series(curves, PlotAxis::Time);
  CHECK(by_time.size() == 3);
  CHECK(by_time[0].points.size() == 3);
  CHECK(by_time[0].points[1].first == 10.0);

  // Against N: one series per (learner, checkpoint), points ordered by N.
  const std::vector<SvgSeries> by_n = curves_to_series(curves, PlotAxis::Experts);
  CHECK(by_n.size() == 6);
  bool found_pair = false;
  for (const SvgSeries& s : by_n) {
    if (s.points.size() == 2) {
      found_pair = true;
      CHECK(s.points[0].first == 16.0);
      CHECK(s.points[1].first == 256.0);
    }
  }
  CHECK(found_pair);
}
