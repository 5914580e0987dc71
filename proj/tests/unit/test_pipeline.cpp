#include <doctest.h>

#include "pipeline/pipeline.hpp"

using namespace logvec;

namespace {

const char* kA3 = R"(# braid arrangement
vars x y z
curve x
curve y
curve z
curve x - y
curve x - z
curve y - z
seed 1
)";

const char* kA3Cubic = "3*x^2*y - 3*x*y^2 + 4*x^2*z + 5*y^2*z - 4*x*z^2 - 5*y*z^2";

void expect_parse_error(const std::string& text, std::size_t line, std::size_t column) {
  try {
    parse_arrangement_file(text);
    FAIL("accepted: " << text);
  } catch (const ParseError& e) {
    CHECK_MESSAGE(e.line() == line, e.what());
    CHECK_MESSAGE(e.column() == column, e.what());
  }
}

bool check_passed(const Json& report, const std::string& name) {
  for (const auto& c : report.at("checks"))
    if (c.at("name") == name) return c.at("pass").get<bool>();
  FAIL("no check named " << name);
  return false;
}

}  // namespace

TEST_CASE("arrangement files") {
  auto f = parse_arrangement_file("vars a b c\ncurve a*b  # two lines\n\ncurve c\nadd a + b + c\nseed 9\noption prime 101\n");
  CHECK(f.vars == std::vector<std::string>{"a", "b", "c"});
  REQUIRE(f.components.size() == 2);
  CHECK(f.components[1].line == 4);
  CHECK(f.component_polynomials()[0].total_degree() == 2);
  CHECK(f.curve_polynomial().has_value());
  CHECK(f.seed == 9u);
  CHECK(f.prime == 101u);
  auto again = parse_arrangement_file(f.render());
  CHECK(again.render() == f.render());
  CHECK(again.component_polynomials() == f.component_polynomials());
  CHECK(*again.curve_polynomial() == *f.curve_polynomial());
}

TEST_CASE("arrangement file errors point at the offending text") {
  expect_parse_error("vars x y\ncurve x\n", 1, 1);
  expect_parse_error("vars x y 1z\ncurve x\n", 1, 10);
  expect_parse_error("vars x y x\ncurve x\n", 1, 10);
  expect_parse_error("curve x\ncurve x +* y\n", 2, 10);
  expect_parse_error("curve x\n  curve (y\n", 2, 9);
  expect_parse_error("curve x\nline y\n", 2, 1);
  expect_parse_error("curve x\nadd y\nadd z\n", 3, 1);
  expect_parse_error("curve x\nseed -1\n", 2, 6);
  expect_parse_error("curve x\noption prime 91\n", 2, 8);
  expect_parse_error("curve x\nvars x y z\n", 2, 1);
  expect_parse_error("# nothing\n", 1, 1);
  expect_parse_error("curve\n", 1, 6);
}

TEST_CASE("braid arrangement analysis") {
  auto a = analyze(parse_arrangement_file(kA3, "a3.arr"));
  CHECK(a.exit_code == kExitOk);
  const auto& r = a.report;
  CHECK(r.at("input").at("source") == "a3.arr");
  CHECK(r.at("field") == "QQ");
  const auto& arr = r.at("arrangement");
  CHECK(arr.at("singularities").at("points") == 7);
  CHECK(arr.at("singularities").at("mu_total") == 19);
  CHECK(arr.at("d0").at("degrees") == Json::array({2, 3}));
  CHECK(arr.at("freeness").at("exponents") == Json::array({1, 2, 3}));
  CHECK_FALSE(r.contains("union"));
  CHECK(r.at("status").at("all_checks_pass") == true);
}

TEST_CASE("reports are deterministic apart from timings") {
  auto file = parse_arrangement_file(kA3);
  auto a = analyze(file), b = analyze(file);
  CHECK(to_json_text(a.report, false) == to_json_text(b.report, false));
  CHECK(to_json_text(a.report, false).find("timings") == std::string::npos);
  CHECK(to_json_text(a.report, true).find("timings") != std::string::npos);
  CHECK(report_differences(a.report, b.report).empty());
  auto changed = b.report;
  changed["arrangement"]["singularities"]["mu_total"] = 20;
  auto diffs = report_differences(a.report, changed);
  REQUIRE(diffs.size() == 1);
  CHECK(diffs[0].find("mu_total") != std::string::npos);
}

TEST_CASE("braid arrangement plus a cubic through its singular points") {
  auto a = add_curve(parse_arrangement_file(kA3), kA3Cubic);
  CHECK(a.exit_code == kExitOk);
  const auto& r = a.report;
  CHECK(r.at("union").at("singularities").at("mu_total") == 48);
  CHECK(r.at("intersection").at("k") == 7);
  CHECK(r.at("cokernel").at("numerator") == "2t^4 - t^5 - t^6");
  CHECK(r.at("prediction").at("predicted_exponents") == Json::array({1, 4, 4}));
  CHECK(r.at("prediction").at("agree") == true);
  for (const auto& c : r.at("checks")) CHECK_MESSAGE(c.at("pass").get<bool>(), c.at("name"));
}

TEST_CASE("closing a triangle through the pipeline") {
  auto a = analyze(parse_arrangement_file("curve x\ncurve y\nadd z\n"));
  CHECK(a.exit_code == kExitOk);
  CHECK(a.report.at("prediction").at("computed_exponents") == Json::array({1, 1, 1}));
  CHECK(a.report.at("intersection").at("k") == 2);
  CHECK(check_passed(a.report, "prediction_matches_direct"));
}

TEST_CASE("hypothesis failures") {
  auto hyp = [](const char* text) {
    auto a = analyze(parse_arrangement_file(text));
    CHECK(a.exit_code == kExitHypothesis);
    return a.report.at("status").at("failure").at("hypothesis").get<std::string>();
  };
  CHECK(hyp("curve x\ncurve y\nadd y^2*z - x^3\n") == "curve_smooth");
  CHECK(hyp("curve x\ncurve y\nadd x\n") == "no_common_component");
  CHECK(hyp("curve x^2\ncurve y\n") == "reduced");
  CHECK(hyp("curve x + 1\n") == "homogeneous");
}

TEST_CASE("find-curve") {
  auto file = parse_arrangement_file(kA3, "a3.arr");
  auto none = find_curve(file, 1);
  CHECK(none.exit_code == kExitHypothesis);
  CHECK(none.report.at("status").at("failure").at("hypothesis") == "nonempty_linear_system");
  CHECK_FALSE(none.curve.has_value());

  auto cubic = find_curve(file, 3);
  REQUIRE(cubic.exit_code == kExitOk);
  REQUIRE(cubic.curve.has_value());
  CHECK(cubic.report.at("h0") == 3);
  auto augmented = parse_arrangement_file(*cubic.augmented_file);
  REQUIRE(augmented.curve.has_value());
  CHECK(augmented.curve->text == *cubic.curve);
  CHECK(analyze(augmented).exit_code == kExitOk);
  CHECK_THROWS_AS(find_curve(file, 0), std::invalid_argument);
}

TEST_CASE("Z/p mode agrees with Q on the braid arrangement") {
  auto file = parse_arrangement_file(kA3);
  RunOptions opts;
  opts.prime = 32003;
  auto p = add_curve(file, kA3Cubic, opts);
  auto q = add_curve(file, kA3Cubic);
  CHECK(p.exit_code == kExitOk);
  CHECK(p.report.at("field") == "GF(32003)");
  CHECK(p.report.at("exact") == false);
  for (const char* block : {"arrangement", "union"}) {
    CHECK(p.report.at(block).at("singularities").at("mu_total") == q.report.at(block).at("singularities").at("mu_total"));
    CHECK(p.report.at(block).at("d0").at("degrees") == q.report.at(block).at("d0").at("degrees"));
  }
  CHECK(p.report.at("cokernel").at("numerator") == q.report.at("cokernel").at("numerator"));
}
