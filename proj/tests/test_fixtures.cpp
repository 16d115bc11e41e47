#include "doctest.h"
#include "json.hpp"
#include "quadcurves/errors.hpp"
#include "quadcurves/fixtures.hpp"
#include "quadcurves/report.hpp"

using namespace qc;

namespace {

std::pair<int, int> parse_error_at(auto&& fn) {
  try {
    fn();
  } catch (const ParseError& e) {
    return {e.line(), e.column()};
  }
  return {-1, -1};
}

}  // namespace

TEST_CASE("generator files") {
  const auto gens = parse_generator_lines("# the double line\nxz - yt\nx^2, xy\n\n  y^2  # last\n");
  REQUIRE(gens.size() == 4);
  CHECK(gens[0] == parse_polynomial("xz - yt"));
  CHECK(gens[3] == parse_polynomial("y^2"));
  CHECK(parse_ideal_text("x\ny\n") == Ideal::from_strings({"x", "y"}));

  CHECK(parse_error_at([] { parse_generator_lines("x\nxz - * y\n"); }) == std::pair{2, 6});
  CHECK(parse_error_at([] { parse_generator_lines("x, , y"); }).first == 1);
  CHECK(parse_error_at([] { parse_generator_lines("x\ny\nz + w"); }).first == 3);
}

TEST_CASE("generator files over a prime field") {
  const auto f = FieldSpec::prime(7);
  const Ideal i = parse_ideal_text("x + 8y\n", f);
  CHECK(i.generators()[0] == parse_polynomial("x + y", f));
}

TEST_CASE("complex JSON round trip") {
  for (int d = 2; d <= 4; ++d) {
    const auto c = predicted_smooth_resolution(d);
    const auto back = parse_complex_json(complex_to_json(c));
    CHECK(back.modules() == c.modules());
    CHECK(back.matrices() == c.matrices());
  }
  const auto s = ReducibleCurveSpec::parse("z^2", "t", "z^2", "t", "z");
  const auto r = predicted_reducible_resolution(s);
  const auto back = parse_complex_json(complex_to_json(r));
  CHECK(back.matrices() == r.matrices());
  CHECK(certify_resolution(back).pass());

  const auto tiny = parse_complex_json(R"({"twists": [[0], [-1, -1]], "maps": [[["x", "y"]]]})");
  CHECK(tiny.length() == 1);
  CHECK(tiny.map(1).matrix.cols() == 2);
  const auto ints = parse_complex_json(R"({"twists": [[0], [0]], "maps": [[[1]]]})");
  CHECK(ints.matrices()[0].at(0, 0) == Polynomial::constant(1));
}

TEST_CASE("malformed complex JSON") {
  CHECK(parse_error_at([] { parse_complex_json("{\"twists\": [[0]],\n \"maps\": [[[\"x\"]]"); }).first == 2);
  CHECK_THROWS_AS(parse_complex_json(R"({"twists": [[0]]})"), ParseError);
  CHECK_THROWS_AS(parse_complex_json(R"({"twists": [["a"]], "maps": []})"), ParseError);
  CHECK_THROWS_AS(parse_complex_json(R"({"twists": [[0], [-1]], "maps": [[["x +"]]]})"), ParseError);
  CHECK_THROWS_AS(parse_complex_json(R"({"twists": [[0], [-1]], "maps": [[[true]]]})"), ParseError);
  CHECK_THROWS_AS(parse_complex_json(R"([1, 2])"), ParseError);
}

TEST_CASE("curve spec files") {
  const auto red = parse_curve_spec("family=reducible\nA=z^2\nB=t\nF=z^2\nG=t\nh=z\n");
  CHECK(red.family == CurveSpec::Family::Reducible);
  REQUIRE(red.reducible.has_value());
  CHECK(red.reducible->degree() == 5);
  CHECK(predicted_resolution(red).has_value());

  const auto defaults = parse_curve_spec("family=reducible\nF=z\nG=t\nh=1\nB=1\n");
  CHECK(defaults.reducible->A.is_zero());

  const auto sm = parse_curve_spec("# comment\nfamily=smooth\nd=3\n");
  CHECK(construct_ideal(sm) == build_smooth_minimal_ideal(3));
  CHECK(predicted_resolution(sm)->modules() == predicted_smooth_resolution(3).modules());

  const auto ml = parse_curve_spec("family=multiline\nlines=(0:1)*2,(1:0),(1:1)\nruling=first\n");
  REQUIRE(ml.multiline.has_value());
  CHECK(ml.multiline->degree() == 4);
  CHECK_FALSE(predicted_resolution(ml).has_value());
  CHECK(construct_ideal(ml) == determinantal_multiline_ideal(*ml.multiline));

  const auto skew = parse_curve_spec("family=multiline\nlines=(0:1),(1:0)\n");
  REQUIRE(predicted_resolution(skew).has_value());
  CHECK(certify_resolution(*predicted_resolution(skew)).pass());

  CHECK(parse_error_at([] { parse_curve_spec("family=smooth\ncolor=red\n"); }).first == 2);
  CHECK(parse_error_at([] { parse_curve_spec("family=smooth\nd=2\nd=3\n"); }).first == 3);
  CHECK(parse_error_at([] { parse_curve_spec("family=smooth\nd two\n"); }).first == 2);
  CHECK(parse_error_at([] { parse_curve_spec("family=conic\n"); }).first == 1);
  CHECK(parse_error_at([] { parse_curve_spec("family=reducible\nF=z +\nG=t\nh=1\n"); }).first == 2);
  CHECK_THROWS_AS(parse_curve_spec("family=smooth\n"), ParseError);
}

TEST_CASE("ruling line lists") {
  const auto ls = parse_ruling_lines("(0:1)*2,(1:0), (-2:3)");
  REQUIRE(ls.size() == 3);
  CHECK(ls[0].multiplicity == 2);
  CHECK(ls[2].u == -2);
  CHECK(ls[2].v == 3);
  CHECK_THROWS_AS(parse_ruling_lines("(0:1"), ParseError);
  CHECK_THROWS_AS(parse_ruling_lines("(0;1)"), ParseError);
  CHECK_THROWS_AS(parse_ruling_lines("(0:1)*"), ParseError);
}

TEST_CASE("reports are stable JSON") {
  const auto rep = classify_curve(Ideal::from_strings({"xz", "xt", "yz", "yt"}), skew_lines_resolution());
  const auto text = classification_to_json(rep);
  CHECK(text == classification_to_json(rep));
  const auto j = nlohmann::json::parse(text);
  CHECK(j["degree"] == 2);
  CHECK(j["arithmetic_genus"] == -1);
  CHECK(j["quadric_rank"] == 4);
  CHECK(j["acm"] == false);
  CHECK(j["rao_dims"]["0"] == 1);

  const auto cubic = classify_curve(Ideal::from_strings({"xz - y^2", "xt - yz", "yt - z^2"}));
  const auto jc = nlohmann::json::parse(classification_to_json(cubic));
  CHECK(jc["rao_dims"].is_null());

  const auto mt = rao_module(build_smooth_minimal_ideal(3), predicted_smooth_resolution(3));
  const auto jm = nlohmann::json::parse(module_table_to_json(mt));
  CHECK(jm["total"] == 4);
  CHECK(jm["support"] == nlohmann::json::array({0, 1}));

  const auto jcert = nlohmann::json::parse(certificate_to_json(certify_resolution(skew_lines_resolution())));
  CHECK(jcert.is_object());
  CHECK_FALSE(classification_to_text(rep).empty());
}
