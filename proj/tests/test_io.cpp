#include <string>
#include <vector>

#include "doctest.h"
#include "orlicz_kit/io.hpp"
#include "orlicz_kit/report.hpp"

using namespace orlicz;
using namespace orlicz::io;

TEST_CASE("syntax errors carry line and column") {
  try {
    parse_text("{\n  \"a\": 1\n  \"b\": 2\n}");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line == 3);
    CHECK(e.column >= 1);
  }
  CHECK_THROWS_AS(load_file("/nonexistent/config.json"), IoError);
}

TEST_CASE("extended reals") {
  CHECK(ext_from_json(json("inf")).is_pos_inf());
  CHECK(ext_from_json(json("-inf")).is_neg_inf());
  CHECK(ext_from_json(json(2.5)) == 2.5);
  CHECK_THROWS_AS(ext_from_json(json("big")), ParseError);
  CHECK(ext_to_json(ExtReal::pos_inf()) == json("inf"));
  CHECK(ext_to_json(1.5) == json(1.5));
}

TEST_CASE("carriers and charges") {
  const Carrier f = carrier_from_json(parse_text(R"({"kind": "finite", "weights": [1, "inf", 0]})"));
  CHECK(f.size() == 3);
  CHECK(f.weight(1).is_pos_inf());
  CHECK(carrier_from_json(to_json(f)) == f);

  const Carrier t = carrier_from_json(parse_text(R"({"kind": "tail", "tail": {"prefix": [2], "value": 0.5}})"));
  CHECK(t.is_tail());
  CHECK(t.tail_value() == 0.5);
  CHECK(carrier_from_json(to_json(t)) == t);

  CHECK_THROWS_AS(carrier_from_json(parse_text(R"({"kind": "cone"})")), ParseError);
  CHECK_THROWS_AS(carrier_from_json(parse_text(R"({"kind": "finite", "weights": [-1]})")), ParseError);

  const Charge nu = charge_from_json(parse_text(R"({"masses": [1, -2], "lambda": 3})"), Carrier::tail({1.0, 1.0}, 1.0));
  CHECK(nu.lambda == 3.0);
  CHECK(charge_from_json(to_json(nu), nu.carrier) == nu);
  CHECK_THROWS_AS(charge_from_json(parse_text(R"({"masses": [1]})"), f), ParseError);
}

TEST_CASE("integrands") {
  const OrliczIntegrand p = integrand_from_json(parse_text(R"({"family": "power", "params": {"p": 3}})"));
  CHECK(p(0, {2.0}).value() == doctest::Approx(8.0 / 3.0));
  const OrliczIntegrand s = integrand_from_json(parse_text(R"({"family": "power", "params": {"p": 2}, "coefficients": [2]})"));
  CHECK(s(0, {3.0}) == 9.0);
  const OrliczIntegrand b = integrand_from_json(parse_text(R"({"family": "ball", "params": {"radius": 2}, "dim": 2})"));
  CHECK(b.dimension() == 2);
  CHECK_THROWS_AS(integrand_from_json(parse_text(R"({"family": "cosh"})")), ParseError);
  CHECK_THROWS_AS(integrand_from_json(parse_text(R"({"family": "power", "params": {"p": 0.5}})")), ParseError);
  CHECK_THROWS_AS(integrand_from_json(parse_text(R"({"params": {}})")), ParseError);

  const PointIntegrand q = point_integrand_from_json(parse_text(R"({"family": "shifted_quadratic", "center": [1]})"));
  CHECK(q(std::vector<double>{3.0}) == 4.0);
  CHECK_THROWS_AS(point_integrand_from_json(parse_text(R"({"family": "spline"})")), ParseError);
}

TEST_CASE("sampled functions, grids and functionals round-trip") {
  const Carrier t = Carrier::tail({1.0, 1.0}, 1.0);
  const SampledFunction u = sampled_from_json(parse_text(R"({"values": [1, [2]], "eventual": 0})"), t);
  CHECK(u.at(7) == std::vector<double>{0.0});
  CHECK(sampled_from_json(to_json(u), t).values == u.values);

  const GridFunction g = grid_from_json(parse_text(R"({"axes": [[0, 1, 2]], "values": [0, 1, "inf"]})"));
  CHECK(g.values[2].is_pos_inf());
  CHECK(grid_from_json(to_json(g)).values == g.values);

  const FunctionalTriple l = triple_from_json(
      parse_text(R"({"density": {"values": [1, 2], "eventual": 0}, "diffuse": [{"point": 1, "weight": [3]}], "pfa": [-1]})"), t);
  const FunctionalTriple back = triple_from_json(to_json(l), t);
  CHECK(back.pfa == l.pfa);
  CHECK(back.diffuse.size() == 1);

  const SearchGrid sg = search_grid_from_json(json(), 2);
  CHECK(sg.axes.size() == 2);
  CHECK_THROWS_AS(search_grid_from_json(parse_text(R"({"axes": [[1, 0]]})"), 1), ParseError);
}

TEST_CASE("report formatting") {
  CHECK(format_number(0.1) == "0.1");
  CHECK(format_number(-0.0) == "0");
  CHECK(format_number(1e300 * 1e10) == "inf");
  CHECK(format_number(1.0 / 3.0) == "0.3333333333333333");  // shortest round trip

  Report r;
  r.command = "verify";
  r.records.push_back({"a,b", "anchor \"x\"", true, 0.5, 1e-6, 12.0});
  r.records.push_back({"c", "y", false, -1.0, 0.0, 3.0});
  CHECK(r.passed() == 1);
  CHECK_FALSE(r.all_passed());
  CHECK(r.to_csv() ==
        "check_name,anchor,status,slack,tol,ms\n"
        "\"a,b\",\"anchor \"\"x\"\"\",pass,0.5,1e-06,0\n"
        "c,y,fail,-1,0,0\n");
  CHECK(r.to_csv(true).find(",12\n") != std::string::npos);
  const json j = r.to_json();
  CHECK(j["checks"][0]["ms"] == 0.0);
  CHECK(j["checks"][1]["status"] == "fail");
}
