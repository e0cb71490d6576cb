#include <cmath>
#include <vector>

#include "doctest.h"
#include "orlicz_kit/orlicz.hpp"

using namespace orlicz;

TEST_CASE("catalog values") {
  const auto p3 = OrliczIntegrand::power(3.0);
  CHECK(p3(0, {2.0}).value() == doctest::Approx(8.0 / 3.0));
  CHECK(p3(0, {-2.0}) == p3(0, {2.0}));
  CHECK(OrliczIntegrand::absolute(2)(0, {3.0, 4.0}) == 5.0);
  CHECK(OrliczIntegrand::exponential()(0, {1.0}).value() == doctest::Approx(std::exp(1.0) - 1.0));
  const auto ball = OrliczIntegrand::ball_indicator(1, 2.0);
  CHECK(ball(0, {2.0}) == 0.0);
  CHECK(ball(0, {2.5}).is_pos_inf());
  const auto var = OrliczIntegrand::variable_exponent({2.0, 4.0});
  CHECK(var(0, {2.0}) == 4.0);
  CHECK(var(1, {2.0}) == 16.0);
  CHECK(var(9, {2.0}) == 16.0);  // past the list: last exponent
  CHECK_THROWS_AS(OrliczIntegrand::power(1.0), std::invalid_argument);
  CHECK_THROWS_AS(OrliczIntegrand::ball_indicator(1, 0.0), std::invalid_argument);
}

TEST_CASE("closed-form conjugates") {
  CHECK(OrliczIntegrand::power(2.0).conjugate(0, std::vector<double>{3.0}).value() == doctest::Approx(4.5));
  const auto abs = OrliczIntegrand::absolute();
  CHECK(abs.conjugate(0, std::vector<double>{0.5}) == 0.0);
  CHECK(abs.conjugate(0, std::vector<double>{1.5}).is_pos_inf());
  CHECK(OrliczIntegrand::ball_indicator(1, 2.0).conjugate(0, std::vector<double>{-3.0}) == 6.0);
  const auto scaled = OrliczIntegrand::power(2.0).scaled(2.0);  // x^2, conjugate y^2 / 4
  CHECK(scaled(0, {3.0}) == 9.0);
  CHECK(scaled.conjugate(0, std::vector<double>{4.0}).value() == doctest::Approx(4.0));
  const auto custom = OrliczIntegrand::general("c", 1, [](std::size_t, std::span<const double> x) -> ExtReal {
    return x[0] * x[0];
  });
  CHECK_FALSE(custom.has_conjugate());
  CHECK_THROWS_AS(custom.conjugate(0, std::vector<double>{1.0}), ConjugateUnavailable);
}

TEST_CASE("check_axioms") {
  SamplingGrid grid;
  CHECK(check_axioms(OrliczIntegrand::power(2.0), grid).all_passed());
  CHECK(check_axioms(OrliczIntegrand::ball_indicator(), grid).all_passed());
  SamplingGrid g2;
  g2.dim = 2;
  CHECK(check_axioms(OrliczIntegrand::exponential(2), g2).all_passed());

  const auto shifted = OrliczIntegrand::radial("shifted", 1, [](std::size_t, double r) -> ExtReal { return r * r - 1.0; });
  const AxiomReport rep = check_axioms(shifted, grid);
  CHECK_FALSE(rep.all_passed());
  CHECK_FALSE(rep.get("zero_at_origin").passed);

  const auto concave = OrliczIntegrand::radial("log", 1, [](std::size_t, double r) -> ExtReal { return std::log1p(r); });
  CHECK_FALSE(check_axioms(concave, grid).get("midpoint_convex").passed);
}

TEST_CASE("coercivity equivalence") {
  SamplingGrid grid;
  const CoercivityTriple sq = coercivity_equivalence(OrliczIntegrand::power(2.0), grid);
  CHECK(sq.precondition_ok);
  CHECK(sq.tends_to_infinity);
  CHECK(sq.positive_sphere_infimum);
  CHECK(sq.positive_slope_liminf);

  const CoercivityTriple abs = coercivity_equivalence(OrliczIntegrand::absolute(), grid);
  CHECK(abs.agree());
  CHECK(abs.tends_to_infinity);
  CHECK(abs.liminf_quotient == doctest::Approx(1.0));

  const auto log1p = OrliczIntegrand::radial("log", 1, [](std::size_t, double r) -> ExtReal { return std::log1p(r); });
  const CoercivityTriple bad = coercivity_equivalence(log1p, grid);
  CHECK_FALSE(bad.precondition_ok);
  CHECK_FALSE(bad.precondition_witness.empty());
}

TEST_CASE("delta2 classification") {
  SamplingGrid grid;
  const Carrier c = Carrier::finite({1.0, 2.0});
  const Delta2Certificate p3 = delta2(OrliczIntegrand::power(3.0), c, grid, 1000.0);
  CHECK(p3.verdict == Delta2Verdict::Holds);
  CHECK(p3.k == 8.0);
  for (double f : p3.f) CHECK(f == 0.0);

  const Delta2Certificate var = delta2(OrliczIntegrand::variable_exponent({2.0, 4.0}), c, grid, 1000.0);
  CHECK(var.verdict == Delta2Verdict::Holds);
  CHECK(var.k == 16.0);

  const Delta2Certificate e = delta2(OrliczIntegrand::exponential(), c, grid, 1000.0);
  CHECK(e.verdict == Delta2Verdict::FailsWithWitness);
  REQUIRE(e.witness.has_value());
  CHECK(e.witness->ratio.to_double() > 1000.0);
  // (e^{2t} - 1) / (e^t - 1) = e^t + 1 passes 1000 at t = ln 999.
  CHECK(e.witness->x[0] == doctest::Approx(std::log(999.0)).epsilon(0.05));

  const Delta2Certificate ball = delta2(OrliczIntegrand::ball_indicator(), c, grid, 1000.0);
  CHECK(ball.verdict == Delta2Verdict::FailsWithWitness);
}

TEST_CASE("evaluation points include a tail representative") {
  CHECK(evaluation_points(Carrier::finite({1.0, 1.0})) == std::vector<std::size_t>{0, 1});
  CHECK(evaluation_points(Carrier::tail({1.0, 1.0}, 1.0)) == std::vector<std::size_t>{0, 1, 2});
}
