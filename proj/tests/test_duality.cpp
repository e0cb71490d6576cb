#include <cmath>
#include <vector>

#include "doctest.h"
#include "orlicz_kit/duality.hpp"
#include "orlicz_kit/rng.hpp"

using namespace orlicz;

namespace {
const ExtReal kInf = ExtReal::pos_inf();
const SearchGrid kGrid = SearchGrid::uniform(-2.0, 2.0, 17);

PointIntegrand sq(double c, double coeff = 1.0) { return PointIntegrand::shifted_quadratic({c}, coeff); }
PointIntegrand ball() { return PointIntegrand::indicator_linear({0.0}, 1.0); }
}  // namespace

TEST_CASE("search grid") {
  CHECK(kGrid.size() == 17);
  CHECK(kGrid.origin() == std::optional<std::size_t>(8));
  CHECK(kGrid.node(16) == std::vector<double>{2.0});
  const SearchGrid g2 = SearchGrid::uniform(-1.0, 1.0, 3, 2);
  CHECK(g2.size() == 9);
  CHECK(g2.node(5) == std::vector<double>{0.0, 1.0});
  CHECK_FALSE(SearchGrid::uniform(0.5, 1.5, 3).origin().has_value());
}

TEST_CASE("point integrands and their conjugates") {
  const std::vector<double> x{1.5}, y{1.0};
  CHECK(sq(1.0)(x) == 0.25);
  CHECK(sq(1.0).conjugate(y) == 1.25);  // y c + y^2 / 4
  const auto ta = PointIntegrand::tilted_absolute(2.0);
  CHECK(ta(x) == 3.5);
  CHECK(ta.conjugate(std::vector<double>{0.5}) == -2.0);
  CHECK(ta.conjugate(std::vector<double>{1.5}).is_pos_inf());
  const auto il = PointIntegrand::indicator_linear({0.0}, 1.0, {1.0});
  CHECK(il(std::vector<double>{0.5}) == 0.5);
  CHECK(il(std::vector<double>{1.5}).is_pos_inf());
  CHECK(il.conjugate(std::vector<double>{3.0}) == 2.0);
  CHECK(ball().zero_set_support(std::vector<double>{-3.0}) == 3.0);
  const auto tilted = sq(0.0).tilted({2.0});
  CHECK(tilted(std::vector<double>{1.0}) == -1.0);
}

TEST_CASE("interchange: exact fit") {
  const Carrier c = Carrier::finite({1.0, 2.0, 3.0});
  const IntegrandSpec f = IntegrandSpec::make(c, {sq(1.0), sq(-1.0), sq(2.0)});
  const InterchangeResult r = interchange(f, kGrid);
  CHECK(r.lhs_separable == 0.0);
  CHECK(r.lhs_joint == 0.0);
  CHECK(r.rhs == 0.0);
  REQUIRE(r.minimizer.has_value());
  CHECK(r.minimizer->values == std::vector<std::vector<double>>{{1.0}, {-1.0}, {2.0}});
  CHECK(r.identity_holds);
  CHECK(r.minimizer_pointwise);
}

TEST_CASE("interchange: tilted absolute values") {
  const Carrier c = Carrier::finite({1.0, 2.0, 3.0});
  const IntegrandSpec f = IntegrandSpec::make(
      c, {PointIntegrand::tilted_absolute(1.0), PointIntegrand::tilted_absolute(0.0), PointIntegrand::tilted_absolute(2.0)});
  const InterchangeResult r = interchange(f, kGrid);
  CHECK(r.rhs == 7.0);
  CHECK(r.lhs_separable == 7.0);
  CHECK(r.lhs_joint == 7.0);
}

TEST_CASE("interchange: hypothesis violated at an infinite atom") {
  const Carrier c = Carrier::finite({1.0, kInf});
  const IntegrandSpec f = IntegrandSpec::make(c, {sq(0.0), PointIntegrand::tilted_absolute(-1.0)});
  const InterchangeResult r = interchange(f, kGrid);
  CHECK_FALSE(r.hypothesis_atoms);
  CHECK(r.rhs.is_neg_inf());
  CHECK(r.lhs_separable.is_neg_inf());
  // Vanishing on the atom does not help: f(0) = -1 there, weighted by infinity.
  InterchangeOptions opt;
  opt.space = SampleSpace::VanishingOnInfiniteAtoms;
  const InterchangeResult v = interchange(f, kGrid, opt);
  CHECK(v.lhs_separable.is_neg_inf());
}

TEST_CASE("interchange on a tail carrier with an infinite atom in the prefix") {
  const Carrier c = Carrier::tail({1.0, kInf}, 0.5);
  const IntegrandSpec f = IntegrandSpec::make(c, {sq(1.0), ball()}, sq(0.0));
  const InterchangeResult r = interchange(f, kGrid);
  CHECK(r.hypothesis_atoms);
  CHECK(r.rhs == 0.0);
  CHECK(r.identity_holds);
  REQUIRE(r.tail_min.has_value());
  CHECK(*r.tail_min == 0.0);
}

TEST_CASE("integral conjugate") {
  const Carrier c = Carrier::finite({1.0, 1.0});
  const IntegrandSpec f = IntegrandSpec::make(c, {sq(0.0, 0.5), sq(0.0, 0.5)});
  const IntegralConjugate r = integral_conjugate(f, SampledFunction::scalar(c, {1.0, 2.0}), kGrid);
  CHECK(r.via_pointwise == 2.5);
  CHECK(r.via_interchange == 2.5);
  CHECK(r.agree);
  const IntegralConjugate z = integral_conjugate(f, SampledFunction::scalar(c, {0.0, 0.0}), kGrid);
  CHECK(z.via_pointwise == 0.0);
  CHECK(z.via_interchange == 0.0);
}

TEST_CASE("integral subdifferential") {
  const Carrier c = Carrier::finite({1.0, 1.0});
  const auto abs = PointIntegrand::tilted_absolute(0.0);
  const IntegrandSpec fa = IntegrandSpec::make(c, {abs, abs});
  const IntegralSubdifferential a =
      integral_subdifferential(fa, SampledFunction::scalar(c, {0.0, 0.0}), SampledFunction::scalar(c, {0.5, 0.5}), kGrid);
  CHECK(a.member_fenchel_young);
  CHECK(a.member_direct);

  const IntegrandSpec fq = IntegrandSpec::make(c, {sq(0.0, 0.5), sq(0.0, 0.5)});
  const IntegralSubdifferential q =
      integral_subdifferential(fq, SampledFunction::scalar(c, {1.0, 2.0}), SampledFunction::scalar(c, {1.0, 2.0}), kGrid);
  CHECK(q.member_fenchel_young);
  CHECK(q.member_direct);

  const IntegralSubdifferential n =
      integral_subdifferential(fa, SampledFunction::scalar(c, {1.0, 0.0}), SampledFunction::scalar(c, {0.5, 0.0}), kGrid);
  CHECK_FALSE(n.member_fenchel_young);
  CHECK_FALSE(n.member_direct);
  CHECK(n.failing_point == std::optional<std::size_t>(0));
  REQUIRE(n.witness.has_value());
}

TEST_CASE("three-part conjugate") {
  // Finite carrier, l = l_a: the integral conjugate.
  const Carrier fin = Carrier::finite({1.0, 1.0});
  const IntegrandSpec f = IntegrandSpec::make(fin, {sq(0.0, 0.5), sq(0.0, 0.5)});
  FunctionalTriple la;
  la.density = SampledFunction::scalar(fin, {1.0, 2.0});
  const ThreePartConjugate t = conjugate_three_part(f, la, kGrid);
  CHECK(t.absolutely_continuous == integral_conjugate(f, la.density, kGrid).via_pointwise);
  CHECK(t.diffuse == 0.0);
  CHECK(t.pfa == 0.0);
  CHECK(t.total == 2.5);

  // Tail carrier, ball indicators, l = (0, 0, 2).
  const Carrier tail = Carrier::tail({1.0, 1.0}, 1.0);
  const IntegrandSpec fb = IntegrandSpec::make(tail, {ball(), ball()}, ball());
  FunctionalTriple lf;
  lf.density = SampledFunction::scalar(tail, {0.0, 0.0}, 0.0);
  lf.pfa = {2.0};
  const ThreePartConjugate p = conjugate_three_part(fb, lf, kGrid);
  CHECK(p.pfa == 2.0);
  CHECK(p.total == 2.0);

  // Infinite atom with diffuse weight d = -3.
  const Carrier atom = Carrier::finite({1.0, kInf});
  const IntegrandSpec fd = IntegrandSpec::make(atom, {sq(0.0), ball()});
  FunctionalTriple ld;
  ld.density = SampledFunction::scalar(atom, {0.0, 0.0});
  ld.diffuse = {{1, {-3.0}}};
  const ThreePartConjugate d = conjugate_three_part(fd, ld, kGrid);
  CHECK(d.diffuse == 3.0);
  CHECK(d.total == 3.0);
}

TEST_CASE("dual norm agreement") {
  const Carrier c = Carrier::finite({1.0, 1.0});
  const auto phi = OrliczIntegrand::power(2.0).scaled(2.0);
  const DualNormAgreement a = dual_norm_agreement(phi, SampledFunction::scalar(c, {3.0, 4.0}));
  CHECK(a.operator_norm == doctest::Approx(5.0).epsilon(1e-6));
  CHECK(a.dual_amemiya == doctest::Approx(5.0).epsilon(1e-6));
  REQUIRE(a.oracle.has_value());
  CHECK(*a.oracle == doctest::Approx(5.0).epsilon(1e-6));
  CHECK(a.agree);
  const DualNormAgreement z = dual_norm_agreement(phi, SampledFunction::scalar(c, {0.0, 0.0}));
  CHECK(z.operator_norm == 0.0);
  CHECK(z.dual_amemiya == 0.0);
}

TEST_CASE("property: dual norm agreement on random one-dimensional instances") {
  for (std::uint64_t s = 0; s < 6; ++s) {
    Rng rng(41, s);
    const std::size_t n = 1 + rng.below(4);
    std::vector<ExtReal> w(n);
    std::vector<double> v(n);
    for (auto& x : w) x = rng.dyadic(1, 16, 2);
    for (auto& x : v) x = rng.uniform(-2.0, 2.0);
    const auto phi = rng.below(2) == 0 ? OrliczIntegrand::power(1.5 + rng.uniform()) : OrliczIntegrand::exponential();
    const DualNormAgreement a = dual_norm_agreement(phi, SampledFunction::scalar(Carrier::finite(w), v), 1e-5, s);
    CHECK(a.agree);
  }
}

TEST_CASE("functional decomposition") {
  // Pure absolutely continuous functional.
  const Carrier fin = Carrier::finite({1.0, 0.5});
  FunctionalTriple la;
  la.density = SampledFunction::scalar(fin, {2.0, -4.0});
  const FunctionalDecomposition a = decompose_functional(la, default_probes(fin, 1));
  CHECK(a.exact_recovery);
  CHECK(a.recovered.diffuse.empty());
  CHECK(a.recovered.pfa.empty());
  CHECK(a.norms_add);

  // Pure pfa functional: l(u) = 3 u_inf.
  const Carrier tail = Carrier::tail({1.0, 0.5}, 0.25);
  FunctionalTriple lf;
  lf.density = SampledFunction::scalar(tail, {0.0, 0.0}, 0.0);
  lf.pfa = {3.0};
  CHECK(lf(SampledFunction::scalar(tail, {5.0, -1.0}, 2.0)) == 6.0);
  const FunctionalDecomposition f = decompose_functional(lf, default_probes(tail, 1));
  CHECK(f.exact_recovery);
  CHECK(f.charge_mismatches == 0);
  CHECK(f.norm_f == 3.0);

  // Mixed: an infinite atom plus a tail.
  const Carrier mixed = Carrier::tail({1.0, kInf}, 0.5);
  FunctionalTriple lm;
  lm.density = SampledFunction::scalar(mixed, {2.0, 0.0}, 0.0);
  lm.diffuse = {{1, {3.0}}};
  lm.pfa = {-1.0};
  const FunctionalDecomposition m = decompose_functional(lm, default_probes(mixed, 1));
  CHECK(m.spanning);
  CHECK(m.exact_recovery);
  CHECK(m.norm_a == 2.0);
  CHECK(m.norm_d == 3.0);
  CHECK(m.norm_f == 1.0);
  CHECK(m.norm_lower == 6.0);
  CHECK(m.norms_add);
  CHECK(m.norm_upper_sampled <= 6.0 * (1.0 + 1e-8));
}

TEST_CASE("reflexivity and linearity of the modular domain") {
  SamplingGrid grid;
  grid.min_decade = -3;
  grid.max_decade = 2;
  const Carrier c = Carrier::finite({1.0, 1.0});
  const ReflexivityReport p = reflexivity_linearity_check(OrliczIntegrand::power(2.0), c, grid);
  CHECK(p.dom_linear_phi);
  CHECK(p.dom_linear_conjugate);
  CHECK(p.delta2_phi.verdict == Delta2Verdict::Holds);
  CHECK(p.delta2_conjugate.verdict == Delta2Verdict::Holds);
  CHECK(p.implication_ok);

  const ReflexivityReport e = reflexivity_linearity_check(OrliczIntegrand::exponential(), c, grid);
  CHECK(e.delta2_phi.verdict == Delta2Verdict::FailsWithWitness);
  CHECK(e.dom_linear_phi);
  CHECK_FALSE(e.caveat.empty());
  CHECK(e.implication_ok);

  const ReflexivityReport b = reflexivity_linearity_check(OrliczIntegrand::ball_indicator(), c, grid);
  CHECK_FALSE(b.dom_linear_phi);
  CHECK(b.witness_phi.has_value());
  CHECK(b.implication_ok);
}
