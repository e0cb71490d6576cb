#include <cmath>
#include <string>

#include "instances.hpp"
#include "orlicz_kit/charges.hpp"
#include "orlicz_kit/checks.hpp"
#include "orlicz_kit/measure.hpp"
#include "orlicz_kit/norms.hpp"
#include "orlicz_kit/oracles.hpp"
#include "orlicz_kit/orlicz.hpp"
#include "tally.hpp"

namespace orlicz::checks {

namespace {

constexpr double kInf = INFINITY;

std::string at(std::size_t i) { return "instance " + std::to_string(i); }

/// Relative difference that treats matching infinities as equal.
double rel_diff(double a, double b) {
  if (a == b) return 0.0;
  return std::abs(a - b) / std::max(1.0, std::abs(b));
}

}  // namespace

CheckRecord integral_conventions() {
  Tally t("measure.integral_conventions", "exhausting integral: 0 * inf = 0 and +inf - inf = +inf");
  struct Case {
    Carrier c;
    std::vector<ExtReal> g;
    ExtReal expected;
  };
  const std::vector<Case> cases = {
      {Carrier::finite({1.0, 2.0}), {3.0, -1.0}, 1.0},
      {Carrier::finite({kInf, 1.0}), {0.0, 4.0}, 4.0},
      {Carrier::finite({kInf, kInf}), {1.0, -1.0}, ExtReal::pos_inf()},
      {Carrier::finite({kInf, 1.0}), {-2.0, 4.0}, ExtReal::neg_inf()},
      {Carrier::finite({0.0, 1.0}), {kInf, 4.0}, 4.0},
  };
  for (std::size_t i = 0; i < cases.size(); ++i) {
    t.instance();
    const ExtReal got = integrate(cases[i].c, cases[i].g);
    t.exact(got == cases[i].expected, got.to_double() - cases[i].expected.to_double(), at(i));
  }
  // measure examples, ids are 0-based
  t.instance();
  t.require(measure(Carrier::finite({1.0, kInf, 0.0}), MSet::of({1, 2})).is_pos_inf(), "inf atom in set");
  t.instance();
  t.require(measure(Carrier::finite({1.0, 2.0, 3.0}), MSet{}) == 0.0, "empty set");
  t.instance();
  t.require(measure(Carrier::tail({1.0, 0.5}, 0.25), MSet::cofinite({0})).is_pos_inf(), "cofinite tail set");
  t.instance();
  const PointClasses pc = classify_points(Carrier::finite({1.0, kInf, 0.0}));
  t.require(pc.null_points == std::vector<std::size_t>{2} && pc.finite_atoms == std::vector<std::size_t>{0} &&
                pc.infinite_atoms == std::vector<std::size_t>{1},
            "classification");
  return t.finish();
}

CheckRecord measure_additivity(std::uint64_t seed, std::size_t count) {
  Tally t("measure.additivity", "measure is finitely additive and monotone; sigma-finite iff no infinite atom");
  for (std::size_t k = 0; k < count; ++k) {
    Rng rng(seed, 1000 + k);
    const std::size_t n = 1 + rng.below(10);
    const Carrier c = instances::finite_carrier(rng, n, 0.2, 0.15);
    const std::uint64_t full = (std::uint64_t{1} << n) - 1;
    t.instance();
    // All disjoint pairs (a, b) with a | b = s, enumerated through sub-masks.
    for (std::uint64_t s = 0; s <= full; ++s) {
      const ExtReal ms = measure(c, MSet::from_mask(s));
      bool has_inf = false;
      for (std::size_t i = 0; i < n; ++i) has_inf = has_inf || (s >> i & 1U && c.weight(i).is_pos_inf());
      if (is_sigma_finite(c, MSet::from_mask(s)) == has_inf) t.require(false, at(k) + " sigma-finite");
      for (std::uint64_t a = s;; a = (a - 1) & s) {
        const ExtReal ma = measure(c, MSet::from_mask(a));
        const ExtReal sum = ma + measure(c, MSet::from_mask(s & ~a));
        if (!(sum == ms) || ma > ms) t.exact(false, sum.to_double() - ms.to_double(), at(k));
        if (a == 0) break;
      }
    }
  }
  return t.finish();
}

CheckRecord jordan_total_variation(std::uint64_t seed, std::size_t count, std::size_t max_points) {
  Tally t("charges.jordan", "||nu|| = ||nu+|| + ||nu-|| = sup over partitions of sum |nu(A_i)|");
  for (std::size_t k = 0; k < count; ++k) {
    Rng rng(seed, 2000 + k);
    const bool tail = rng.below(3) == 0;
    const std::size_t n = 1 + rng.below(tail ? max_points - 1 : max_points);
    std::vector<double> m(n);
    for (auto& x : m) x = rng.dyadic(-32, 32, 3);
    const Charge nu = tail ? Charge::on(Carrier::tail(std::vector<ExtReal>(n, 1.0), 0.5), m, rng.dyadic(-32, 32, 3))
                           : Charge::on(Carrier::finite(std::vector<ExtReal>(n, 1.0)), m);
    t.instance();
    const JordanParts j = jordan(nu);
    const double sum = j.positive.norm() + j.negative.norm();
    t.exact(sum == nu.norm(), sum - nu.norm(), at(k) + " additivity");
    t.exact(j.positive - j.negative == nu, 0.0, at(k) + " reconstruction");
    const double tv = oracle::total_variation(nu);
    t.exact(tv == nu.norm(), tv - nu.norm(), at(k) + " partition oracle");
  }
  return t.finish();
}

CheckRecord de_giorgi_oracle(std::uint64_t seed, std::size_t count, std::size_t max_points,
                             std::size_t restriction_max_points) {
  Tally t("charges.de_giorgi",
          "nu = nu_a + nu_d + nu_s with ||nu|| = ||nu_a|| + ||nu_d|| + ||nu_s||; restriction commutes with each projector");
  for (std::size_t k = 0; k < count; ++k) {
    Rng rng(seed, 3000 + k);
    // Every size from 1 to max_points is visited in turn.
    const std::size_t n = 1 + k % max_points;
    const Carrier mu = instances::finite_carrier(rng, n, 0.25, 0.25);
    std::vector<double> m(n);
    for (auto& x : m) x = rng.below(4) == 0 ? 0.0 : rng.dyadic(1, 64, 3);
    const Charge nu = Charge::on(mu, m);
    t.instance();

    const GiorgiParts p = de_giorgi(nu, mu);
    const oracle::GiorgiTables o = oracle::de_giorgi(nu, mu);
    for (std::size_t i = 0; i < n; ++i) {
      const double fast = p.absolutely_continuous.masses[i];
      t.exact(fast == o.absolutely_continuous[i], fast - o.absolutely_continuous[i], at(k) + " a.c. singleton");
    }
    const double ac_total = p.absolutely_continuous(MSet::all());
    t.exact(ac_total == o.absolutely_continuous_total, ac_total - o.absolutely_continuous_total, at(k) + " a.c. total");
    const std::uint64_t count_sets = std::uint64_t{1} << n;
    for (std::uint64_t a = 0; a < count_sets; ++a) {
      const MSet s = MSet::from_mask(a);
      const double d = p.diffuse(s), sg = p.singular(s);
      t.exact(d == o.diffuse[a], d - o.diffuse[a], at(k) + " diffuse");
      t.exact(sg == o.singular[a], sg - o.singular[a], at(k) + " singular");
    }
    const double parts = p.absolutely_continuous.norm() + p.diffuse.norm() + p.singular.norm();
    t.exact(parts == nu.norm(), parts - nu.norm(), at(k) + " norm additivity");
    t.exact(p.absolutely_continuous + p.diffuse + p.singular == nu, 0.0, at(k) + " reconstruction");
    t.require(is_absolutely_continuous(p.absolutely_continuous, mu) && is_diffuse(p.diffuse, mu) &&
                  is_singular(p.singular, mu),
              at(k) + " membership");
    const MSet sigma = sigma_finite_support(p);
    t.require(is_sigma_finite(mu, sigma), at(k) + " support not sigma-finite");

    if (n <= restriction_max_points) {
      for (std::uint64_t a = 0; a < count_sets; ++a) {
        const MSet b = MSet::from_mask(a);
        const GiorgiParts r = de_giorgi(nu.restricted(b), mu);
        t.exact(r.absolutely_continuous == p.absolutely_continuous.restricted(b) &&
                    r.diffuse == p.diffuse.restricted(b) && r.singular == p.singular.restricted(b),
                0.0, at(k) + " restriction");
        const double lhs = p.absolutely_continuous(b), rhs = p.absolutely_continuous(b.intersect(sigma));
        t.exact(lhs == rhs, lhs - rhs, at(k) + " sigma-finite support");
      }
    }
  }
  return t.finish();
}

CheckRecord hewitt_yosida_additivity(std::uint64_t seed, std::size_t count) {
  Tally t("charges.hewitt_yosida", "||nu|| = ||nu_sigma|| + ||nu_f||, and (nu_f)_B = (nu_B)_f");
  for (std::size_t k = 0; k < count; ++k) {
    Rng rng(seed, 4000 + k);
    const std::size_t n = rng.below(9);
    std::vector<ExtReal> prefix(n);
    for (auto& x : prefix) x = rng.dyadic(1, 16, 2);
    const Carrier c = Carrier::tail(prefix, rng.dyadic(1, 8, 3));
    std::vector<double> m(n);
    for (auto& x : m) x = rng.dyadic(-64, 64, 4);
    const Charge nu = Charge::on(c, m, rng.below(4) == 0 ? 0.0 : rng.dyadic(-64, 64, 4));
    t.instance();
    const HewittYosidaParts hy = hewitt_yosida(nu);
    const double sum = hy.sigma_additive.norm() + hy.purely_finitely_additive.norm();
    t.exact(sum == nu.norm(), sum - nu.norm(), at(k) + " norm additivity");
    t.exact(hy.sigma_additive + hy.purely_finitely_additive == nu, 0.0, at(k) + " reconstruction");

    // Restrictions to finite sets and to cofinite sets.
    for (int r = 0; r < 8; ++r) {
      std::vector<std::size_t> ids;
      for (std::size_t i = 0; i < n + 2; ++i) {
        if (rng.below(2) == 0) ids.push_back(i);
      }
      const MSet b = rng.below(2) == 0 ? MSet::of(ids) : MSet::cofinite(ids);
      const HewittYosidaParts rb = hewitt_yosida(nu.restricted(b));
      t.exact(rb.purely_finitely_additive == hy.purely_finitely_additive.restricted(b) &&
                  rb.sigma_additive == hy.sigma_additive.restricted(b),
              0.0, at(k) + " restriction");
    }
  }
  return t.finish();
}

CheckRecord charge_examples() {
  Tally t("charges.examples", "Jordan, Hewitt-Yosida and de Giorgi parts of small hand instances");
  const Carrier two = Carrier::finite({1.0, 1.0});
  t.instance();
  const JordanParts j = jordan(Charge::on(two, {3.0, -2.0}));
  t.require(j.positive.masses == std::vector<double>{3.0, 0.0} && j.negative.masses == std::vector<double>{0.0, 2.0} &&
                j.total_variation == 5.0,
            "jordan sign split");
  t.instance();
  const JordanParts jl = jordan(Charge::on(Carrier::tail({1.0}, 1.0), {0.0}, -4.0));
  t.require(jl.positive.lambda == 0.0 && jl.negative.lambda == 4.0 && jl.total_variation == 4.0, "jordan lambda");
  t.instance();
  const HewittYosidaParts hy = hewitt_yosida(Charge::on(Carrier::tail({1.0, 1.0, 1.0}, 1.0), {1.0, 0.5, 0.25}, 5.0));
  t.require(hy.sigma_additive.norm() == 1.75 && hy.purely_finitely_additive.norm() == 5.0, "hewitt-yosida norms");
  t.instance();
  const Charge nu2 = Charge::on(Carrier::tail({1.0, 1.0}, 1.0), {2.0, -2.0}, -1.0);
  for (const MSet& b : {MSet::of({0, 1}), MSet::cofinite({0})}) {
    t.require(hewitt_yosida(nu2).purely_finitely_additive.restricted(b) ==
                  hewitt_yosida(nu2.restricted(b)).purely_finitely_additive,
              "hewitt-yosida restriction");
  }
  t.instance();
  const Carrier mu = Carrier::finite({1.0, kInf, 0.0});
  const GiorgiParts p = de_giorgi(Charge::on(mu, {2.0, 3.0, 5.0}), mu);
  t.require(p.absolutely_continuous.masses == std::vector<double>{2.0, 0.0, 0.0} &&
                p.diffuse.masses == std::vector<double>{0.0, 3.0, 0.0} &&
                p.singular.masses == std::vector<double>{0.0, 0.0, 5.0} && p.density[0] == 2.0 && !p.density[1] &&
                sigma_finite_support(p) == MSet::of({0}),
            "de giorgi three points");
  return t.finish();
}

CheckRecord catalog_axioms() {
  Tally t("orlicz.catalog_axioms", "phi(0) = 0, even, convex, vanishing at 0 and coercive for every catalog entry");
  for (std::size_t dim : {1, 2}) {
    const std::vector<OrliczIntegrand> catalog = {
        OrliczIntegrand::power(1.5, dim),      OrliczIntegrand::power(2.0, dim),
        OrliczIntegrand::power(3.0, dim),      OrliczIntegrand::absolute(dim),
        OrliczIntegrand::exponential(dim),     OrliczIntegrand::ball_indicator(dim),
        OrliczIntegrand::variable_exponent({2.0, 4.0}, dim)};
    SamplingGrid grid;
    grid.dim = dim;
    for (const auto& phi : catalog) {
      t.instance();
      const AxiomReport r = check_axioms(phi, grid, {0, 1});
      for (const auto& c : r.checks) t.exact(c.passed, c.worst, phi.label() + " " + c.name + " " + c.witness);
    }
  }
  // A constructed violation must be caught.
  t.instance();
  const auto bad = OrliczIntegrand::radial("r^2 - 1", 1, [](std::size_t, double r) -> ExtReal { return r * r - 1.0; });
  t.require(!check_axioms(bad, SamplingGrid{}).get("zero_at_origin").passed, "shifted square accepted");
  return t.finish();
}

CheckRecord coercivity() {
  Tally t("orlicz.coercivity", "phi -> inf at inf iff inf over some sphere > 0 iff liminf phi(x)/|x| > 0");
  const SamplingGrid grid;
  for (const auto& phi : {OrliczIntegrand::power(2.0), OrliczIntegrand::absolute(), OrliczIntegrand::exponential(),
                          OrliczIntegrand::ball_indicator()}) {
    t.instance();
    const CoercivityTriple c = coercivity_equivalence(phi, grid);
    t.require(c.precondition_ok && c.agree() && c.tends_to_infinity, phi.label());
  }
  t.instance();
  const CoercivityTriple abs = coercivity_equivalence(OrliczIntegrand::absolute(), grid);
  t.exact(abs.liminf_quotient == 1.0, abs.liminf_quotient - 1.0, "abs liminf quotient");
  t.instance();
  const auto log1p = OrliczIntegrand::radial("ln(1+r)", 1, [](std::size_t, double r) -> ExtReal { return std::log1p(r); });
  t.require(!coercivity_equivalence(log1p, grid).precondition_ok, "concave profile accepted");
  return t.finish();
}

CheckRecord delta2_classification() {
  Tally t("orlicz.delta2", "phi(2x) <= k phi(x) + f: power p gives k = 2^p, exponential fails, exponents {2,4} give 16");
  const SamplingGrid grid;
  const Carrier c = Carrier::finite({1.0, 1.0});
  for (double p : {2.0, 3.0, 4.0}) {
    t.instance();
    const Delta2Certificate d = delta2(OrliczIntegrand::power(p), c, grid, 1000.0);
    const double k = std::exp2(p);
    t.exact(d.verdict == Delta2Verdict::Holds && d.k == k, d.k - k, "power " + format_number(p));
    for (double f : d.f) t.exact(f == 0.0, f, "power residual");
  }
  t.instance();
  const Delta2Certificate e = delta2(OrliczIntegrand::exponential(), c, grid, 1000.0);
  t.require(e.verdict == Delta2Verdict::FailsWithWitness && e.witness && e.witness->ratio > 1000.0,
            "exponential not rejected");
  if (e.witness) {
    // e^(2t) - 1 over e^t - 1 is e^t + 1, so the first offender sits one grid step past ln 999.
    const double r = euclidean_norm(e.witness->x);
    t.require(r > std::log(999.0) && r < std::log(999.0) * std::pow(10.0, 1.0 / grid.per_decade),
              "exponential witness radius " + format_number(r));
  }
  t.instance();
  const Delta2Certificate v = delta2(OrliczIntegrand::variable_exponent({2.0, 4.0}), c, grid, 1000.0);
  t.exact(v.verdict == Delta2Verdict::Holds && v.k == 16.0, v.k - 16.0, "variable exponent");
  return t.finish();
}

CheckRecord norm_examples(double tol) {
  Tally t("norms.examples", "modular, Luxemburg and Amemiya norms of small hand instances", tol);
  const Carrier c = Carrier::finite({1.0, 1.0});
  const auto sq = OrliczIntegrand::power(2.0).scaled(2.0);
  const auto u = SampledFunction::scalar(c, {3.0, 4.0});
  auto close = [&](double got, double want, const std::string& what) {
    t.instance();
    t.margin(-std::abs(got - want), std::max(1.0, std::abs(want)), what);
  };
  close(modular(sq, u).to_double(), 25.0, "modular");
  close(luxemburg_norm(sq, u).value.to_double(), 5.0, "luxemburg");
  close(amemiya_norm(sq, u).value.to_double(), 10.0, "amemiya");
  close(dual_norms(sq, u).luxemburg.value.to_double(), 2.5, "dual luxemburg");
  close(modular(sq, SampledFunction::scalar(Carrier::finite({1.0, kInf}), {1.0, 0.0})).to_double(), 1.0,
        "modular with inf atom");
  close(luxemburg_norm(OrliczIntegrand::ball_indicator(), SampledFunction::scalar(Carrier::finite({1.0, 1.0, 1.0}),
                                                                                  {1.0, -2.0, 0.5}))
            .value.to_double(),
        2.0, "ball luxemburg");
  close(luxemburg_norm(sq, SampledFunction::scalar(c, {0.0, 0.0})).value.to_double(), 0.0, "zero");
  return t.finish();
}

namespace {

/// Random (phi, u) on a finite carrier or a tail carrier with eventual 0.
std::pair<OrliczIntegrand, SampledFunction> random_phi_u(Rng& rng) {
  const std::size_t dim = 1 + rng.below(2);
  const std::size_t n = 1 + rng.below(8);
  const bool tail = rng.below(5) == 0;
  Carrier c = tail ? Carrier::tail(std::vector<ExtReal>(n, rng.dyadic(1, 8, 2)), 0.5)
                   : instances::finite_carrier(rng, n, 0.1, 0.0);
  const auto phi = instances::catalog(rng, dim, n);
  const double scale = std::exp2(static_cast<double>(rng.integer(-4, 4)));
  auto u = instances::function(rng, c, dim, scale);
  if (tail) u.eventual = std::vector<double>(dim, 0.0);
  return {phi, u};
}

}  // namespace

CheckRecord norm_sandwich(std::uint64_t seed, std::size_t count, double tol) {
  Tally t("norms.sandwich", "||u|| <= |||u||| <= 2 ||u||", tol);
  for (std::size_t k = 0; k < count; ++k) {
    Rng rng(seed, 5000 + k);
    const auto [phi, u] = random_phi_u(rng);
    t.instance();
    const double lux = luxemburg_norm(phi, u).value.to_double();
    const double am = amemiya_norm(phi, u).value.to_double();
    const double scale = std::max(1.0, lux);
    t.margin(am - lux, scale, at(k) + " lower (" + phi.label() + ")");
    t.margin(2.0 * lux - am, scale, at(k) + " upper (" + phi.label() + ")");
  }
  return t.finish();
}

CheckRecord luxemburg_power(std::uint64_t seed, std::size_t count, double tol) {
  Tally t("norms.luxemburg_power", "power integrand: ||u|| = (sum w |u|^p / p)^(1/p)", tol);
  for (std::size_t k = 0; k < count; ++k) {
    Rng rng(seed, 6000 + k);
    const std::size_t dim = 1 + rng.below(2);
    const std::size_t n = 1 + rng.below(10);
    const double p = rng.uniform(1.1, 6.0);
    const Carrier c = instances::finite_carrier(rng, n, 0.1, 0.0);
    const auto u = instances::function(rng, c, dim, std::exp2(static_cast<double>(rng.integer(-6, 6))));
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += c.weight(i).value() * std::pow(euclidean_norm(u.values[i]), p) / p;
    const double closed = std::pow(s, 1.0 / p);
    t.instance();
    const double got = luxemburg_norm(OrliczIntegrand::power(p, dim), u).value.to_double();
    t.margin(-rel_diff(got, closed), 1.0, at(k));
  }
  return t.finish();
}

CheckRecord modular_lemma(std::uint64_t seed, std::size_t count, double tol) {
  Tally t("norms.modular_lemma", "(a) ||u|| <= 1 => I(u) <= ||u||; (b) ||u|| > 1 => I(u) >= ||u||; (c) ||u|| <= 1 + I(u)",
          tol);
  for (std::size_t k = 0; k < count; ++k) {
    Rng rng(seed, 7000 + k);
    const auto [phi, u] = random_phi_u(rng);
    t.instance();
    const ModularNormCheck m = modular_norm_inequalities(phi, u, tol);
    const double scale = std::max(1.0, m.norm);
    if (m.a_applies) t.margin(m.slack_a, scale, at(k) + " (a)");
    if (m.b_applies) t.margin(m.slack_b, scale, at(k) + " (b)");
    t.margin(m.slack_c, scale, at(k) + " (c)");
  }
  return t.finish();
}

CheckRecord hoelder_random(std::uint64_t seed, std::size_t count, double tol) {
  Tally t("norms.hoelder", "int |<v, u>| <= 2 ||v||_phi* ||u||_phi", tol);
  for (std::size_t k = 0; k < count; ++k) {
    Rng rng(seed, 8000 + k);
    auto [phi, u] = random_phi_u(rng);
    auto v = instances::function(rng, u.carrier, u.dimension(), std::exp2(static_cast<double>(rng.integer(-3, 3))));
    if (u.eventual) v.eventual = std::vector<double>(u.dimension(), 0.0);
    t.instance();
    const HoelderCheck h = hoelder(phi, u, v, tol);
    const double rhs = h.rhs.to_double(), lhs = h.lhs.to_double();
    t.margin(rhs - lhs, std::max(1.0, rhs), at(k) + " (" + phi.label() + ")");
  }
  return t.finish();
}

CheckRecord hoelder_aligned(double tol) {
  Tally t("norms.hoelder_aligned", "equality in the Hoelder bound for aligned quadratics", tol);
  const Carrier c = Carrier::finite({1.0, 1.0});
  const auto sq = OrliczIntegrand::power(2.0).scaled(2.0);
  const auto u = SampledFunction::scalar(c, {3.0, 4.0});
  t.instance();
  const HoelderCheck h = hoelder(sq, u, u, tol);
  t.margin(-std::abs(h.lhs.to_double() - 25.0), 25.0, "lhs");
  t.margin(-std::abs(h.rhs.to_double() - 25.0), 25.0, "rhs");
  // Pointwise orthogonal values give lhs = 0.
  t.instance();
  const auto u2 = SampledFunction::on(c, {{1.0, 0.0}, {0.0, 2.0}});
  const auto v2 = SampledFunction::on(c, {{0.0, 3.0}, {5.0, 0.0}});
  t.exact(hoelder(OrliczIntegrand::power(2.0, 2), u2, v2, tol).lhs == 0.0, 0.0, "orthogonal");
  return t.finish();
}

CheckRecord embedding(std::uint64_t seed, std::size_t count, double tol) {
  Tally t("norms.embedding", "L_inf(Omega_eps) -> L_phi(Omega_eps) -> L_1(Omega_eps) with explicit constants", tol);
  const Carrier c = Carrier::finite({1.0, 1.0});
  const SamplingGrid grid;
  const auto sq = OrliczIntegrand::power(2.0).scaled(2.0);
  t.instance();
  const auto k = embedding_constants(sq, c, 1.0, grid);
  t.require(k && k->omega_eps == std::vector<std::size_t>{0, 1} && k->c_inf == 3.0 && k->c_1 == 3.0,
            "x^2 constants at eps = 1");
  // Omega_eps grows as eps shrinks.
  for (double eps : {0.5, 0.25, 0.125}) {
    t.instance();
    const auto ke = embedding_constants(sq, c, eps, grid);
    t.require(ke && ke->omega_eps.size() == 2, "eps " + format_number(eps));
  }
  // A point with a large coefficient drops out for eps near 1.
  const auto steep = OrliczIntegrand::variable_exponent({2.0, 2.0}).scaled(std::vector<double>{1.0, 64.0});
  t.instance();
  const auto ks = embedding_constants(steep, c, 0.5, grid);
  t.require(ks && ks->omega_eps == std::vector<std::size_t>{0}, "extreme point kept");
  if (k) {
    for (std::size_t i = 0; i < count; ++i) {
      Rng rng(seed, 9000 + i);
      const auto u = instances::function(rng, c, 1, std::exp2(static_cast<double>(rng.integer(-4, 4))));
      t.instance();
      const EmbeddingCheck e = check_embedding(sq, *k, u);
      t.margin(e.slack_inf, std::max(1.0, e.amemiya_phi), at(i) + " sup bound");
      t.margin(e.slack_1, std::max(1.0, e.amemiya_1), at(i) + " L1 bound");
    }
  }
  return t.finish();
}

}  // namespace orlicz::checks
