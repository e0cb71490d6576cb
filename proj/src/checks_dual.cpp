#include <cmath>
#include <string>

#include "instances.hpp"
#include "orlicz_kit/checks.hpp"
#include "orlicz_kit/conjugation.hpp"
#include "orlicz_kit/duality.hpp"
#include "orlicz_kit/oracles.hpp"
#include "tally.hpp"

namespace orlicz::checks {

namespace {

constexpr double kInf = INFINITY;

std::string at(std::size_t i) { return "instance " + std::to_string(i); }

std::vector<double> uniform_axis(double lo, double hi, std::size_t n) {
  std::vector<double> a(n);
  for (std::size_t k = 0; k < n; ++k) a[k] = lo + (hi - lo) * static_cast<double>(k) / static_cast<double>(n - 1);
  return a;
}

/// Strictly increasing dyadic nodes with dyadic values, a few of them inf.
GridFunction random_grid_1d(Rng& rng, std::size_t n, double p_inf) {
  std::vector<double> axis(n);
  double x = rng.dyadic(-256, 0, 4);
  for (auto& a : axis) {
    a = x;
    x += rng.dyadic(1, 32, 4);
  }
  std::vector<ExtReal> v(n);
  for (auto& y : v) y = rng.uniform() < p_inf ? ExtReal::pos_inf() : ExtReal(rng.dyadic(-512, 512, 5));
  v[rng.below(n)] = rng.dyadic(-512, 512, 5);
  return GridFunction::make({axis}, v);
}

/// A node of the [-2, 2] search grid (step 1/8 in 1-d, 1/4 in 2-d) with
/// coordinates in [lo/8, hi/8].
std::vector<double> grid_node(Rng& rng, std::size_t dim, int lo, int hi) {
  std::vector<double> x(dim);
  for (auto& v : x) v = dim == 1 ? rng.dyadic(lo, hi, 3) : rng.dyadic(lo / 2, hi / 2, 2);
  return x;
}

bool same_table(const ConjugateTable& a, const ConjugateTable& b) {
  return a.values == b.values && a.within_slope_range == b.within_slope_range;
}

}  // namespace

CheckRecord conjugate_transform_exact(std::uint64_t seed, std::size_t count) {
  Tally t("conjugation.transform_exact", "phi*(s) = sup_x <s, x> - phi(x): linear-time transform equals the sup oracle");
  for (std::size_t k = 0; k < count; ++k) {
    Rng rng(seed, 10000 + k);
    const GridFunction g = random_grid_1d(rng, 2 + rng.below(199), k % 3 == 0 ? 0.1 : 0.0);
    std::vector<double> dual;
    if (k % 2 == 0) {
      dual = default_dual_axis(g, 2 + rng.below(299));
    } else {
      double s = rng.dyadic(-4096, 0, 6);
      for (std::size_t i = 0, m = 1 + rng.below(300); i < m; ++i, s += rng.dyadic(1, 64, 6)) dual.push_back(s);
    }
    t.instance();
    t.exact(same_table(conjugate_1d(g, dual), grid_sup(g, {dual})), 0.0, at(k));
  }
  // e^|x| - 1 sampled on [-5, 5].
  t.instance();
  const auto e = GridFunction::sample({uniform_axis(-5.0, 5.0, 1001)},
                                      [](std::span<const double> x) -> ExtReal { return std::expm1(std::abs(x[0])); });
  const auto dual = default_dual_axis(e, 777);
  t.exact(same_table(conjugate_1d(e, dual), grid_sup(e, {dual})), 0.0, "exponential");
  return t.finish();
}

CheckRecord biconjugate(std::uint64_t seed, std::size_t count) {
  Tally t("conjugation.biconjugate", "phi** = phi for convex samples, within h_s times the primal run of one dual cell", 1e-12);
  for (std::size_t k = 0; k < count; ++k) {
    Rng rng(seed, 11000 + k);
    const std::size_t n = 2 + rng.below(300);
    const double L = rng.uniform(0.5, 8.0);
    const double a = rng.uniform(0.0, 2.0), b = rng.uniform(0.0, 3.0), c = rng.uniform(-L, L), d = rng.uniform(-2.0, 2.0);
    const double e = rng.uniform(0.0, 0.5);
    const auto g = GridFunction::sample({uniform_axis(-L, L, n)}, [&](std::span<const double> x) -> ExtReal {
      return a * x[0] * x[0] + b * std::abs(x[0] - c) + d * x[0] + e * std::expm1(std::abs(x[0]));
    });
    const std::size_t m = 2 + rng.below(2000);
    const auto dual = default_dual_axis(g, m);
    const ConjugateTable tab = conjugate_1d(g, dual);
    const auto bc = biconjugate_1d(tab);
    const auto& xs = g.axes[0];
    const double hs = (dual.back() - dual.front()) / static_cast<double>(m - 1);
    // The nearest dual slope below a node's left slope supports the samples
    // at some x_k; every segment between x_k and the node has slope within
    // h_s of it, so the gap is at most h_s times the widest such run. With
    // a dual step finer than the slope increments this is h_x * h_s.
    std::vector<double> slope(n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i) {
      slope[i] = (g.values[i + 1].value() - g.values[i].value()) / (xs[i + 1] - xs[i]);
    }
    double run = 0.0;
    for (std::size_t lo = 0, hi = 0; hi + 1 < n; ++hi) {
      while (slope[hi] - slope[lo] > hs) ++lo;
      run = std::max(run, xs[hi + 1] - xs[lo]);
    }
    const double bound = hs * run;
    t.instance();
    for (std::size_t i = 0; i < n; ++i) {
      const double gi = g.values[i].value(), bi = bc[i].to_double();
      const double scale = std::max(1.0, std::abs(gi));
      t.margin(gi - bi, scale, at(k) + " biconjugate above input");
      t.margin(bound - (gi - bi), scale, at(k) + " gap above h_s times the slope run");
    }
  }
  return t.finish();
}

CheckRecord numeric_conjugate_axioms() {
  Tally t("conjugation.numeric_axioms", "numerical conjugates of catalog Orlicz functions are Orlicz functions");
  const std::vector<OrliczIntegrand> catalog = {OrliczIntegrand::power(1.5), OrliczIntegrand::power(2.0),
                                                OrliczIntegrand::power(3.0), OrliczIntegrand::absolute(),
                                                OrliczIntegrand::exponential(), OrliczIntegrand::ball_indicator(),
                                                OrliczIntegrand::variable_exponent({2.0, 4.0})};
  SamplingGrid grid;
  grid.min_decade = -3;
  grid.max_decade = 1;
  for (const auto& phi : catalog) {
    t.instance();
    const OrliczIntegrand num = with_numeric_conjugate(phi, 20.0, {0, 1}, 2048).conjugate_integrand();
    const AxiomReport r = check_axioms(num, grid, {0, 1}, 1e-9);
    for (const auto& c : r.checks) t.exact(c.passed, c.worst, phi.label() + "* " + c.name + " " + c.witness);
  }
  return t.finish();
}

CheckRecord conjugate_examples() {
  Tally t("conjugation.examples", "self-conjugate quadratic, indicator conjugate of |x|, Fenchel-Young at sample points");
  {
    t.instance();
    const double h = 0.01;
    const auto g = GridFunction::sample({uniform_axis(-5.0, 5.0, 1001)},
                                        [](std::span<const double> x) -> ExtReal { return 0.5 * x[0] * x[0]; });
    const auto dual = uniform_axis(-3.0, 3.0, 601);
    const ConjugateTable tab = conjugate_1d(g, dual);
    for (std::size_t j = 0; j < dual.size(); ++j) {
      const double err = std::abs(tab.values[j].value() - 0.5 * dual[j] * dual[j]);
      t.margin(h * h - err, 1.0, "x^2/2 at s = " + format_number(dual[j]));
    }
  }
  {
    t.instance();
    const auto g = GridFunction::sample({uniform_axis(-5.0, 5.0, 41)},
                                        [](std::span<const double> x) -> ExtReal { return std::abs(x[0]); });
    const auto dual = uniform_axis(-2.0, 2.0, 17);
    const ConjugateTable tab = conjugate_1d(g, dual);
    for (std::size_t j = 0; j < dual.size(); ++j) {
      const bool inside = std::abs(dual[j]) <= 1.0;
      if (inside) t.exact(tab.values[j] == 0.0, tab.values[j].to_double(), "|x| inside");
      t.require(tab.within_slope_range[j] == inside, "|x| flag at s = " + format_number(dual[j]));
    }
  }
  return t.finish();
}

CheckRecord radial_conjugates(std::uint64_t seed) {
  Tally t("conjugation.radial", "phi*(x') = psi*(|x'|) for radial phi");
  const auto radii = uniform_axis(0.0, 3.0, 61);
  {
    t.instance();
    const RadialConjugate r = conjugate_radial(OrliczIntegrand::power(2.0), radii);
    for (std::size_t j = 0; j < radii.size(); ++j) {
      const double err = std::abs(r.values[j].to_double() - 0.5 * radii[j] * radii[j]);
      t.margin(r.primal_step * r.primal_step - err, 1.0, "power 2 at " + format_number(radii[j]));
    }
  }
  {
    t.instance();
    const RadialConjugate r = conjugate_radial(OrliczIntegrand::ball_indicator(), radii);
    for (std::size_t j = 0; j < radii.size(); ++j) {
      const double err = std::abs(r.values[j].to_double() - radii[j]);
      t.margin(r.primal_step * radii[j] - err, 1.0, "ball at " + format_number(radii[j]));
    }
  }
  {
    // Against a 2-d grid sup in random directions.
    t.instance();
    const double R = 4.0;
    const std::size_t n = 201;
    const double h = 2.0 * R / static_cast<double>(n - 1);
    const auto phi = OrliczIntegrand::exponential(2);
    const auto g = GridFunction::sample({uniform_axis(-R, R, n), uniform_axis(-R, R, n)},
                                        [&](std::span<const double> x) { return phi(0, x); });
    Rng rng(seed, 12000);
    std::vector<double> s_list;
    for (int i = 0; i < 12; ++i) s_list.push_back(rng.uniform(0.0, 3.0));
    const RadialConjugate r = conjugate_radial(phi, [&] {
      auto v = s_list;
      v.insert(v.begin(), 0.0);
      std::sort(v.begin(), v.end());
      return v;
    }());
    for (double s : s_list) {
      const double theta = rng.uniform(0.0, 2.0 * M_PI);
      const std::vector<double> y{s * std::cos(theta), s * std::sin(theta)};
      const ConjugateTable oracle = grid_sup(g, {{y[0]}, {y[1]}});
      const auto it = std::find(r.radii.begin(), r.radii.end(), s);
      const double radial = r.values[static_cast<std::size_t>(it - r.radii.begin())].to_double();
      const double err = std::abs(radial - oracle.values[0].to_double());
      t.margin((1.0 + s) * h * h - err, 1.0, "exponential at s = " + format_number(s));
    }
  }
  return t.finish();
}

CheckRecord conjugate_bounds() {
  Tally t("conjugation.quantitative_bounds", "|x'| < s => phi*(x') <= r|x'|, and phi*(x') >= delta|x'| - eps");
  const SamplingGrid grid;
  {
    t.instance();
    const ConjugateBounds b = quantitative_conjugate_bounds(OrliczIntegrand::power(2.0), grid, 0, 2.0);
    t.exact(b.s == 1.0, b.s - 1.0, "power 2: s at r = 2");
    t.require(b.upper_ok && b.lower_ok, "power 2 bounds");
  }
  for (const auto& phi : {OrliczIntegrand::absolute(), OrliczIntegrand::exponential(), OrliczIntegrand::power(3.0)}) {
    t.instance();
    const ConjugateBounds b = quantitative_conjugate_bounds(phi, grid);
    t.require(b.s > 0.0 && b.upper_ok && b.lower_ok, phi.label());
  }
  return t.finish();
}

CheckRecord subdifferential_examples() {
  Tally t("conjugation.subdifferential", "x' in d phi(x) iff phi(x) + phi*(x') = <x', x>");
  const auto sq = OrliczIntegrand::power(2.0);
  const auto abs = OrliczIntegrand::absolute();
  t.instance();
  const auto a = subdifferential_check(sq, 0, std::vector<double>{3.0}, std::vector<double>{3.0});
  t.require(a.member && a.gap == 0.0, "gradient of x^2/2");
  t.instance();
  const auto b = subdifferential_check(abs, 0, std::vector<double>{0.0}, std::vector<double>{0.5});
  t.require(b.member, "0.5 in d|.|(0)");
  t.instance();
  const auto c = subdifferential_check(abs, 0, std::vector<double>{1.0}, std::vector<double>{0.5});
  t.require(!c.member && c.gap == 0.5, "0.5 not in d|.|(1)");
  return t.finish();
}

CheckRecord lipschitz(std::uint64_t seed, std::size_t count) {
  Tally t("conjugation.lipschitz", "f_lambda is lambda-Lipschitz, f_lambda <= g, nondecreasing in lambda, f_lambda -> g");
  for (std::size_t k = 0; k < count; ++k) {
    Rng rng(seed, 13000 + k);
    const std::size_t n = 2 + rng.below(199);
    const GridFunction g = random_grid_1d(rng, n, 0.2);
    const double lambda = rng.dyadic(1, 256, 4);
    const GridFunction f = lipschitz_regularize(g, lambda);
    const GridFunction f2 = lipschitz_regularize(g, 2.0 * lambda);
    t.instance();
    t.exact(lipschitz_violations(f, lambda) == 0, 0.0, at(k) + " adjacent pairs");
    if (n <= 64) t.exact(lipschitz_violations(f, lambda, true) == 0, 0.0, at(k) + " all pairs");
    t.exact(f.values == oracle::lipschitz_envelope(g, lambda).values, 0.0, at(k) + " envelope oracle");
    for (std::size_t i = 0; i < n; ++i) {
      t.exact(f.values[i] <= g.values[i], (f.values[i] - g.values[i]).to_double(), at(k) + " below g");
      t.exact(f.values[i] <= f2.values[i], (f.values[i] - f2.values[i]).to_double(), at(k) + " monotone");
    }
    const GridFunction big = lipschitz_regularize(g, 0x1p40);
    for (std::size_t i = 0; i < n; ++i) {
      if (g.values[i].is_finite()) t.exact(big.values[i] == g.values[i], 0.0, at(k) + " large lambda limit");
    }
  }
  // Cone envelope of the indicator of {0}.
  t.instance();
  const auto axis = uniform_axis(-1.0, 1.0, 33);
  const auto ind = GridFunction::sample({axis}, [](std::span<const double> x) -> ExtReal {
    return x[0] == 0.0 ? ExtReal(0.0) : ExtReal::pos_inf();
  });
  const GridFunction cone = lipschitz_regularize(ind, 2.0);
  for (std::size_t i = 0; i < axis.size(); ++i) {
    t.exact(cone.values[i] == 2.0 * std::abs(axis[i]), 0.0, "cone at " + format_number(axis[i]));
  }
  return t.finish();
}

namespace {

/// Random point integrand. At infinite atoms and on the tail the hypothesis
/// inf f >= 0 is kept; `zero_at_origin` also forces f(0) = 0 = min f.
PointIntegrand random_point(Rng& rng, std::size_t dim, bool hypothesis, bool zero_at_origin) {
  auto node = [&](int lo, int hi) {
    std::vector<double> c(dim);
    for (auto& x : c) x = rng.dyadic(lo, hi, 3);
    return c;
  };
  const std::vector<double> origin(dim, 0.0);
  switch (rng.below(3)) {
    case 0:
      return PointIntegrand::shifted_quadratic(zero_at_origin ? origin : node(-16, 16), rng.dyadic(1, 8, 2));
    case 1:
      return PointIntegrand::tilted_absolute(zero_at_origin ? 0.0 : hypothesis ? rng.dyadic(0, 8, 2) : rng.dyadic(-8, 8, 2),
                                             dim);
    default: {
      std::vector<double> a;
      if (!hypothesis) a = node(-8, 8);
      return PointIntegrand::indicator_linear(zero_at_origin ? origin : node(-8, 8), rng.dyadic(2, 8, 2), a);
    }
  }
}

Carrier random_duality_carrier(Rng& rng, std::size_t n, bool allow_tail, bool allow_inf) {
  if (allow_tail && rng.below(3) == 0) {
    std::vector<ExtReal> prefix(n);
    for (auto& w : prefix) w = allow_inf && rng.below(5) == 0 ? ExtReal::pos_inf() : ExtReal(rng.dyadic(1, 16, 2));
    return Carrier::tail(prefix, rng.dyadic(1, 8, 2));
  }
  return instances::finite_carrier(rng, n, 0.15, allow_inf ? 0.2 : 0.0);
}

}  // namespace

CheckRecord interchange(std::uint64_t seed, std::size_t count, double tol) {
  Tally t("duality.interchange", "inf_u int f(w, u(w)) dmu = int inf_x f(w, x) dmu, minimizers pointwise", tol);
  std::size_t with_inf_atoms = 0;
  for (std::size_t k = 0; k < count; ++k) {
    Rng rng(seed, 14000 + k);
    const std::size_t dim = 1 + rng.below(2);
    const std::size_t n = 1 + rng.below(16);
    const Carrier c = random_duality_carrier(rng, n, true, true);
    InterchangeOptions opt;
    opt.seed = seed + k;
    opt.tol = tol;
    opt.space = rng.below(3) == 0 ? SampleSpace::VanishingOnInfiniteAtoms : SampleSpace::Decomposable;
    const bool vanishing = opt.space == SampleSpace::VanishingOnInfiniteAtoms;
    std::vector<PointIntegrand> pts;
    for (std::size_t i = 0; i < n; ++i) {
      const bool atom = c.weight(i).is_pos_inf();
      pts.push_back(random_point(rng, dim, atom, atom && vanishing));
    }
    std::optional<PointIntegrand> tail;
    if (c.is_tail()) tail = random_point(rng, dim, true, vanishing);
    const IntegrandSpec f = IntegrandSpec::make(c, pts, tail);
    const SearchGrid grid = SearchGrid::uniform(-2.0, 2.0, dim == 1 ? 33 : 17, dim);
    if (c.has_infinite_atom()) ++with_inf_atoms;

    t.instance();
    const InterchangeResult r = interchange(f, grid, opt);
    t.require(r.hypothesis_atoms, at(k) + " generator broke the hypothesis");
    for (const ExtReal lhs : {r.lhs_separable, r.lhs_joint}) {
      if (lhs.is_finite() && r.rhs.is_finite()) {
        t.margin(-std::abs(lhs.value() - r.rhs.value()), std::max(1.0, std::abs(r.rhs.value())), at(k));
      } else {
        t.exact(lhs == r.rhs, kInf, at(k) + " infinite values differ");
      }
    }
    t.require(r.minimizer_pointwise, at(k) + " minimizer not pointwise optimal");
    if (r.minimizer && r.lhs_separable.is_finite()) {
      // The pointwise-optimal function attains the infimum.
      const ExtReal val = integral_value(f, *r.minimizer);
      if (!vanishing) t.exact(val == r.lhs_separable, (val - r.lhs_separable).to_double(), at(k) + " minimizer value");
    }
  }
  t.require(count < 10 || with_inf_atoms > 0, "no instance with an infinite atom");
  return t.finish();
}

CheckRecord interchange_negative() {
  Tally t("duality.interchange_negative",
          "without inf f >= 0 on infinite atoms the identity fails on functions vanishing there");
  const Carrier c = Carrier::finite({1.0, kInf});
  const IntegrandSpec f = IntegrandSpec::make(
      c, {PointIntegrand::shifted_quadratic({1.0}), PointIntegrand::indicator_linear({0.0}, 1.0, {1.0})});
  const SearchGrid grid = SearchGrid::uniform(-2.0, 2.0, 17);
  InterchangeOptions opt;
  opt.space = SampleSpace::VanishingOnInfiniteAtoms;
  t.instance();
  const InterchangeResult r = interchange(f, grid, opt);
  t.require(!r.hypothesis_atoms, "hypothesis reported as satisfied");
  t.require(!r.identity_holds && r.lhs_separable == 0.0 && r.rhs.is_neg_inf(), "identity survived the violation");
  opt.space = SampleSpace::Decomposable;
  t.instance();
  const InterchangeResult d = interchange(f, grid, opt);
  t.require(d.identity_holds && d.rhs.is_neg_inf(), "decomposable space should keep the identity");
  return t.finish();
}

namespace {

/// Spec with closed-form conjugates whose maximizers sit on the grid, plus a
/// matching v. Infinite atoms and the tail get v = 0 and min f = 0.
std::pair<IntegrandSpec, SampledFunction> conjugate_instance(Rng& rng, std::size_t dim, std::size_t n, bool allow_tail) {
  const Carrier c = random_duality_carrier(rng, n, allow_tail, true);
  auto node = [&](int lo, int hi) { return grid_node(rng, dim, lo, hi); };
  const std::vector<double> zero(dim, 0.0);
  std::vector<PointIntegrand> pts;
  std::vector<std::vector<double>> v;
  for (std::size_t i = 0; i < n; ++i) {
    if (c.weight(i).is_pos_inf()) {
      pts.push_back(PointIntegrand::shifted_quadratic(node(-8, 8), rng.dyadic(1, 8, 2)));
      v.push_back(zero);
      continue;
    }
    const auto kind = dim == 1 ? rng.below(3) : rng.below(2);
    if (kind == 0) {
      // Maximizer c + v must be a node in [-2, 2].
      const auto center = node(-8, 8);
      const auto target = node(-16, 16);
      std::vector<double> vi(dim);
      for (std::size_t j = 0; j < dim; ++j) vi[j] = target[j] - center[j];
      pts.push_back(PointIntegrand::shifted_quadratic(center, 0.5));
      v.push_back(vi);
    } else if (kind == 1) {
      pts.push_back(PointIntegrand::tilted_absolute(rng.dyadic(-8, 8, 2), dim));
      std::vector<double> vi = node(-4, 4);
      if (euclidean_norm(vi) > 1.0) vi = zero;
      v.push_back(vi);
    } else {
      pts.push_back(PointIntegrand::indicator_linear(node(-8, 8), rng.dyadic(1, 8, 3), node(-8, 8)));
      v.push_back(node(-16, 16));
    }
  }
  std::optional<PointIntegrand> tail;
  std::optional<std::vector<double>> eventual;
  if (c.is_tail()) {
    tail = PointIntegrand::shifted_quadratic(node(-8, 8), 1.0);
    eventual = zero;
  }
  return {IntegrandSpec::make(c, std::move(pts), std::move(tail)), SampledFunction::on(c, std::move(v), eventual)};
}

}  // namespace

CheckRecord integral_conjugate(std::uint64_t seed, std::size_t count, double tol) {
  Tally t("duality.integral_conjugate", "I_f*(v) = I_{f*}(v): interchange path against pointwise conjugates", tol);
  for (std::size_t k = 0; k < count; ++k) {
    Rng rng(seed, 15000 + k);
    const std::size_t dim = 1 + rng.below(2);
    const auto [f, v] = conjugate_instance(rng, dim, 1 + rng.below(12), true);
    const SearchGrid grid = SearchGrid::uniform(-2.0, 2.0, dim == 1 ? 33 : 17, dim);
    t.instance();
    const IntegralConjugate r = orlicz::integral_conjugate(f, v, grid, tol);
    if (r.via_interchange.is_finite() && r.via_pointwise.is_finite()) {
      t.margin(-std::abs(r.via_interchange.value() - r.via_pointwise.value()),
               std::max(1.0, std::abs(r.via_pointwise.value())), at(k));
    } else {
      t.exact(r.via_interchange == r.via_pointwise, kInf, at(k) + " infinite values differ");
    }
  }
  return t.finish();
}

CheckRecord three_part_reduction(std::uint64_t seed, std::size_t count) {
  Tally t("duality.three_part", "I_f*(l) = I_f*(l_a) + s_dom(l_d) + s_dom(l_f); l_d = l_f = 0 gives I_f*(l_a)");
  for (std::size_t k = 0; k < count; ++k) {
    Rng rng(seed, 16000 + k);
    const std::size_t dim = 1 + rng.below(2);
    const auto [f, v] = conjugate_instance(rng, dim, 1 + rng.below(12), true);
    const SearchGrid grid = SearchGrid::uniform(-2.0, 2.0, dim == 1 ? 33 : 17, dim);
    FunctionalTriple l;
    l.density = v;
    t.instance();
    const ThreePartConjugate tp = conjugate_three_part(f, l, grid);
    const IntegralConjugate ic = orlicz::integral_conjugate(f, v, grid);
    t.exact(tp.total == ic.via_pointwise, (tp.total - ic.via_pointwise).to_double(), at(k));
  }
  // One infinite atom and a tail: closed-form support functions.
  t.instance();
  const Carrier c = Carrier::tail({1.0, kInf}, 1.0);
  const IntegrandSpec f = IntegrandSpec::make(
      c, {PointIntegrand::shifted_quadratic({0.5}, 0.5), PointIntegrand::indicator_linear({1.0}, 0.5)},
      PointIntegrand::shifted_quadratic({-0.75}));
  FunctionalTriple l;
  l.density = SampledFunction::on(c, {{1.0}, {0.0}}, std::vector<double>{0.0});
  l.diffuse = {{1, {-2.0}}};
  l.pfa = {3.0};
  const ThreePartConjugate tp = conjugate_three_part(f, l, SearchGrid::uniform(-2.0, 2.0, 33));
  // 0.5 + 0.5, then -2 * 1 + 0.5 * 2, then 3 * -0.75.
  t.exact(tp.absolutely_continuous == 1.0 && tp.diffuse == -1.0 && tp.pfa == -2.25 && tp.total == -2.25,
          tp.total.to_double() + 2.25, "mixed carrier");
  return t.finish();
}

CheckRecord subdifferential_agreement(std::uint64_t seed, std::size_t count) {
  Tally t("duality.subdifferential", "v in dI_f(u) iff v(w) in df(w, u(w)) almost everywhere");
  std::size_t members = 0, non_members = 0;
  for (std::size_t k = 0; k < count; ++k) {
    Rng rng(seed, 17000 + k);
    const std::size_t dim = 1 + rng.below(2);
    const std::size_t n = 1 + rng.below(8);
    const Carrier c = instances::finite_carrier(rng, n, 0.15, 0.0);
    const double member_odds = 1.0 - std::pow(0.5, 1.0 / static_cast<double>(n));
    auto node = [&](int lo, int hi) { return grid_node(rng, dim, lo, hi); };
    std::vector<PointIntegrand> pts;
    std::vector<std::vector<double>> u, v;
    for (std::size_t i = 0; i < n; ++i) {
      const bool keep = rng.uniform() >= member_odds;
      if (dim == 2 || rng.below(2) == 0) {
        const auto center = node(-8, 8);
        const auto ui = node(-12, 12);
        const auto y = keep ? ui : node(-12, 12);
        std::vector<double> vi(dim);
        for (std::size_t j = 0; j < dim; ++j) vi[j] = y[j] - center[j];
        pts.push_back(PointIntegrand::shifted_quadratic(center, 0.5));
        u.push_back(ui);
        v.push_back(vi);
      } else {
        pts.push_back(PointIntegrand::tilted_absolute(rng.dyadic(-8, 8, 2)));
        const double ui = rng.below(3) == 0 ? 0.0 : rng.dyadic(-12, 12, 3);
        double vi;
        if (keep) vi = ui == 0.0 ? rng.dyadic(-8, 8, 3) : std::copysign(1.0, ui);
        else vi = ui == 0.0 ? std::copysign(rng.dyadic(9, 16, 3), rng.uniform() - 0.5) : rng.dyadic(-16, 16, 3);
        u.push_back({ui});
        v.push_back({vi});
      }
    }
    const IntegrandSpec f = IntegrandSpec::make(c, pts);
    const auto uf = SampledFunction::on(c, u), vf = SampledFunction::on(c, v);
    const SearchGrid grid = SearchGrid::uniform(-2.0, 2.0, dim == 1 ? 33 : 17, dim);
    t.instance();
    const IntegralSubdifferential r = integral_subdifferential(f, uf, vf, grid);
    (r.member_fenchel_young ? members : non_members)++;
    t.exact(r.member_fenchel_young == r.member_direct, r.worst_gap.to_double(), at(k) + " paths disagree");
  }
  t.require(count < 10 || (members > 0 && non_members > 0), "instances cover only one verdict");
  return t.finish();
}

CheckRecord dual_norm(std::uint64_t seed, std::size_t count, double tol) {
  Tally t("duality.dual_norm", "dual Amemiya norm coincides with the operator norm on the Luxemburg ball", tol);
  for (std::size_t k = 0; k < count; ++k) {
    Rng rng(seed, 18000 + k);
    const std::size_t dim = k % 4 == 3 ? 2 : 1;
    const std::size_t n = 1 + rng.below(5);
    const Carrier c = instances::finite_carrier(rng, n, 0.0, 0.0);
    const OrliczIntegrand phi = rng.below(4) == 0 && dim == 1 ? OrliczIntegrand::exponential()
                                                              : OrliczIntegrand::power(rng.uniform(1.5, 4.0), dim);
    const auto v = instances::function(rng, c, dim, std::exp2(static_cast<double>(rng.integer(-2, 2))));
    t.instance();
    const DualNormAgreement a = dual_norm_agreement(phi, v, tol, seed + k);
    const double scale = std::max(1.0, a.dual_amemiya);
    t.margin(-std::abs(a.operator_norm - a.dual_amemiya), scale, at(k) + " ascent (" + phi.label() + ")");
    if (dim == 1) {
      t.require(a.oracle.has_value(), at(k) + " oracle missing");
      if (a.oracle) t.margin(-std::abs(*a.oracle - a.dual_amemiya), scale, at(k) + " oracle (" + phi.label() + ")");
    }
  }
  return t.finish();
}

CheckRecord functional_decomposition(std::uint64_t seed, std::size_t count) {
  Tally t("duality.functional_decomposition", "l = l_a + l_d + l_f uniquely, with ||l|| = ||l_a|| + ||l_d|| + ||l_f||");
  for (std::size_t k = 0; k < count; ++k) {
    Rng rng(seed, 19000 + k);
    const std::size_t n = rng.below(8);
    Carrier c;
    std::vector<ExtReal> w(n);
    for (auto& x : w) {
      const auto r = rng.below(6);
      x = r == 0 ? ExtReal::pos_inf() : ExtReal(std::exp2(static_cast<double>(rng.integer(-2, 3))));
    }
    if (k % 3 != 0 || n == 0) {
      c = Carrier::tail(w, rng.dyadic(1, 8, 2));
    } else {
      if (n > 1 && rng.below(2) == 0) w[rng.below(n)] = 0.0;
      c = Carrier::finite(w);
    }
    FunctionalTriple l;
    std::vector<std::vector<double>> a(n, std::vector<double>(1, 0.0));
    for (std::size_t i = 0; i < n; ++i) {
      if (c.weight(i).is_pos_inf()) {
        if (rng.below(4) != 0) l.diffuse.emplace_back(i, std::vector<double>{rng.dyadic(-64, 64, 3)});
      } else {
        a[i][0] = rng.dyadic(-64, 64, 3);
      }
    }
    l.density = SampledFunction::on(c, a, c.is_tail() ? std::optional(std::vector<double>{0.0}) : std::nullopt);
    if (c.is_tail() && rng.below(4) != 0) l.pfa = {rng.dyadic(-64, 64, 3)};
    t.instance();
    const FunctionalDecomposition d = decompose_functional(l, default_probes(c, 1), seed + k, 32);
    t.require(d.spanning, at(k) + " probes do not span");
    t.require(d.exact_recovery, at(k) + " triple not recovered");
    t.exact(d.charge_mismatches == 0, static_cast<double>(d.charge_mismatches), at(k) + " charge parts");
    t.exact(d.norms_add, d.norm_lower - (d.norm_a + d.norm_d + d.norm_f), at(k) + " norms do not add");
  }
  // Pure pfa functional: the assembled charge has no sigma-additive part.
  t.instance();
  const Carrier c = Carrier::tail({1.0, 0.5}, 0.25);
  FunctionalTriple l;
  l.density = SampledFunction::on(c, {{0.0}, {0.0}}, std::vector<double>{0.0});
  l.pfa = {3.0};
  const auto u = SampledFunction::on(c, {{5.0}, {-1.0}}, std::vector<double>{2.0});
  t.exact(l(u) == 6.0, l(u) - 6.0, "pure pfa action");
  const FunctionalDecomposition d = decompose_functional(l, {u}, seed, 0);
  t.require(!d.spanning, "a single probe cannot span");
  return t.finish();
}

CheckRecord reflexivity() {
  Tally t("duality.reflexivity", "Delta2 for phi and phi* => both modular domains are linear");
  SamplingGrid grid;
  grid.min_decade = -3;
  grid.max_decade = 2;
  const Carrier c = Carrier::finite({1.0, 0.5});
  {
    t.instance();
    const ReflexivityReport r = reflexivity_linearity_check(OrliczIntegrand::power(2.0), c, grid);
    t.require(r.dom_linear_phi && r.dom_linear_conjugate && r.delta2_phi.verdict == Delta2Verdict::Holds &&
                  r.delta2_conjugate.verdict == Delta2Verdict::Holds && r.implication_ok,
              "power 2");
  }
  {
    t.instance();
    const ReflexivityReport r = reflexivity_linearity_check(OrliczIntegrand::exponential(), c, grid);
    t.require(r.delta2_phi.verdict == Delta2Verdict::FailsWithWitness && r.dom_linear_phi && !r.caveat.empty() &&
                  r.implication_ok,
              "exponential");
  }
  {
    t.instance();
    const ReflexivityReport r = reflexivity_linearity_check(OrliczIntegrand::ball_indicator(), c, grid);
    t.require(!r.dom_linear_phi && r.witness_phi.has_value() && r.implication_ok, "ball indicator");
  }
  return t.finish();
}

}  // namespace orlicz::checks
