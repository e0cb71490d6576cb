#include <algorithm>
#include <cmath>
#include <vector>

#include "doctest.h"
#include "orlicz_kit/conjugation.hpp"
#include "orlicz_kit/oracles.hpp"
#include "orlicz_kit/rng.hpp"

using namespace orlicz;

namespace {
const ExtReal kInf = ExtReal::pos_inf();

std::vector<double> axis(double lo, double hi, std::size_t n) {
  std::vector<double> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
  return x;
}

GridFunction sample(std::vector<double> xs, double (*f)(double)) {
  return GridFunction::sample({std::move(xs)}, [f](std::span<const double> x) -> ExtReal { return f(x[0]); });
}

bool same(const ConjugateTable& a, const ConjugateTable& b) {
  if (a.values.size() != b.values.size()) return false;
  for (std::size_t k = 0; k < a.values.size(); ++k) {
    if (!(a.values[k] == b.values[k])) return false;
  }
  return true;
}
}  // namespace

TEST_CASE("grid functions validate their input") {
  CHECK_THROWS_AS(GridFunction::make({{0.0, 0.0}}, {1.0, 1.0}), std::invalid_argument);
  CHECK_THROWS_AS(GridFunction::make({{0.0, 1.0}}, {kInf, kInf}), std::invalid_argument);
  CHECK_THROWS_AS(GridFunction::make({{0.0, 1.0}}, {1.0}), std::invalid_argument);
}

TEST_CASE("self-conjugate quadratic") {
  const auto g = sample(axis(-5.0, 5.0, 1001), [](double x) { return x * x / 2.0; });
  const auto dual = axis(-3.0, 3.0, 601);
  const ConjugateTable t = conjugate_1d(g, dual);
  CHECK(t.method == ConjugateMethod::LinearTimeTransform1D);
  const double h = 0.01;
  double worst = 0.0;
  for (std::size_t k = 0; k < dual.size(); ++k) worst = std::max(worst, std::abs(t.values[k].value() - dual[k] * dual[k] / 2.0));
  CHECK(worst <= h * h);
}

TEST_CASE("conjugate of |x| is the indicator of [-1, 1]") {
  const auto g = sample(axis(-4.0, 4.0, 81), [](double x) { return std::abs(x); });
  const auto dual = axis(-2.0, 2.0, 41);
  const ConjugateTable t = conjugate_1d(g, dual);
  for (std::size_t k = 0; k < dual.size(); ++k) {
    if (std::abs(dual[k]) <= 1.0) {
      CHECK(t.values[k] == 0.0);
      CHECK(t.within_slope_range[k]);
    } else {
      CHECK_FALSE(t.within_slope_range[k]);
    }
  }
}

TEST_CASE("linear-time transform equals the sup oracle") {
  const auto e = sample(axis(-5.0, 5.0, 1001), [](double x) { return std::expm1(std::abs(x)); });
  const auto dual = default_dual_axis(e, 777);
  CHECK(same(conjugate_1d(e, dual), grid_sup(e, {dual})));

  for (std::uint64_t s = 0; s < 50; ++s) {
    Rng rng(21, s);
    const std::size_t n = 2 + rng.below(100);
    std::vector<double> xs(n);
    double x = rng.dyadic(-512, 0, 6);
    for (auto& v : xs) v = x, x += rng.dyadic(1, 64, 6);
    std::vector<ExtReal> vals(n);
    for (auto& v : vals) v = rng.below(8) == 0 ? kInf : ExtReal(rng.dyadic(-256, 256, 4));
    vals[rng.below(n)] = 0.0;
    const auto g = GridFunction::make({xs}, vals);
    const auto d = default_dual_axis(g, 2 + rng.below(200));
    CHECK(same(conjugate_1d(g, d), grid_sup(g, {d})));
  }
}

TEST_CASE("biconjugate recovers convex samples and stays below the input") {
  const auto g = sample(axis(-2.0, 2.0, 201), [](double x) { return x * x + std::abs(x - 0.5); });
  const ConjugateTable t = conjugate_1d(g, default_dual_axis(g, 4001));
  const auto bc = biconjugate_1d(t);
  for (std::size_t i = 0; i < g.size(); ++i) {
    CHECK(bc[i].value() <= g.values[i].value() + 1e-12);  // roundoff in s x - g*(s)
    CHECK(g.values[i].value() - bc[i].value() <= 1e-3);
  }
  // Nonconvex samples: the biconjugate is the hull, strictly below at the bump.
  const auto w = sample(axis(-2.0, 2.0, 5), [](double x) { return x == 0.0 ? 3.0 : x * x; });
  const auto wb = biconjugate_1d(conjugate_1d(w, default_dual_axis(w, 401)));
  CHECK(wb[2] < 3.0);
}

TEST_CASE("even input gives an even conjugate") {
  // Dyadic steps keep the grids exactly symmetric.
  std::vector<double> xs, dual;
  for (int k = -24; k <= 24; ++k) xs.push_back(k * 0.125);
  for (int k = -32; k <= 32; ++k) dual.push_back(k * 0.0625);
  const auto g = sample(xs, [](double x) { return std::pow(std::abs(x), 1.5); });
  const ConjugateTable t = conjugate_1d(g, dual);
  for (std::size_t k = 0; k < dual.size(); ++k) CHECK(t.values[k] == t.values[dual.size() - 1 - k]);
}

TEST_CASE("radial conjugates") {
  const std::vector<double> radii = axis(0.0, 2.0, 21);
  const RadialConjugate q = conjugate_radial(OrliczIntegrand::power(2.0, 2), radii);
  for (std::size_t k = 0; k < radii.size(); ++k) {
    CHECK(q.values[k].value() == doctest::Approx(radii[k] * radii[k] / 2.0).epsilon(1e-5));
  }
  const RadialConjugate b = conjugate_radial(OrliczIntegrand::ball_indicator(2), radii);
  for (std::size_t k = 0; k < radii.size(); ++k) CHECK(b.values[k].value() == doctest::Approx(radii[k]).epsilon(1e-9));
  const auto nonradial = OrliczIntegrand::general("g", 1, [](std::size_t, std::span<const double> x) -> ExtReal {
    return x[0] * x[0];
  });
  CHECK_THROWS_AS(conjugate_radial(nonradial, radii), std::invalid_argument);
}

TEST_CASE("exponential radial conjugate matches a 2-d grid sup along directions") {
  const std::vector<double> radii = axis(0.0, 3.0, 13);
  const RadialConjugate r = conjugate_radial(OrliczIntegrand::exponential(2), radii);
  const auto xs = axis(-4.0, 4.0, 401);
  const auto g = GridFunction::sample({xs, xs}, [](std::span<const double> x) -> ExtReal {
    return std::expm1(std::hypot(x[0], x[1]));
  });
  for (double angle : {0.3, 1.1, 2.5}) {
    for (std::size_t k = 0; k < radii.size(); k += 3) {
      const double s = radii[k];
      const ConjugateTable t = grid_sup(g, {{s * std::cos(angle)}, {s * std::sin(angle)}});
      // The 2-d grid is coarser than the radial one, so it sits below it.
      CHECK(t.values[0].value() <= r.values[k].value() + 1e-9);
      CHECK(t.values[0].value() >= r.values[k].value() - 0.05);
    }
  }
}

TEST_CASE("quantitative conjugate bounds") {
  SamplingGrid grid;
  const ConjugateBounds p2 = quantitative_conjugate_bounds(OrliczIntegrand::power(2.0), grid, 0, 2.0);
  CHECK(p2.s >= 1.0 - 1e-12);
  CHECK(p2.upper_ok);
  CHECK(p2.lower_ok);
  const ConjugateBounds abs = quantitative_conjugate_bounds(OrliczIntegrand::absolute(), grid);
  CHECK(abs.upper_ok);
  CHECK(abs.lower_ok);
  const ConjugateBounds e = quantitative_conjugate_bounds(OrliczIntegrand::exponential(), grid);
  CHECK(e.upper_ok);
  CHECK(e.lower_ok);
}

TEST_CASE("subdifferential via Fenchel-Young") {
  const auto half_sq = OrliczIntegrand::power(2.0);
  const auto abs = OrliczIntegrand::absolute();
  const std::vector<double> three{3.0}, zero{0.0}, one{1.0}, half{0.5};
  const SubdifferentialCheck a = subdifferential_check(half_sq, 0, three, three);
  CHECK(a.member);
  CHECK(a.gap == 0.0);
  CHECK(subdifferential_check(abs, 0, zero, half).member);
  const SubdifferentialCheck c = subdifferential_check(abs, 0, one, half);
  CHECK_FALSE(c.member);
  CHECK(c.gap == 0.5);
}

TEST_CASE("property: Fenchel-Young inequality on random pairs") {
  const auto phi = OrliczIntegrand::exponential();
  for (std::uint64_t s = 0; s < 200; ++s) {
    Rng rng(8, s);
    const std::vector<double> x{rng.uniform(-4.0, 4.0)}, y{rng.uniform(-3.0, 3.0)};
    const double lhs = (phi(0, x) + phi.conjugate(0, y)).value();
    CHECK(lhs >= x[0] * y[0] - 1e-12 * std::max(1.0, std::abs(lhs)));
  }
}

TEST_CASE("Lipschitz regularization") {
  const auto xs = axis(-1.0, 1.0, 21);
  std::vector<ExtReal> ind(xs.size(), kInf);
  ind[10] = 0.0;
  const auto g = GridFunction::make({xs}, ind);
  const GridFunction f = lipschitz_regularize(g, 2.0);
  for (std::size_t i = 0; i < xs.size(); ++i) CHECK(f.values[i].value() == doctest::Approx(2.0 * std::abs(xs[i])));

  for (std::uint64_t s = 0; s < 40; ++s) {
    Rng rng(31, s);
    std::vector<double> x(2 + rng.below(60));
    double at = rng.dyadic(-64, 0, 4);
    for (auto& v : x) v = at, at += rng.dyadic(1, 16, 4);
    std::vector<ExtReal> vals(x.size());
    for (auto& v : vals) v = rng.below(5) == 0 ? kInf : ExtReal(rng.dyadic(-64, 64, 3));
    vals[0] = 0.0;
    const auto h = GridFunction::make({x}, vals);
    GridFunction prev = lipschitz_regularize(h, 0.25);
    for (double lambda : {0.5, 1.0, 4.0, 64.0}) {
      const GridFunction cur = lipschitz_regularize(h, lambda);
      CHECK(lipschitz_violations(cur, lambda, true) == 0);
      const GridFunction o = oracle::lipschitz_envelope(h, lambda);
      for (std::size_t i = 0; i < x.size(); ++i) {
        CHECK(cur.values[i] == o.values[i]);
        CHECK(cur.values[i] <= h.values[i]);
        CHECK(prev.values[i] <= cur.values[i]);
      }
      prev = cur;
    }
  }
}
