#include <algorithm>
#include <cmath>
#include <vector>

#include "doctest.h"
#include "orlicz_kit/norms.hpp"
#include "orlicz_kit/rng.hpp"

using namespace orlicz;

namespace {
const ExtReal kInf = ExtReal::pos_inf();
const Carrier kTwo = Carrier::finite({1.0, 1.0});
// x^2, with conjugate y^2 / 4.
const OrliczIntegrand kSq = OrliczIntegrand::power(2.0).scaled(2.0);

double val(ExtReal x) { return x.value(); }
}  // namespace

TEST_CASE("sampled functions validate their shape") {
  CHECK_THROWS_AS(SampledFunction::scalar(kTwo, {1.0}), std::invalid_argument);
  CHECK_THROWS_AS(SampledFunction::on(kTwo, {{1.0}, {1.0, 2.0}}), std::invalid_argument);
  CHECK_THROWS_AS(SampledFunction::scalar(kTwo, {1.0, 2.0}, 0.0), std::invalid_argument);
  const auto u = SampledFunction::scalar(Carrier::tail({1.0}, 1.0), {2.0}, 3.0);
  CHECK(u.at(5) == std::vector<double>{3.0});
}

TEST_CASE("modular") {
  CHECK(modular(kSq, SampledFunction::scalar(kTwo, {3.0, 4.0})) == 25.0);
  CHECK(modular(kSq, SampledFunction::scalar(kTwo, {0.0, 0.0})) == 0.0);
  CHECK(modular(kSq, SampledFunction::scalar(Carrier::finite({1.0, kInf}), {1.0, 0.0})) == 1.0);
  CHECK(modular(kSq, SampledFunction::scalar(Carrier::tail({1.0}, 0.5), {1.0}, 1.0)).is_pos_inf());
}

TEST_CASE("Luxemburg norm") {
  CHECK(val(luxemburg_norm(kSq, SampledFunction::scalar(kTwo, {3.0, 4.0})).value) == doctest::Approx(5.0).epsilon(1e-10));
  CHECK(luxemburg_norm(kSq, SampledFunction::scalar(kTwo, {0.0, 0.0})).value == 0.0);
  const auto ball = OrliczIntegrand::ball_indicator();
  const auto u = SampledFunction::scalar(Carrier::finite({1.0, 1.0, 1.0}), {1.0, -2.0, 0.5});
  CHECK(val(luxemburg_norm(ball, u).value) == doctest::Approx(2.0).epsilon(1e-10));
}

TEST_CASE("Amemiya norm") {
  CHECK(val(amemiya_norm(kSq, SampledFunction::scalar(kTwo, {3.0, 4.0})).value) == doctest::Approx(10.0).epsilon(1e-8));
  CHECK(amemiya_norm(kSq, SampledFunction::scalar(kTwo, {0.0, 0.0})).value == 0.0);
}

TEST_CASE("dual norms") {
  const DualNorms d = dual_norms(kSq, SampledFunction::scalar(kTwo, {3.0, 4.0}));
  CHECK(val(d.luxemburg.value) == doctest::Approx(2.5).epsilon(1e-10));
  const DualNorms z = dual_norms(kSq, SampledFunction::scalar(kTwo, {0.0, 0.0}));
  CHECK(z.luxemburg.value == 0.0);
  CHECK(z.amemiya.value == 0.0);
}

TEST_CASE("modular-norm inequalities on the hand instances") {
  const ModularNormCheck a = modular_norm_inequalities(kSq, SampledFunction::scalar(kTwo, {0.3, 0.4}));
  CHECK(a.norm == doctest::Approx(0.5));
  CHECK(val(a.modular) == doctest::Approx(0.25));
  CHECK(a.a_applies);
  CHECK(a.all_hold());
  const ModularNormCheck b = modular_norm_inequalities(kSq, SampledFunction::scalar(kTwo, {3.0, 4.0}));
  CHECK(b.b_applies);
  CHECK(b.norm == doctest::Approx(5.0));
  CHECK(b.all_hold());
}

TEST_CASE("Hoelder inequality") {
  const auto u = SampledFunction::scalar(kTwo, {3.0, 4.0});
  const HoelderCheck h = hoelder(kSq, u, u);
  CHECK(val(h.lhs) == 25.0);
  CHECK(val(h.rhs) == doctest::Approx(25.0).epsilon(1e-9));
  const auto p = OrliczIntegrand::power(2.0, 2);
  const auto u2 = SampledFunction::on(kTwo, {{1.0, 0.0}, {0.0, 2.0}});
  const auto v2 = SampledFunction::on(kTwo, {{0.0, 3.0}, {5.0, 0.0}});
  CHECK(hoelder(p, u2, v2).lhs == 0.0);
}

TEST_CASE("embedding constants") {
  SamplingGrid grid;
  const auto k = embedding_constants(kSq, kTwo, 1.0, grid);
  REQUIRE(k.has_value());
  CHECK(k->omega_eps == std::vector<std::size_t>{0, 1});
  for (std::uint64_t s = 0; s < 20; ++s) {
    Rng rng(3, s);
    const auto u = SampledFunction::scalar(kTwo, {rng.uniform(-4.0, 4.0), rng.uniform(-4.0, 4.0)});
    CHECK(check_embedding(kSq, *k, u).holds(1e-8));
  }
  // Omega_eps grows as eps shrinks.
  const auto steep = OrliczIntegrand::variable_exponent({2.0, 2.0}).scaled(std::vector<double>{1.0, 64.0});
  const auto small = embedding_constants(steep, kTwo, 0.5, grid);
  const auto tiny = embedding_constants(steep, kTwo, 0.01, grid);
  REQUIRE(small.has_value());
  REQUIRE(tiny.has_value());
  CHECK(small->omega_eps == std::vector<std::size_t>{0});
  CHECK(std::includes(tiny->omega_eps.begin(), tiny->omega_eps.end(), small->omega_eps.begin(), small->omega_eps.end()));
}

TEST_CASE("property: sandwich, modular lemma and Hoelder on random instances") {
  const double powers[] = {1.25, 1.5, 2.0, 3.0, 4.0};
  for (std::uint64_t s = 0; s < 150; ++s) {
    Rng rng(11, s);
    const std::size_t n = 1 + rng.below(6);
    std::vector<ExtReal> w(n);
    for (auto& x : w) x = rng.dyadic(1, 16, 2);
    const Carrier c = Carrier::finite(w);
    OrliczIntegrand phi = OrliczIntegrand::absolute();
    switch (rng.below(3)) {
      case 0: phi = OrliczIntegrand::power(powers[rng.below(5)]); break;
      case 1: phi = OrliczIntegrand::exponential(); break;
      default: break;
    }
    std::vector<double> uv(n), vv(n);
    const double scale = std::exp2(static_cast<double>(rng.integer(-3, 3)));
    for (auto& x : uv) x = rng.uniform(-scale, scale);
    for (auto& x : vv) x = rng.uniform(-1.0, 1.0);
    const auto u = SampledFunction::scalar(c, uv);
    const auto v = SampledFunction::scalar(c, vv);
    const double lux = val(luxemburg_norm(phi, u).value);
    const double am = val(amemiya_norm(phi, u).value);
    const double tol = 1e-7 * std::max(1.0, lux);
    CHECK(lux <= am + tol);
    CHECK(am <= 2.0 * lux + tol);
    CHECK(modular_norm_inequalities(phi, u).all_hold());
    const HoelderCheck h = hoelder(phi, u, v);
    CHECK(val(h.lhs) <= val(h.rhs) * (1.0 + 1e-8) + 1e-12);
  }
}

TEST_CASE("property: Luxemburg norm of a power integrand is the scaled L_p norm") {
  for (std::uint64_t s = 0; s < 100; ++s) {
    Rng rng(13, s);
    const std::size_t n = 1 + rng.below(6);
    const double p = rng.uniform(1.1, 5.0);
    std::vector<ExtReal> w(n);
    std::vector<double> uv(n);
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      w[i] = rng.dyadic(1, 16, 2);
      uv[i] = rng.uniform(-3.0, 3.0);
      sum += w[i].value() * std::pow(std::abs(uv[i]), p) / p;
    }
    const double got = val(luxemburg_norm(OrliczIntegrand::power(p), SampledFunction::scalar(Carrier::finite(w), uv)).value);
    CHECK(got == doctest::Approx(std::pow(sum, 1.0 / p)).epsilon(1e-8));
  }
}
