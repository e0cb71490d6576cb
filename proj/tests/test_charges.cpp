#include <optional>
#include <vector>

#include "doctest.h"
#include "orlicz_kit/charges.hpp"
#include "orlicz_kit/oracles.hpp"
#include "orlicz_kit/rng.hpp"

using namespace orlicz;

namespace {
const ExtReal kInf = ExtReal::pos_inf();

Carrier unit_finite(std::size_t n) { return Carrier::finite(std::vector<ExtReal>(n, 1.0)); }
}  // namespace

TEST_CASE("jordan splits by sign") {
  const JordanParts j = jordan(Charge::on(unit_finite(2), {3.0, -2.0}));
  CHECK(j.positive.masses == std::vector<double>{3.0, 0.0});
  CHECK(j.negative.masses == std::vector<double>{0.0, 2.0});
  CHECK(j.total_variation == 5.0);

  const JordanParts t = jordan(Charge::on(Carrier::tail({1.0}, 1.0), {0.0}, -4.0));
  CHECK(t.positive.lambda == 0.0);
  CHECK(t.negative.lambda == 4.0);
  CHECK(t.total_variation == 4.0);
}

TEST_CASE("charges reject a charge at infinity on finite carriers") {
  CHECK_THROWS_AS(Charge::on(unit_finite(2), {1.0, 1.0}, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(Charge::on(unit_finite(2), {1.0}), std::invalid_argument);
}

TEST_CASE("total variation equals the partition supremum") {
  for (std::uint64_t k = 0; k < 40; ++k) {
    Rng rng(5, k);
    const std::size_t n = 1 + rng.below(7);
    std::vector<double> m(n);
    for (auto& x : m) x = rng.dyadic(-32, 32, 3);
    const bool tail = rng.below(2) == 0;
    const Charge nu = tail ? Charge::on(Carrier::tail(std::vector<ExtReal>(n, 1.0), 0.5), m, rng.dyadic(-32, 32, 3))
                           : Charge::on(unit_finite(n), m);
    CHECK(jordan(nu).total_variation == oracle::total_variation(nu));
    CHECK(nu.norm() == oracle::total_variation(nu));
  }
}

TEST_CASE("hewitt_yosida") {
  const Charge nu = Charge::on(Carrier::tail({1.0, 1.0, 1.0}, 1.0), {1.0, 0.5, 0.25}, 5.0);
  const HewittYosidaParts hy = hewitt_yosida(nu);
  CHECK(hy.sigma_additive.norm() == 1.75);
  CHECK(hy.purely_finitely_additive.norm() == 5.0);
  CHECK(nu.norm() == 6.75);

  const HewittYosidaParts zero = hewitt_yosida(Charge::on(Carrier::tail({1.0}, 1.0), {2.0}, 0.0));
  CHECK(zero.purely_finitely_additive == Charge::zero(Carrier::tail({1.0}, 1.0)));

  // (nu_f)_B = (nu_B)_f.
  const Charge nu2 = Charge::on(Carrier::tail({1.0, 1.0}, 1.0), {2.0, -2.0}, -1.0);
  for (const MSet& b : {MSet::of({0, 1}), MSet::cofinite({0})}) {
    CHECK(hewitt_yosida(nu2).purely_finitely_additive.restricted(b) ==
          hewitt_yosida(nu2.restricted(b)).purely_finitely_additive);
    CHECK(hewitt_yosida(nu2).sigma_additive.restricted(b) == hewitt_yosida(nu2.restricted(b)).sigma_additive);
  }
  CHECK_THROWS(hewitt_yosida(Charge::on(unit_finite(1), {1.0})));
}

TEST_CASE("de_giorgi hand instance") {
  const Carrier mu = Carrier::finite({1.0, kInf, 0.0});
  const Charge nu = Charge::on(mu, {2.0, 3.0, 5.0});
  const GiorgiParts p = de_giorgi(nu, mu);
  CHECK(p.absolutely_continuous.masses == std::vector<double>{2.0, 0.0, 0.0});
  CHECK(p.diffuse.masses == std::vector<double>{0.0, 3.0, 0.0});
  CHECK(p.singular.masses == std::vector<double>{0.0, 0.0, 5.0});
  REQUIRE(p.density[0].has_value());
  CHECK(*p.density[0] == 2.0);
  CHECK_FALSE(p.density[1].has_value());
  CHECK_FALSE(p.density[2].has_value());
  CHECK(sigma_finite_support(p) == MSet::of({0}));
  CHECK(is_absolutely_continuous(p.absolutely_continuous, mu));
  CHECK(is_diffuse(p.diffuse, mu));
  CHECK(is_singular(p.singular, mu));
  CHECK_FALSE(is_diffuse(nu, mu));
  CHECK_THROWS(de_giorgi(Charge::on(mu, {-1.0, 0.0, 0.0}), mu));
}

TEST_CASE("de_giorgi with mu = nu has density one") {
  const Carrier mu = Carrier::finite({0.5, 2.0, 3.0});
  const GiorgiParts p = de_giorgi(Charge::on(mu, {0.5, 2.0, 3.0}), mu);
  CHECK(p.absolutely_continuous.masses == std::vector<double>{0.5, 2.0, 3.0});
  for (const auto& d : p.density) CHECK(d == std::optional<double>(1.0));
  CHECK(sigma_finite_support(de_giorgi(Charge::zero(mu), mu)) == MSet{});
}

TEST_CASE("property: de_giorgi matches the sup-formula oracle and norms add") {
  for (std::uint64_t k = 0; k < 60; ++k) {
    Rng rng(17, k);
    const std::size_t n = 1 + rng.below(9);
    std::vector<ExtReal> w(n);
    for (auto& x : w) {
      const auto r = rng.below(4);
      x = r == 0 ? ExtReal(0.0) : r == 1 ? kInf : ExtReal(rng.dyadic(1, 16, 2));
    }
    w[0] = w[0] == 0.0 ? ExtReal(1.0) : w[0];
    const Carrier mu = Carrier::finite(w);
    std::vector<double> m(n);
    for (auto& x : m) x = rng.below(4) == 0 ? 0.0 : rng.dyadic(1, 64, 3);
    const Charge nu = Charge::on(mu, m);
    const GiorgiParts p = de_giorgi(nu, mu);
    const oracle::GiorgiTables o = oracle::de_giorgi(nu, mu);
    const std::uint64_t full = (std::uint64_t{1} << n) - 1;
    for (std::uint64_t a = 0; a <= full; ++a) {
      CHECK(p.diffuse(MSet::from_mask(a)) == o.diffuse[a]);
      CHECK(p.singular(MSet::from_mask(a)) == o.singular[a]);
    }
    CHECK(p.absolutely_continuous(MSet::all()) == o.absolutely_continuous_total);
    CHECK(nu.norm() == p.absolutely_continuous.norm() + p.diffuse.norm() + p.singular.norm());
  }
}

TEST_CASE("signed de_giorgi goes through the Jordan parts") {
  const Carrier mu = Carrier::finite({1.0, kInf, 0.0});
  const Charge nu = Charge::on(mu, {-2.0, 3.0, -5.0});
  const GiorgiParts p = de_giorgi_signed(nu, mu);
  CHECK(p.absolutely_continuous.masses == std::vector<double>{-2.0, 0.0, 0.0});
  CHECK(p.diffuse.masses == std::vector<double>{0.0, 3.0, 0.0});
  CHECK(p.singular.masses == std::vector<double>{0.0, 0.0, -5.0});
  CHECK(nu.norm() == p.absolutely_continuous.norm() + p.diffuse.norm() + p.singular.norm());
}
