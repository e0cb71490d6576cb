#include <limits>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "orlicz_kit/extended_real.hpp"
#include "orlicz_kit/measure.hpp"
#include "orlicz_kit/rng.hpp"

using namespace orlicz;

namespace {
const ExtReal kInf = ExtReal::pos_inf();
}

TEST_CASE("extended reals follow the integration conventions") {
  CHECK((kInf + ExtReal::neg_inf()).is_pos_inf());
  CHECK(ExtReal(0.0) * kInf == 0.0);
  CHECK(kInf * ExtReal(0.0) == 0.0);
  CHECK((ExtReal(-2.0) * kInf).is_neg_inf());
  CHECK(ExtReal(3.0) + ExtReal(4.0) == 7.0);
  CHECK_THROWS(ExtReal(std::numeric_limits<double>::quiet_NaN()));
}

TEST_CASE("carrier construction rejects bad weights") {
  CHECK_THROWS_AS(Carrier::finite({0.0, 0.0}), std::invalid_argument);
  CHECK_THROWS_AS(Carrier::finite({-1.0, 1.0}), std::invalid_argument);
  CHECK_THROWS_AS(Carrier::tail({1.0}, 0.0), std::invalid_argument);
  const Carrier t = Carrier::tail({1.0, kInf}, 0.25);
  CHECK(t.weight(1).is_pos_inf());
  CHECK(t.weight(7) == 0.25);
  CHECK(t.has_infinite_atom());
}

TEST_CASE("measure of sets") {
  CHECK(measure(Carrier::finite({1.0, kInf, 0.0}), MSet::of({1, 2})).is_pos_inf());
  CHECK(measure(Carrier::finite({1.0, 2.0, 3.0}), MSet{}) == 0.0);
  CHECK(measure(Carrier::tail({1.0, 0.5}, 0.25), MSet::cofinite({0})).is_pos_inf());
  CHECK(measure(Carrier::tail({1.0, 0.5}, 0.25), MSet::of({0, 1, 5})) == 1.75);
  CHECK(measure(Carrier::finite({1.0, 2.0, 4.0}), MSet::all()) == 7.0);
}

TEST_CASE("classify_points") {
  PointClasses p = classify_points(Carrier::finite({1.0, kInf, 0.0}));
  CHECK(p.null_points == std::vector<std::size_t>{2});
  CHECK(p.finite_atoms == std::vector<std::size_t>{0});
  CHECK(p.infinite_atoms == std::vector<std::size_t>{1});
  p = classify_points(Carrier::finite({2.0, 2.0}));
  CHECK(p.null_points.empty());
  CHECK(p.finite_atoms == std::vector<std::size_t>{0, 1});
  CHECK(p.infinite_atoms.empty());
  p = classify_points(Carrier::finite({0.0, 0.0, 5.0}));
  CHECK(p.null_points == std::vector<std::size_t>{0, 1});
  CHECK(p.finite_atoms == std::vector<std::size_t>{2});
  CHECK_THROWS(classify_points(Carrier::tail({1.0}, 1.0)));
}

TEST_CASE("exhausting integral") {
  const std::vector<ExtReal> g1{3.0, -1.0};
  CHECK(integrate(Carrier::finite({1.0, 2.0}), g1) == 1.0);
  const std::vector<ExtReal> g2{0.0, 4.0};
  CHECK(integrate(Carrier::finite({kInf, 1.0}), g2) == 4.0);
  const std::vector<ExtReal> g3{1.0, -1.0};
  CHECK(integrate(Carrier::finite({kInf, kInf}), g3).is_pos_inf());
  const std::vector<ExtReal> g4{-2.0, 4.0};
  CHECK(integrate(Carrier::finite({kInf, 1.0}), g4).is_neg_inf());
  // Null points ignore even infinite values.
  const std::vector<ExtReal> g5{kInf, 4.0};
  CHECK(integrate(Carrier::finite({0.0, 1.0}), g5) == 4.0);
  // A nonzero eventual value on a tail diverges; zero does not.
  const std::vector<ExtReal> g6{1.0};
  CHECK(integrate(Carrier::tail({2.0}, 0.5), g6, 0.0) == 2.0);
  CHECK(integrate(Carrier::tail({2.0}, 0.5), g6, -1.0).is_neg_inf());
}

TEST_CASE("property: measure is additive on disjoint sets and sigma-finite iff atom-free") {
  for (std::uint64_t k = 0; k < 50; ++k) {
    Rng rng(99, k);
    const std::size_t n = 1 + rng.below(8);
    std::vector<ExtReal> w(n);
    for (auto& x : w) {
      const auto r = rng.below(5);
      x = r == 0 ? ExtReal(0.0) : r == 1 ? kInf : ExtReal(rng.dyadic(1, 16, 2));
    }
    w[0] = 1.0;
    const Carrier c = Carrier::finite(w);
    const std::uint64_t full = (std::uint64_t{1} << n) - 1;
    for (std::uint64_t s = 0; s <= full; ++s) {
      const std::uint64_t a = s & rng.bits();
      const ExtReal total = measure(c, MSet::from_mask(s));
      CHECK(measure(c, MSet::from_mask(a)) + measure(c, MSet::from_mask(s & ~a)) == total);
      bool atom = false;
      for (std::size_t i = 0; i < n; ++i) atom = atom || ((s >> i & 1U) && w[i].is_pos_inf());
      CHECK(is_sigma_finite(c, MSet::from_mask(s)) == !atom);
    }
  }
}
