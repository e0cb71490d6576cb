#pragma once

// Seeded random instances shared by the checks.

#include <algorithm>
#include <vector>

#include "orlicz_kit/charges.hpp"
#include "orlicz_kit/norms.hpp"
#include "orlicz_kit/orlicz.hpp"
#include "orlicz_kit/rng.hpp"

namespace orlicz::instances {

/// Dyadic weight k/4 with k in 1..16; with the given odds 0 or inf instead.
inline ExtReal weight(Rng& rng, double p_zero, double p_inf) {
  const double u = rng.uniform();
  if (u < p_zero) return 0.0;
  if (u < p_zero + p_inf) return ExtReal::pos_inf();
  return rng.dyadic(1, 16, 2);
}

inline Carrier finite_carrier(Rng& rng, std::size_t n, double p_zero, double p_inf) {
  std::vector<ExtReal> w(n);
  for (auto& x : w) x = weight(rng, p_zero, p_inf);
  if (std::all_of(w.begin(), w.end(), [](ExtReal x) { return x == 0.0; })) w.front() = rng.dyadic(1, 16, 2);
  return Carrier::finite(std::move(w));
}

/// Catalog integrand over n points. `with_ball` admits the indicator family.
inline OrliczIntegrand catalog(Rng& rng, std::size_t dim, std::size_t n, bool with_ball = true) {
  static const double kPowers[] = {1.25, 1.5, 2.0, 2.5, 3.0, 4.0};
  switch (rng.below(with_ball ? 5 : 4)) {
    case 0: return OrliczIntegrand::power(kPowers[rng.below(6)], dim);
    case 1: return OrliczIntegrand::absolute(dim);
    case 2: return OrliczIntegrand::exponential(dim);
    case 3: {
      std::vector<double> p(n);
      for (auto& x : p) x = kPowers[rng.below(6)];
      if (p.empty()) p.push_back(2.0);
      return OrliczIntegrand::variable_exponent(p, dim);
    }
    default: return OrliczIntegrand::ball_indicator(dim, rng.dyadic(2, 8, 2));
  }
}

inline std::vector<double> vec(Rng& rng, std::size_t dim, double lo, double hi) {
  std::vector<double> x(dim);
  for (auto& v : x) v = rng.uniform(lo, hi);
  return x;
}

inline SampledFunction function(Rng& rng, const Carrier& c, std::size_t dim, double scale) {
  std::vector<std::vector<double>> values(c.size());
  for (auto& v : values) v = vec(rng, dim, -scale, scale);
  return SampledFunction::on(c, std::move(values));
}

}  // namespace orlicz::instances
