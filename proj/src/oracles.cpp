#include "orlicz_kit/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace orlicz::oracle {

namespace {

constexpr std::size_t kMaxPoints = 12;

double mass_sum(const std::vector<double>& m, std::uint64_t mask) {
  double s = 0.0;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (mask >> i & 1U) s += m[i];
  }
  return s;
}

}  // namespace

double total_variation(const Charge& nu) {
  std::vector<double> elems = nu.masses;
  if (nu.carrier.is_tail()) elems.push_back(nu.lambda);
  const std::size_t n = elems.size();
  if (n == 0) return 0.0;
  if (n > kMaxPoints) throw std::invalid_argument("partition enumeration is capped at 12 elements");

  // Restricted growth strings enumerate each set partition once.
  std::vector<std::size_t> block(n, 0), maxb(n, 0);
  std::vector<double> sums(n);
  double best = 0.0;
  for (;;) {
    std::fill(sums.begin(), sums.end(), 0.0);
    for (std::size_t i = 0; i < n; ++i) sums[block[i]] += elems[i];
    double v = 0.0;
    for (std::size_t b = 0; b <= maxb[n - 1]; ++b) v += std::abs(sums[b]);
    best = std::max(best, v);

    std::size_t i = n - 1;
    while (i > 0 && block[i] == maxb[i - 1] + 1) --i;
    if (i == 0) break;
    ++block[i];
    maxb[i] = std::max(maxb[i - 1], block[i]);
    for (std::size_t j = i + 1; j < n; ++j) {
      block[j] = 0;
      maxb[j] = maxb[j - 1];
    }
  }
  return best;
}

double absolutely_continuous_part(const Charge& nu, const Carrier& mu, std::uint64_t a) {
  if (mu.is_tail()) throw std::invalid_argument("oracle needs a FinitePoints carrier");
  if (!nu.nonnegative()) throw std::invalid_argument("oracle needs nu >= 0");
  const std::size_t n = mu.size();
  if (n > kMaxPoints) throw std::invalid_argument("oracle is capped at 12 points");
  std::vector<double> x(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    if (!(a >> i & 1U)) continue;
    const ExtReal w = mu.weight(i);
    // A density u with int_E u dmu <= nu(E) < inf must vanish on infinite
    // atoms, and integrates to 0 over null points.
    if (w == 0.0 || w.is_pos_inf()) continue;
    double slack = std::numeric_limits<double>::infinity();
    const std::uint64_t rest = a & ~(std::uint64_t{1} << i);
    for (std::uint64_t sub = rest;; sub = (sub - 1) & rest) {
      const std::uint64_t e = sub | (std::uint64_t{1} << i);
      slack = std::min(slack, mass_sum(nu.masses, e) - mass_sum(x, e));
      if (sub == 0) break;
    }
    x[i] = std::max(slack, 0.0);
  }
  return mass_sum(x, a);
}

GiorgiTables de_giorgi(const Charge& nu, const Carrier& mu) {
  if (mu.is_tail()) throw std::invalid_argument("oracle needs a FinitePoints carrier");
  if (!nu.nonnegative()) throw std::invalid_argument("oracle needs nu >= 0");
  const std::size_t n = mu.size();
  if (n > kMaxPoints) throw std::invalid_argument("oracle is capped at 12 points");
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  const std::size_t count = std::size_t{1} << n;

  std::vector<double> nu_of(count);
  std::vector<char> mu_inf(count), mu_zero(count);
  for (std::uint64_t m = 0; m < count; ++m) {
    nu_of[m] = mass_sum(nu.masses, m);
    const ExtReal w = measure(mu, MSet::from_mask(m));
    mu_inf[m] = w.is_pos_inf();
    mu_zero[m] = w == 0.0;
  }

  // E is admissible for the diffuse part iff each subset of positive
  // nu-mass has infinite mu-measure.
  std::vector<char> admissible(count, 1);
  for (std::uint64_t e = 0; e < count; ++e) {
    for (std::uint64_t sub = e;; sub = (sub - 1) & e) {
      if (nu_of[sub] > 0.0 && !mu_inf[sub]) {
        admissible[e] = 0;
        break;
      }
      if (sub == 0) break;
    }
  }

  GiorgiTables t;
  t.diffuse.assign(count, 0.0);
  t.singular.assign(count, 0.0);
  for (std::uint64_t a = 0; a < count; ++a) {
    for (std::uint64_t e = a;; e = (e - 1) & a) {
      if (admissible[e]) t.diffuse[a] = std::max(t.diffuse[a], nu_of[e]);
      if (mu_zero[e]) t.singular[a] = std::max(t.singular[a], nu_of[e]);
      if (e == 0) break;
    }
  }
  t.absolutely_continuous.resize(n);
  for (std::size_t i = 0; i < n; ++i) t.absolutely_continuous[i] = absolutely_continuous_part(nu, mu, std::uint64_t{1} << i);
  t.absolutely_continuous_total = absolutely_continuous_part(nu, mu, full);
  return t;
}

GridFunction lipschitz_envelope(const GridFunction& g, double lambda) {
  if (g.dimension() != 1) throw std::invalid_argument("envelope oracle is 1-d");
  const auto& xs = g.axes[0];
  GridFunction f = g;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    ExtReal best = ExtReal::pos_inf();
    for (std::size_t j = 0; j < xs.size(); ++j) {
      if (!g.values[j].is_finite()) continue;
      best = min(best, ExtReal(std::fma(lambda, std::abs(xs[i] - xs[j]), g.values[j].value())));
    }
    f.values[i] = best;
  }
  return f;
}

}  // namespace orlicz::oracle
