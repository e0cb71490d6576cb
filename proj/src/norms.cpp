#include "orlicz_kit/norms.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace orlicz {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kHuge = 1e300;
constexpr double kTiny = 1e-300;
constexpr double kGrowth = 4.0;

double dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

void require_match(const OrliczIntegrand& phi, const SampledFunction& u) {
  if (phi.dimension() != u.dimension()) throw std::invalid_argument("function and integrand dimensions differ");
}

double max_norm(const SampledFunction& u) {
  double m = 0.0;
  for (std::size_t i = 0; i < u.values.size(); ++i) {
    if (u.carrier.weight(i) > 0.0) m = std::max(m, euclidean_norm(u.values[i]));
  }
  if (u.carrier.is_tail()) m = std::max(m, euclidean_norm(u.eventual_or_zero()));
  return m;
}

}  // namespace

SampledFunction SampledFunction::on(const Carrier& c, std::vector<std::vector<double>> values,
                                    std::optional<std::vector<double>> eventual) {
  if (values.size() != c.size()) throw std::invalid_argument("function needs one value per carrier point");
  if (eventual && !c.is_tail()) throw std::invalid_argument("eventual value needs a tail carrier");
  std::size_t dim = 0;
  if (!values.empty()) dim = values.front().size();
  else if (eventual) dim = eventual->size();
  if (dim == 0) throw std::invalid_argument("function values must have positive dimension");
  for (const auto& v : values) {
    if (v.size() != dim) throw std::invalid_argument("function values have mixed dimensions");
    for (double x : v) {
      if (!std::isfinite(x)) throw std::invalid_argument("function values must be finite");
    }
  }
  if (eventual && eventual->size() != dim) throw std::invalid_argument("eventual value has the wrong dimension");
  SampledFunction u{c, std::move(values), std::move(eventual)};
  u.dim_ = dim;
  return u;
}

SampledFunction SampledFunction::scalar(const Carrier& c, const std::vector<double>& values,
                                        std::optional<double> eventual) {
  std::vector<std::vector<double>> v;
  v.reserve(values.size());
  for (double x : values) v.push_back({x});
  std::optional<std::vector<double>> e;
  if (eventual) e = std::vector<double>{*eventual};
  return on(c, std::move(v), std::move(e));
}

std::vector<double> SampledFunction::at(std::size_t i) const {
  if (i < values.size()) return values[i];
  if (!carrier.is_tail()) throw std::out_of_range("point is not on the carrier");
  return eventual_or_zero();
}

std::vector<double> SampledFunction::eventual_or_zero() const {
  return eventual ? *eventual : std::vector<double>(dim_, 0.0);
}

bool SampledFunction::vanishes_on_support() const {
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (carrier.weight(i) == 0.0) continue;
    for (double x : values[i]) {
      if (x != 0.0) return false;
    }
  }
  if (eventual) {
    for (double x : *eventual) {
      if (x != 0.0) return false;
    }
  }
  return true;
}

SampledFunction SampledFunction::scaled(double a) const {
  SampledFunction out = *this;
  for (auto& v : out.values) {
    for (double& x : v) x *= a;
  }
  if (out.eventual) {
    for (double& x : *out.eventual) x *= a;
  }
  return out;
}

SampledFunction operator+(const SampledFunction& a, const SampledFunction& b) {
  if (!(a.carrier == b.carrier) || a.dimension() != b.dimension()) {
    throw std::invalid_argument("functions live on different carriers");
  }
  SampledFunction out = a;
  for (std::size_t i = 0; i < out.values.size(); ++i) {
    for (std::size_t k = 0; k < out.dim_; ++k) out.values[i][k] += b.values[i][k];
  }
  if (a.eventual || b.eventual) {
    auto e = a.eventual_or_zero();
    const auto f = b.eventual_or_zero();
    for (std::size_t k = 0; k < e.size(); ++k) e[k] += f[k];
    out.eventual = e;
  }
  return out;
}

ExtReal modular(const OrliczIntegrand& phi, const SampledFunction& u) {
  require_match(phi, u);
  const Carrier& c = u.carrier;
  std::vector<ExtReal> g;
  g.reserve(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    // 0 * phi = 0 at null points even where phi(u) = inf.
    g.push_back(c.weight(i) == 0.0 ? ExtReal(0.0) : phi(i, u.values[i]));
  }
  ExtReal eventual = 0.0;
  if (c.is_tail()) eventual = phi(c.size(), u.eventual_or_zero());
  return integrate(c, g, eventual);
}

NormResult luxemburg_norm(const OrliczIntegrand& phi, const SampledFunction& u, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
  require_match(phi, u);
  NormResult res;
  if (u.vanishes_on_support()) return res;

  auto feasible = [&](double a) {
    ++res.evaluations;
    return modular(phi, u.scaled(1.0 / a)) <= 1.0;
  };

  double lo = 1.0;
  double hi = 1.0;
  if (feasible(1.0)) {
    do {
      hi = lo;
      lo = hi / kGrowth;
      if (lo < kTiny) {
        res.upper = hi;
        return res;
      }
    } while (feasible(lo));
  } else {
    do {
      lo = hi;
      hi = lo * kGrowth;
      if (hi > kHuge) {
        res.value = res.lower = res.upper = ExtReal::pos_inf();
        return res;
      }
    } while (!feasible(hi));
  }
  // Invariant: I(u / lo) > 1 >= I(u / hi).
  while (hi - lo > tol * hi) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (feasible(mid)) hi = mid;
    else lo = mid;
  }
  res.lower = lo;
  res.upper = hi;
  res.value = 0.5 * (lo + hi);
  return res;
}

NormResult amemiya_norm(const OrliczIntegrand& phi, const SampledFunction& u, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
  require_match(phi, u);
  NormResult res;
  if (u.vanishes_on_support()) return res;

  // F(a) = 1 + I(a u) is nondecreasing; h(a) = F(a) / a is quasiconvex.
  auto F = [&](double t) {
    ++res.evaluations;
    return (ExtReal(1.0) + modular(phi, u.scaled(std::exp(t)))).to_double();
  };
  auto h = [&](double t) { return F(t) / std::exp(t); };

  const double t0 = -std::log(max_norm(u));
  const double step = std::log(kGrowth);
  const double t_cap = t0 + std::log(1e12);
  constexpr double kGolden = 1.618033988749895;

  double a = t0 - step, b = t0, c = t0 + step;
  double ha = h(a), hb = h(b), hc = h(c);
  for (int guard = 0; guard < 4000; ++guard) {
    if (ha < hb || (std::isinf(hb) && std::isinf(hc))) {
      const double na = b - kGolden * (c - b);
      c = b, hc = hb;
      b = a, hb = ha;
      a = std::min(na, b - step);
      ha = h(a);
    } else if (hc < hb) {
      if (c > t_cap) {
        // Linear growth: h decreases to its infimum without attaining it.
        // F(a)/a - 1/a is nondecreasing, so it bounds h from below beyond c.
        const double alpha = std::exp(c);
        res.value = res.upper = hc;
        res.lower = hc - 1.0 / alpha;
        return res;
      }
      const double nc = b + kGolden * (b - a);
      a = b, ha = hb;
      b = c, hb = hc;
      c = std::max(nc, b + step);
      hc = h(c);
    } else {
      break;
    }
  }

  constexpr double kInvPhi = 0.6180339887498949;
  double x1 = c - kInvPhi * (c - a);
  double x2 = a + kInvPhi * (c - a);
  double h1 = h(x1), h2 = h(x2);
  double best = std::min({ha, hb, hc, h1, h2});
  while (c - a > tol) {
    if (h1 <= h2) {
      c = x2;
      x2 = x1, h2 = h1;
      x1 = c - kInvPhi * (c - a);
      h1 = h(x1);
      best = std::min(best, h1);
    } else {
      a = x1;
      x1 = x2, h1 = h2;
      x2 = a + kInvPhi * (c - a);
      h2 = h(x2);
      best = std::min(best, h2);
    }
  }
  // The minimizer lies in [e^a, e^c]; there F >= F(e^a) and 1/alpha >= e^{-c}.
  const double lower = F(a) / std::exp(c);
  res.value = res.upper = best;
  res.lower = std::min(lower, best);
  return res;
}

DualNorms dual_norms(const OrliczIntegrand& phi, const SampledFunction& v, double lux_tol, double amemiya_tol) {
  const OrliczIntegrand conj = phi.conjugate_integrand();
  return {luxemburg_norm(conj, v, lux_tol), amemiya_norm(conj, v, amemiya_tol)};
}

ModularNormCheck modular_norm_inequalities(const OrliczIntegrand& phi, const SampledFunction& u, double tol) {
  ModularNormCheck out;
  const NormResult n = luxemburg_norm(phi, u, 1e-12);
  out.norm = n.value.to_double();
  out.modular = modular(phi, u);
  const double p = out.norm;
  const double f = out.modular.to_double();
  const double allowed = tol * std::max(1.0, p);
  out.a_applies = p <= 1.0;
  out.b_applies = p > 1.0;
  if (std::isinf(p)) {
    // Only (b) and (c) can be stated; both need I(u) = inf.
    out.slack_b = std::isinf(f) ? 0.0 : -kInf;
    out.slack_c = out.slack_b;
  } else {
    out.slack_a = p - f;
    out.slack_b = f - p;
    out.slack_c = 1.0 + f - p;
  }
  if (out.a_applies) out.a_holds = out.slack_a >= -allowed;
  if (out.b_applies) out.b_holds = out.slack_b >= -allowed;
  out.c_holds = out.slack_c >= -allowed;
  return out;
}

HoelderCheck hoelder(const OrliczIntegrand& phi, const SampledFunction& u, const SampledFunction& v, double tol) {
  require_match(phi, u);
  require_match(phi, v);
  if (!(u.carrier == v.carrier)) throw std::invalid_argument("u and v live on different carriers");
  const Carrier& c = u.carrier;
  std::vector<ExtReal> g;
  for (std::size_t i = 0; i < c.size(); ++i) g.push_back(std::abs(dot(u.values[i], v.values[i])));
  ExtReal eventual = 0.0;
  if (c.is_tail()) eventual = std::abs(dot(u.eventual_or_zero(), v.eventual_or_zero()));

  HoelderCheck out;
  out.lhs = integrate(c, g, eventual);
  const ExtReal nu = luxemburg_norm(phi, u).value;
  const ExtReal nv = luxemburg_norm(phi.conjugate_integrand(), v).value;
  out.rhs = ExtReal(2.0) * nv * nu;
  if (out.rhs.is_pos_inf()) {
    out.holds = true;
  } else if (out.lhs.is_pos_inf()) {
    out.holds = false;
  } else {
    out.holds = out.lhs.value() <= out.rhs.value() + tol * std::max(1.0, out.rhs.value());
  }
  return out;
}

std::optional<EmbeddingConstants> embedding_constants(const OrliczIntegrand& phi, const Carrier& c, double eps,
                                                      const SamplingGrid& grid) {
  if (!(eps > 0.0)) throw std::invalid_argument("eps must be positive");
  if (c.is_tail() || c.has_infinite_atom()) throw std::invalid_argument("embedding constants need a finite measure");
  const auto dirs = grid.directions();
  EmbeddingConstants k;
  k.eps = eps;
  for (std::size_t i = 0; i < c.size(); ++i) {
    k.total_measure += c.weight(i).value();
    // Convexity with phi(0) = 0 puts both extremes on the spheres.
    bool inner_ok = true;
    bool outer_ok = true;
    const double outer = (1.0 / eps) * (1.0 + 1e-9);
    for (const auto& d : dirs) {
      std::vector<double> x(d.size()), y(d.size());
      for (std::size_t j = 0; j < d.size(); ++j) {
        x[j] = eps * d[j];
        y[j] = outer * d[j];
      }
      inner_ok = inner_ok && phi(i, x) <= 1.0;
      outer_ok = outer_ok && phi(i, y) >= 1.0;
    }
    if (inner_ok && outer_ok) k.omega_eps.push_back(i);
  }
  if (k.omega_eps.empty()) return std::nullopt;
  k.c_inf = (1.0 + k.total_measure) / eps;
  k.c_1 = (1.0 + k.total_measure / eps) / eps;
  return k;
}

EmbeddingCheck check_embedding(const OrliczIntegrand& phi, const EmbeddingConstants& k, const SampledFunction& u) {
  EmbeddingCheck out;
  const Carrier& c = u.carrier;
  for (std::size_t i = 0; i < c.size(); ++i) {
    const double r = euclidean_norm(u.values[i]);
    if (r != 0.0 && !std::binary_search(k.omega_eps.begin(), k.omega_eps.end(), i)) {
      throw std::invalid_argument("u must be supported in Omega_eps");
    }
    if (c.weight(i) > 0.0) out.amemiya_inf = std::max(out.amemiya_inf, r);
    out.amemiya_1 += c.weight(i).value() * r;
  }
  out.amemiya_phi = amemiya_norm(phi, u).value.to_double();
  out.slack_inf = k.c_inf * out.amemiya_inf - out.amemiya_phi;
  out.slack_1 = k.c_1 * out.amemiya_phi - out.amemiya_1;
  return out;
}

}  // namespace orlicz
