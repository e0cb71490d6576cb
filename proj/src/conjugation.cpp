#include "orlicz_kit/conjugation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <optional>
#include <stdexcept>

#include "exact.hpp"

namespace orlicz {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require_increasing(const std::vector<double>& axis, const char* what) {
  if (axis.empty()) throw std::invalid_argument(std::string(what) + " is empty");
  for (std::size_t i = 0; i < axis.size(); ++i) {
    if (!std::isfinite(axis[i])) throw std::invalid_argument(std::string(what) + " has a non-finite node");
    if (i > 0 && !(axis[i] > axis[i - 1])) throw std::invalid_argument(std::string(what) + " is not strictly increasing");
  }
}

struct Hull {
  std::vector<double> x;
  std::vector<double> g;
  bool open_left = false;   ///< the node left of the first vertex is inf (domain boundary)
  bool open_right = false;  ///< same on the right
};

/// Lower convex hull of the finite samples, strictly convex (collinear
/// middle vertices removed) using exact orientation tests.
Hull lower_hull(const GridFunction& g) {
  const auto& xs = g.axes[0];
  Hull h;
  std::size_t first = xs.size(), last = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const ExtReal v = g.values[i];
    if (v.is_neg_inf()) throw std::invalid_argument("conjugate input takes the value -inf");
    if (v.is_pos_inf()) continue;
    first = std::min(first, i);
    last = i;
    const double vi = v.value();
    while (h.x.size() >= 2 &&
           exact::orientation(h.x[h.x.size() - 2], h.g[h.g.size() - 2], h.x.back(), h.g.back(), xs[i], vi) <= 0) {
      h.x.pop_back();
      h.g.pop_back();
    }
    h.x.push_back(xs[i]);
    h.g.push_back(vi);
  }
  if (h.x.empty()) throw std::invalid_argument("conjugate input is identically inf");
  h.open_left = first > 0;
  h.open_right = last + 1 < xs.size();
  return h;
}

/// s x - g with a single rounding.
double affine(double s, double x, double g) { return std::fma(s, x, -g); }

bool within_range(const Hull& h, double s) {
  const std::size_t m = h.x.size();
  if (m == 1) return h.open_left && h.open_right;
  // s >= first edge slope  <=>  s x1 - g1 >= s x0 - g0.
  const bool lower_ok = h.open_left || exact::compare_affine(s, h.x[1], h.g[1], s, h.x[0], h.g[0]) >= 0;
  const bool upper_ok = h.open_right || exact::compare_affine(s, h.x[m - 1], h.g[m - 1], s, h.x[m - 2], h.g[m - 2]) <= 0;
  return lower_ok && upper_ok;
}

std::vector<double> scaled_vec(const std::vector<double>& d, double r) {
  std::vector<double> x(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) x[i] = r * d[i];
  return x;
}

}  // namespace

GridFunction GridFunction::make(std::vector<std::vector<double>> axes, std::vector<ExtReal> values) {
  if (axes.empty() || axes.size() > 2) throw std::invalid_argument("grid functions are 1-d or 2-d");
  std::size_t n = 1;
  for (const auto& a : axes) {
    require_increasing(a, "grid axis");
    n *= a.size();
  }
  if (values.size() != n) throw std::invalid_argument("grid function has the wrong number of values");
  if (std::none_of(values.begin(), values.end(), [](ExtReal v) { return v.is_finite(); })) {
    throw std::invalid_argument("grid function needs at least one finite value");
  }
  return GridFunction{std::move(axes), std::move(values)};
}

GridFunction GridFunction::sample(std::vector<std::vector<double>> axes,
                                  const std::function<ExtReal(std::span<const double>)>& f) {
  std::size_t n = 1;
  for (const auto& a : axes) n *= a.size();
  GridFunction tmp{axes, {}};
  std::vector<ExtReal> values;
  values.reserve(n);
  for (std::size_t k = 0; k < n; ++k) values.push_back(f(tmp.node(k)));
  return make(std::move(axes), std::move(values));
}

std::vector<double> GridFunction::node(std::size_t k) const {
  if (axes.size() == 1) return {axes[0][k]};
  const std::size_t n1 = axes[1].size();
  return {axes[0][k / n1], axes[1][k % n1]};
}

const char* method_name(ConjugateMethod m) {
  switch (m) {
    case ConjugateMethod::Analytic: return "analytic";
    case ConjugateMethod::LinearTimeTransform1D: return "linear_time_1d";
    case ConjugateMethod::GridSup: return "grid_sup";
  }
  return "grid_sup";
}

std::vector<double> default_dual_axis(const GridFunction& g, std::size_t n) {
  if (g.dimension() != 1) throw std::invalid_argument("default dual axis is 1-d");
  if (n < 2) throw std::invalid_argument("dual axis needs at least two nodes");
  const Hull h = lower_hull(g);
  double lo = -1.0, hi = 1.0;
  if (h.x.size() >= 2) {
    lo = (h.g[1] - h.g[0]) / (h.x[1] - h.x[0]);
    const std::size_t m = h.x.size();
    hi = (h.g[m - 1] - h.g[m - 2]) / (h.x[m - 1] - h.x[m - 2]);
    const double pad = 0.1 * std::max(hi - lo, std::max(std::abs(lo), std::abs(hi)));
    lo -= pad;
    hi += pad;
    if (!(hi > lo)) {
      lo -= 1.0;
      hi += 1.0;
    }
  }
  std::vector<double> s(n);
  for (std::size_t k = 0; k < n; ++k) s[k] = lo + (hi - lo) * static_cast<double>(k) / static_cast<double>(n - 1);
  return s;
}

ConjugateTable conjugate_1d(const GridFunction& g, const std::vector<double>& dual_axis) {
  if (g.dimension() != 1) throw std::invalid_argument("conjugate_1d needs a 1-d grid function");
  require_increasing(dual_axis, "dual axis");
  const Hull h = lower_hull(g);
  ConjugateTable t{g, {dual_axis}, {}, {}, ConjugateMethod::LinearTimeTransform1D};
  t.values.reserve(dual_axis.size());
  t.within_slope_range.reserve(dual_axis.size());
  std::size_t k = 0;
  for (double s : dual_axis) {
    // s x_k - g_k is strictly concave along the hull and its argmax moves
    // right as s grows.
    while (k + 1 < h.x.size() && exact::compare_affine(s, h.x[k + 1], h.g[k + 1], s, h.x[k], h.g[k]) >= 0) ++k;
    t.values.push_back(affine(s, h.x[k], h.g[k]));
    t.within_slope_range.push_back(within_range(h, s));
  }
  return t;
}

ConjugateTable conjugate_1d(const GridFunction& g) { return conjugate_1d(g, default_dual_axis(g, g.size())); }

ConjugateTable grid_sup(const GridFunction& g, const std::vector<std::vector<double>>& dual_axes) {
  if (dual_axes.size() != g.dimension()) throw std::invalid_argument("dual grid dimension mismatch");
  for (const auto& a : dual_axes) require_increasing(a, "dual axis");
  ConjugateTable t{g, dual_axes, {}, {}, ConjugateMethod::GridSup};
  const GridFunction dual_shape{dual_axes, {}};
  std::size_t n = 1;
  for (const auto& a : dual_axes) n *= a.size();
  t.values.reserve(n);
  t.within_slope_range.reserve(n);
  std::optional<Hull> hull;
  if (g.dimension() == 1) hull = lower_hull(g);
  for (std::size_t j = 0; j < n; ++j) {
    const auto y = dual_shape.node(j);
    double best = -kInf;
    std::size_t arg = 0;
    for (std::size_t k = 0; k < g.size(); ++k) {
      const ExtReal v = g.values[k];
      if (v.is_neg_inf()) throw std::invalid_argument("conjugate input takes the value -inf");
      if (v.is_pos_inf()) continue;
      const auto x = g.node(k);
      const double val = x.size() == 1 ? affine(y[0], x[0], v.value()) : std::fma(y[0], x[0], affine(y[1], x[1], v.value()));
      if (val > best) {
        best = val;
        arg = k;
      }
    }
    if (best == -kInf) throw std::invalid_argument("conjugate input is identically inf");
    t.values.push_back(best);
    bool genuine = true;
    if (g.dimension() == 1) {
      genuine = within_range(*hull, y[0]);
    } else {
      // Maximizers on the grid boundary may be truncation artifacts.
      const std::size_t n1 = g.axes[1].size();
      const std::size_t i0 = arg / n1, i1 = arg % n1;
      genuine = i0 > 0 && i0 + 1 < g.axes[0].size() && i1 > 0 && i1 + 1 < n1;
    }
    t.within_slope_range.push_back(genuine);
  }
  return t;
}

std::vector<ExtReal> biconjugate_1d(const ConjugateTable& t) {
  if (t.input.dimension() != 1) throw std::invalid_argument("biconjugate_1d needs a 1-d table");
  std::vector<ExtReal> out;
  const auto& xs = t.input.axes[0];
  const auto& ss = t.dual_axes[0];
  out.reserve(xs.size());
  for (double x : xs) {
    ExtReal best = ExtReal::neg_inf();
    for (std::size_t j = 0; j < ss.size(); ++j) {
      if (!t.values[j].is_finite()) continue;
      best = max(best, ExtReal(affine(x, ss[j], t.values[j].value())));
    }
    out.push_back(best);
  }
  return out;
}

RadialConjugate conjugate_radial(const OrliczIntegrand& phi, const std::vector<double>& dual_radii, std::size_t point,
                                 std::size_t nodes_per_side) {
  if (!phi.is_radial()) throw std::invalid_argument("conjugate_radial needs a radial integrand");
  require_increasing(dual_radii, "dual radii");
  if (dual_radii.front() < 0.0) throw std::invalid_argument("dual radii must be nonnegative");
  if (nodes_per_side < 2) throw std::invalid_argument("need at least two nodes per side");
  const double s_max = dual_radii.back();

  double R = 1.0;
  constexpr double kMaxExtent = 1099511627776.0;  // 2^40
  for (;;) {
    const double h = R / static_cast<double>(nodes_per_side);
    const ExtReal end = phi.profile(point, R);
    if (end.is_pos_inf() || R >= kMaxExtent) break;
    const ExtReal before = phi.profile(point, R - h);
    if (before.is_finite() && (end.value() - before.value()) / h >= s_max) break;
    R *= 2.0;
  }
  const std::size_t n = 2 * nodes_per_side + 1;
  const double h = R / static_cast<double>(nodes_per_side);
  std::vector<double> xs(n);
  std::vector<ExtReal> vals(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double x = (static_cast<double>(k) - static_cast<double>(nodes_per_side)) * h;
    xs[k] = x;
    vals[k] = phi.profile(point, std::abs(x));
  }
  const ConjugateTable t = conjugate_1d(GridFunction::make({xs}, vals), dual_radii);
  return {dual_radii, t.values, t.within_slope_range, R, h};
}

OrliczIntegrand with_numeric_conjugate(const OrliczIntegrand& phi, double s_max, const std::vector<std::size_t>& points,
                                       std::size_t dual_nodes) {
  if (!(s_max > 0.0)) throw std::invalid_argument("s_max must be positive");
  if (points.empty()) throw std::invalid_argument("no points to conjugate at");
  std::vector<double> radii(dual_nodes);
  for (std::size_t k = 0; k < dual_nodes; ++k) {
    radii[k] = s_max * static_cast<double>(k) / static_cast<double>(dual_nodes - 1);
  }
  auto tables = std::make_shared<std::vector<RadialConjugate>>();
  for (std::size_t p : points) tables->push_back(conjugate_radial(phi, radii, p));
  const double step = s_max / static_cast<double>(dual_nodes - 1);
  return phi.with_conjugate_profile([tables, step](std::size_t i, double s) -> ExtReal {
    const RadialConjugate& t = (*tables)[std::min(i, tables->size() - 1)];
    const std::size_t n = t.radii.size();
    if (s <= 0.0) return t.values[0];
    if (s > t.radii.back()) return kInf;
    std::size_t k = std::min(static_cast<std::size_t>(s / step), n - 2);
    if (!t.within_slope_range[k + 1]) {
      if (!t.within_slope_range[k]) return kInf;
      return s <= t.radii[k] ? t.values[k] : ExtReal(kInf);
    }
    if (!t.within_slope_range[k]) return kInf;
    const double w = (s - t.radii[k]) / step;
    return (1.0 - w) * t.values[k].value() + w * t.values[k + 1].value();
  });
}

ConjugateBounds quantitative_conjugate_bounds(const OrliczIntegrand& phi, const SamplingGrid& grid, std::size_t point,
                                              double r, double eps) {
  if (!(r > 0.0) || !(eps > 0.0)) throw std::invalid_argument("r and eps must be positive");
  const auto dirs = grid.directions();
  const auto radii = grid.radii();
  ConjugateBounds out;
  out.r = r;
  out.eps = eps;

  // phi(x)/|x| is nondecreasing along rays, so the sphere |x| = r bounds it below outside.
  double s = kInf;
  for (const auto& d : dirs) {
    const ExtReal v = phi(point, scaled_vec(d, r));
    s = std::min(s, v.is_finite() ? v.value() / r : kInf);
  }
  out.s = s;

  constexpr double kRel = 1e-12;
  constexpr int kSamples = 64;
  if (std::isfinite(s) && s > 0.0) {
    for (int k = 0; k < kSamples; ++k) {
      const double rho = s * static_cast<double>(k) / kSamples;
      for (const auto& d : dirs) {
        const ExtReal v = phi.conjugate(point, scaled_vec(d, rho));
        const double bound = r * rho;
        const double excess = v.is_finite() ? v.value() - bound : kInf;
        if (excess > kRel * std::max(1.0, bound)) {
          out.upper_ok = false;
          out.upper_worst = std::max(out.upper_worst, excess);
        }
      }
    }
  }

  for (double rho : radii) {
    bool below = true;
    for (const auto& d : dirs) below = below && phi(point, scaled_vec(d, rho)) < eps;
    if (below) out.delta = rho;
  }
  for (double rho : radii) {
    for (const auto& d : dirs) {
      const ExtReal v = phi.conjugate(point, scaled_vec(d, rho));
      if (v.is_pos_inf()) continue;
      const double bound = out.delta * rho - eps;
      const double deficit = bound - v.value();
      if (deficit > kRel * std::max(1.0, std::abs(bound))) {
        out.lower_ok = false;
        out.lower_worst = std::max(out.lower_worst, deficit);
      }
    }
  }
  return out;
}

SubdifferentialCheck subdifferential_check(const OrliczIntegrand& phi, std::size_t point, std::span<const double> x,
                                           std::span<const double> xp, double tol) {
  if (x.size() != xp.size()) throw std::invalid_argument("x and x' have different dimensions");
  double pairing = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) pairing += x[i] * xp[i];
  SubdifferentialCheck out;
  out.gap = phi(point, x) + phi.conjugate(point, xp) - ExtReal(pairing);
  out.member = out.gap <= tol;
  return out;
}

GridFunction lipschitz_regularize(const GridFunction& g, double lambda) {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) throw std::invalid_argument("lambda must be positive and finite");
  for (ExtReal v : g.values) {
    if (v.is_neg_inf()) throw std::invalid_argument("lipschitz_regularize needs g bounded below");
  }
  GridFunction f = g;
  if (g.dimension() == 2) {
    for (std::size_t i = 0; i < g.size(); ++i) {
      const auto xi = g.node(i);
      ExtReal best = ExtReal::pos_inf();
      for (std::size_t j = 0; j < g.size(); ++j) {
        if (!g.values[j].is_finite()) continue;
        const auto xj = g.node(j);
        const double d = std::hypot(xi[0] - xj[0], xi[1] - xj[1]);
        best = min(best, ExtReal(std::fma(lambda, d, g.values[j].value())));
      }
      f.values[i] = best;
    }
    return f;
  }

  const auto& xs = g.axes[0];
  const std::size_t n = xs.size();
  std::vector<double> fwd(n, kInf), bwd(n, kInf);
  // Forward: min_{j <= i} g_j + lambda (x_i - x_j); keep the exact argmin of g_j - lambda x_j.
  std::size_t best = n;
  for (std::size_t i = 0; i < n; ++i) {
    if (g.values[i].is_finite()) {
      const double gi = g.values[i].value();
      if (best == n || exact::compare_affine(lambda, xs[i], gi, lambda, xs[best], g.values[best].value()) > 0) best = i;
    }
    if (best != n) fwd[i] = std::fma(lambda, xs[i] - xs[best], g.values[best].value());
  }
  // Backward: min_{j >= i} g_j + lambda (x_j - x_i); argmin of g_j + lambda x_j.
  best = n;
  for (std::size_t i = n; i-- > 0;) {
    if (g.values[i].is_finite()) {
      const double gi = g.values[i].value();
      if (best == n || exact::compare_affine(lambda, xs[i], -gi, lambda, xs[best], -g.values[best].value()) < 0) best = i;
    }
    if (best != n) bwd[i] = std::fma(lambda, xs[best] - xs[i], g.values[best].value());
  }
  for (std::size_t i = 0; i < n; ++i) f.values[i] = std::min(fwd[i], bwd[i]);
  return f;
}

std::size_t lipschitz_violations(const GridFunction& f, double lambda, bool all_pairs) {
  if (f.dimension() != 1) throw std::invalid_argument("lipschitz_violations is 1-d");
  const auto& xs = f.axes[0];
  std::size_t bad = 0;
  auto check = [&](std::size_t i, std::size_t j) {
    const ExtReal a = f.values[i], b = f.values[j];
    if (a == b) return;
    if (!a.is_finite() || !b.is_finite()) {
      ++bad;
      return;
    }
    double d, de, p, pe, q, qe;
    exact::two_sum(xs[j], -xs[i], d, de);
    exact::two_product(lambda, d, p, pe);
    exact::two_product(lambda, de, q, qe);
    const double va = a.value(), vb = b.value();
    // |a - b| - lambda (x_j - x_i) <= 0, exactly.
    if (exact::sign_of_sum({va, -vb, -p, -pe, -q, -qe}) > 0 || exact::sign_of_sum({vb, -va, -p, -pe, -q, -qe}) > 0) ++bad;
  };
  for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
    if (all_pairs) {
      for (std::size_t j = i + 1; j < xs.size(); ++j) check(i, j);
    } else {
      check(i, i + 1);
    }
  }
  return bad;
}

}  // namespace orlicz
