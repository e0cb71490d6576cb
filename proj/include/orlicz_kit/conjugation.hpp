#pragma once

#include <functional>
#include <span>
#include <vector>

#include "orlicz_kit/extended_real.hpp"
#include "orlicz_kit/orlicz.hpp"

namespace orlicz {

/// Extended-real samples on a 1-d or 2-d product grid, stored row-major
/// (the last axis varies fastest).
struct GridFunction {
  std::vector<std::vector<double>> axes;
  std::vector<ExtReal> values;

  static GridFunction make(std::vector<std::vector<double>> axes, std::vector<ExtReal> values);
  static GridFunction sample(std::vector<std::vector<double>> axes,
                             const std::function<ExtReal(std::span<const double>)>& f);

  std::size_t dimension() const noexcept { return axes.size(); }
  std::size_t size() const noexcept { return values.size(); }
  /// Coordinates of the node with flat index k.
  std::vector<double> node(std::size_t k) const;
};

enum class ConjugateMethod { Analytic, LinearTimeTransform1D, GridSup };

const char* method_name(ConjugateMethod m);

struct ConjugateTable {
  GridFunction input;
  std::vector<std::vector<double>> dual_axes;
  std::vector<ExtReal> values;
  /// False where the slope lies outside the input's hull slope range: there
  /// the value is an artifact of the finite grid (the true conjugate may be inf).
  std::vector<bool> within_slope_range;
  ConjugateMethod method = ConjugateMethod::GridSup;
};

/// Hull slope range extended by 10% on both sides, `n` nodes.
std::vector<double> default_dual_axis(const GridFunction& g, std::size_t n);

/// Lower convex hull sweep plus slope matching. Dual axis strictly increasing.
/// Equals grid_sup bit for bit.
ConjugateTable conjugate_1d(const GridFunction& g, const std::vector<double>& dual_axis);
ConjugateTable conjugate_1d(const GridFunction& g);

/// max over finite nodes of <y, x> - g(x), evaluated directly (d = 1 or 2).
ConjugateTable grid_sup(const GridFunction& g, const std::vector<std::vector<double>>& dual_axes);

/// Biconjugate at the input nodes: max over dual nodes of <x, y> - g*(y).
std::vector<ExtReal> biconjugate_1d(const ConjugateTable& t);

struct RadialConjugate {
  std::vector<double> radii;  ///< dual radii, increasing from 0
  std::vector<ExtReal> values;
  std::vector<bool> within_slope_range;
  double primal_extent = 0.0;  ///< R of the primal sample [-R, R]
  double primal_step = 0.0;
};

/// psi* on `dual_radii` from samples of psi(|x|) on a symmetric grid. R
/// doubles from 1 until the end slope covers the largest dual radius or
/// psi(R) = inf.
RadialConjugate conjugate_radial(const OrliczIntegrand& phi, const std::vector<double>& dual_radii,
                                 std::size_t point = 0, std::size_t nodes_per_side = 4096);

/// phi with a numerically computed radial conjugate attached: one table per
/// id in `points` (later ids reuse the last table), linear interpolation
/// in s, inf beyond the attainable slopes or past s_max.
OrliczIntegrand with_numeric_conjugate(const OrliczIntegrand& phi, double s_max,
                                       const std::vector<std::size_t>& points = {0},
                                       std::size_t dual_nodes = 4096);

struct ConjugateBounds {
  double r = 1.0;
  double s = 0.0;        ///< phi(x) >= s|x| for |x| >= r
  bool upper_ok = true;  ///< phi*(x') <= r|x'| for |x'| < s
  double upper_worst = 0.0;
  double eps = 1.0;
  double delta = 0.0;    ///< sup_{|x| <= delta} phi < eps
  bool lower_ok = true;  ///< phi*(x') >= delta|x'| - eps
  double lower_worst = 0.0;
};

/// Extracts (r, s) and (eps, delta) from the grid and verifies the two linear
/// bounds on phi* at sampled dual points. Needs an attached conjugate.
ConjugateBounds quantitative_conjugate_bounds(const OrliczIntegrand& phi, const SamplingGrid& grid,
                                              std::size_t point = 0, double r = 1.0, double eps = 1.0);

struct SubdifferentialCheck {
  ExtReal gap = 0.0;  ///< phi(x) + phi*(x') - <x', x>
  bool member = false;
};

/// x' in d phi(x) iff the Fenchel-Young gap is at most tol.
SubdifferentialCheck subdifferential_check(const OrliczIntegrand& phi, std::size_t point, std::span<const double> x,
                                           std::span<const double> xp, double tol = 1e-10);

/// f_lambda(x) = min_y g(y) + lambda |x - y| over the grid nodes. 1-d uses
/// two exact sweeps; 2-d evaluates directly.
GridFunction lipschitz_regularize(const GridFunction& g, double lambda);

/// Exact check of |f(x_i) - f(x_j)| <= lambda |x_i - x_j| on adjacent 1-d
/// nodes (all pairs when `all_pairs`). Returns the number of violations.
std::size_t lipschitz_violations(const GridFunction& f, double lambda, bool all_pairs = false);

}  // namespace orlicz
