#pragma once

#include <optional>
#include <vector>

#include "orlicz_kit/measure.hpp"
#include "orlicz_kit/orlicz.hpp"

namespace orlicz {

/// u: point id -> R^d on a carrier. On tail carriers `eventual` is the value
/// u takes on every point past the prefix (absent means 0).
struct SampledFunction {
  Carrier carrier;
  std::vector<std::vector<double>> values;
  std::optional<std::vector<double>> eventual;

  static SampledFunction on(const Carrier& c, std::vector<std::vector<double>> values,
                            std::optional<std::vector<double>> eventual = std::nullopt);
  /// Scalar convenience: one 1-d value per point.
  static SampledFunction scalar(const Carrier& c, const std::vector<double>& values,
                                std::optional<double> eventual = std::nullopt);

  std::size_t dimension() const noexcept { return dim_; }
  /// Value at point id i, the eventual value past the prefix.
  std::vector<double> at(std::size_t i) const;
  std::vector<double> eventual_or_zero() const;
  /// True when u = 0 at every point of positive weight (including the tail).
  bool vanishes_on_support() const;

  SampledFunction scaled(double a) const;
  friend SampledFunction operator+(const SampledFunction& a, const SampledFunction& b);

  std::size_t dim_ = 1;  ///< set by on(); do not change by hand
};

struct NormResult {
  ExtReal value = 0.0;
  ExtReal lower = 0.0;
  ExtReal upper = 0.0;
  std::size_t evaluations = 0;
};

/// I_phi(u) as an exhausting integral; the tail contributes inf * phi(v_inf).
ExtReal modular(const OrliczIntegrand& phi, const SampledFunction& u);

/// inf{a > 0 : I_phi(u / a) <= 1} by bracketed bisection (relative tolerance).
NormResult luxemburg_norm(const OrliczIntegrand& phi, const SampledFunction& u, double tol = 1e-10);

/// inf_a (1 + I_phi(a u)) / a by golden-section search on log a.
NormResult amemiya_norm(const OrliczIntegrand& phi, const SampledFunction& u, double tol = 1e-8);

struct DualNorms {
  NormResult luxemburg;
  NormResult amemiya;
};

/// Luxemburg and Amemiya norms built on phi*. Throws ConjugateUnavailable.
DualNorms dual_norms(const OrliczIntegrand& phi, const SampledFunction& v, double lux_tol = 1e-10,
                     double amemiya_tol = 1e-8);

struct ModularNormCheck {
  double norm = 0.0;
  ExtReal modular = 0.0;
  bool a_applies = false;  ///< |u| <= 1
  bool a_holds = true;     ///< I(u) <= |u|
  bool b_applies = false;  ///< |u| > 1
  bool b_holds = true;     ///< I(u) >= |u|
  bool c_holds = true;     ///< |u| <= 1 + I(u)
  double slack_a = 0.0;
  double slack_b = 0.0;
  double slack_c = 0.0;
  bool all_hold() const { return a_holds && b_holds && c_holds; }
};

/// The three modular/norm inequalities, each accepted up to tol * max(1, |u|).
ModularNormCheck modular_norm_inequalities(const OrliczIntegrand& phi, const SampledFunction& u, double tol = 1e-8);

struct HoelderCheck {
  ExtReal lhs = 0.0;
  ExtReal rhs = 0.0;
  bool holds = true;
};

/// lhs = int |<v, u>| dmu, rhs = 2 |v|_{phi*} |u|_phi.
HoelderCheck hoelder(const OrliczIntegrand& phi, const SampledFunction& u, const SampledFunction& v,
                     double tol = 1e-8);

struct EmbeddingConstants {
  double eps = 1.0;
  std::vector<std::size_t> omega_eps;  ///< points of Omega_eps
  double total_measure = 0.0;          ///< mu(Omega)
  double c_inf = 0.0;                  ///< |||u|||_phi <= c_inf |||u|||_inf
  double c_1 = 0.0;                    ///< |||u|||_1 <= c_1 |||u|||_phi
};

/// Omega_eps = {sup_{|x| <= eps} phi <= 1 and inf_{|x| > 1/eps} phi >= 1},
/// evaluated on the grid directions. Empty Omega_eps gives nullopt.
std::optional<EmbeddingConstants> embedding_constants(const OrliczIntegrand& phi, const Carrier& c, double eps,
                                                      const SamplingGrid& grid);

struct EmbeddingCheck {
  double amemiya_phi = 0.0;
  double amemiya_inf = 0.0;  ///< sup norm over positive-weight points
  double amemiya_1 = 0.0;    ///< int |u| dmu
  double slack_inf = 0.0;    ///< c_inf |||u|||_inf - |||u|||_phi
  double slack_1 = 0.0;      ///< c_1 |||u|||_phi - |||u|||_1
  bool holds(double tol) const { return slack_inf >= -tol && slack_1 >= -tol; }
};

/// Evaluates both embedding inequalities for u supported in Omega_eps.
EmbeddingCheck check_embedding(const OrliczIntegrand& phi, const EmbeddingConstants& k, const SampledFunction& u);

}  // namespace orlicz
