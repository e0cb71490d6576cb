#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "orlicz_kit/charges.hpp"
#include "orlicz_kit/conjugation.hpp"
#include "orlicz_kit/norms.hpp"
#include "orlicz_kit/orlicz.hpp"

namespace orlicz {

/// Product grid of candidate values x in R^d (d = 1 or 2), row-major.
struct SearchGrid {
  std::vector<std::vector<double>> axes;

  static SearchGrid uniform(double lo, double hi, std::size_t n, std::size_t dim = 1);
  std::size_t dimension() const noexcept { return axes.size(); }
  std::size_t size() const;
  std::vector<double> node(std::size_t k) const;
  /// Flat index of the origin, if it is a node.
  std::optional<std::size_t> origin() const;
};

enum class PointFamily { ShiftedQuadratic, TiltedAbsolute, IndicatorLinear, Grid };

const char* point_family_name(PointFamily f);

/// f(omega, .) at one point, minus an optional linear tilt <t, x>.
///   ShiftedQuadratic: coeff |x - c|^2
///   TiltedAbsolute:   |x| + b
///   IndicatorLinear:  0 on |x - c| <= r (inf outside) plus <a, x>
///   Grid:             tabulated values at the nodes, inf off the nodes
struct PointIntegrand {
  PointFamily family = PointFamily::ShiftedQuadratic;
  std::size_t dim = 1;
  double coeff = 1.0;
  std::vector<double> center;
  double offset = 0.0;
  double radius = 1.0;
  std::vector<double> linear;
  std::optional<GridFunction> table;
  std::vector<double> tilt;

  static PointIntegrand shifted_quadratic(std::vector<double> c, double coeff = 1.0);
  static PointIntegrand tilted_absolute(double b, std::size_t dim = 1);
  static PointIntegrand indicator_linear(std::vector<double> c, double r, std::vector<double> a = {});
  static PointIntegrand grid(GridFunction g);

  ExtReal operator()(std::span<const double> x) const;
  ExtReal operator()(std::initializer_list<double> x) const {
    return (*this)(std::span<const double>(x.begin(), x.size()));
  }
  /// f*(y): closed form for the catalog families, a node maximum for grids.
  ExtReal conjugate(std::span<const double> y) const;
  /// x -> f(x) - <t, x>.
  PointIntegrand tilted(std::vector<double> t) const;
  /// sup{<d, x> : f(x) <= 0} (-inf on an empty set). Closed form where the
  /// family allows it, otherwise a maximum over `grid` nodes; throws when
  /// neither is available.
  ExtReal zero_set_support(std::span<const double> d, const SearchGrid* grid = nullptr) const;
};

/// One integrand per listed carrier point, plus one for the tail.
struct IntegrandSpec {
  Carrier carrier;
  std::vector<PointIntegrand> points;
  std::optional<PointIntegrand> tail;

  static IntegrandSpec make(const Carrier& c, std::vector<PointIntegrand> points,
                            std::optional<PointIntegrand> tail = std::nullopt);
  std::size_t dimension() const { return points.empty() ? tail->dim : points.front().dim; }
  const PointIntegrand& at(std::size_t i) const { return i < points.size() ? points[i] : *tail; }
};

/// I_f(u) as an exhausting integral (tail term inf * f_tail(u_inf)).
ExtReal integral_value(const IntegrandSpec& f, const SampledFunction& u);

/// The sampled function space the infimum runs over.
enum class SampleSpace {
  Decomposable,              ///< every grid-valued function
  VanishingOnInfiniteAtoms,  ///< u = 0 on infinite atoms and eventually 0 (L_p-type)
};

struct InterchangeOptions {
  SampleSpace space = SampleSpace::Decomposable;
  std::uint64_t seed = 0;
  std::size_t restarts = 32;
  std::size_t max_sweeps = 64;
  double tol = 1e-8;
  bool joint_oracle = true;
};

struct InterchangeResult {
  ExtReal lhs_separable = 0.0;  ///< inf of I_f, coordinate-wise
  ExtReal lhs_joint = 0.0;      ///< inf of I_f by restarted block coordinate descent
  ExtReal rhs = 0.0;            ///< integral of the pointwise minima
  std::vector<ExtReal> pointwise_min;
  std::optional<ExtReal> tail_min;
  std::optional<SampledFunction> minimizer;
  std::optional<SampledFunction> joint_minimizer;
  bool hypothesis_atoms = true;  ///< inf f >= 0 at every infinite atom
  bool proper = true;            ///< I_f is finite somewhere on the sample space
  bool identity_holds = true;    ///< lhs = rhs (both paths)
  bool minimizer_pointwise = true;
  std::string note;
};

/// inf_u I_f(u) against the integral of the pointwise minima on the grid.
InterchangeResult interchange(const IntegrandSpec& f, const SearchGrid& grid, const InterchangeOptions& opt = {});

struct IntegralConjugate {
  ExtReal via_interchange = 0.0;  ///< -inf_u int f - <v, u>
  ExtReal via_pointwise = 0.0;    ///< int f*(v)
  bool agree = true;
};

/// I*_f(v) along both paths. The grid must contain the maximizers.
IntegralConjugate integral_conjugate(const IntegrandSpec& f, const SampledFunction& v, const SearchGrid& grid,
                                     double tol = 1e-6);

struct IntegralSubdifferential {
  bool member_fenchel_young = true;
  bool member_direct = true;
  ExtReal worst_gap = 0.0;
  std::optional<std::size_t> failing_point;
  std::optional<SampledFunction> witness;  ///< w with I_f(w) < I_f(u) + <v, w - u>
};

/// v in dI_f(u) through pointwise Fenchel-Young, cross-checked by the
/// subgradient inequality over single-point replacements by grid nodes.
IntegralSubdifferential integral_subdifferential(const IntegrandSpec& f, const SampledFunction& u,
                                                 const SampledFunction& v, const SearchGrid& grid, double tol = 1e-10);

/// l = l_a + l_d + l_f: density on finite-weight points, weights at
/// infinite atoms, and a charge acting on the eventual value.
struct FunctionalTriple {
  SampledFunction density;
  std::vector<std::pair<std::size_t, std::vector<double>>> diffuse;
  std::vector<double> pfa;  ///< empty means 0

  double operator()(const SampledFunction& u) const;
  double absolutely_continuous_action(const SampledFunction& u) const;
  double diffuse_action(const SampledFunction& u) const;
  double pfa_action(const SampledFunction& u) const;
};

struct ThreePartConjugate {
  ExtReal absolutely_continuous = 0.0;  ///< I*_f(l_a)
  ExtReal diffuse = 0.0;                ///< support function of dom I_f at l_d
  ExtReal pfa = 0.0;                    ///< support function of dom I_f at l_f
  ExtReal total = 0.0;
};

ThreePartConjugate conjugate_three_part(const IntegrandSpec& f, const FunctionalTriple& l, const SearchGrid& grid);

struct DualNormAgreement {
  double operator_norm = 0.0;         ///< projected ascent over the Luxemburg ball
  std::optional<double> oracle;       ///< d = 1: Lagrangian dual on a dense grid
  double dual_amemiya = 0.0;
  bool agree = true;
};

DualNormAgreement dual_norm_agreement(const OrliczIntegrand& phi, const SampledFunction& v, double tol = 1e-5,
                                      std::uint64_t seed = 0, std::size_t restarts = 4);

struct FunctionalDecomposition {
  bool spanning = true;
  FunctionalTriple recovered;
  bool exact_recovery = false;
  std::size_t charge_mismatches = 0;  ///< probes where the charge parts disagree with the actions
  double norm_a = 0.0;
  double norm_d = 0.0;
  double norm_f = 0.0;
  double norm_lower = 0.0;        ///< l(u*) at the constructed maximizer
  double maximizer_norm = 0.0;    ///< |u*| (Luxemburg), expected 1
  double norm_upper_sampled = 0.0;
  bool norms_add = false;
};

/// Integrand with closed-form dual norms: |x| on finite-weight points, the
/// unit-ball indicator on infinite atoms and the tail.
OrliczIntegrand mixed_l1_integrand(const Carrier& c, std::size_t dim);

/// Unit-vector probes at each listed point and on the eventual value.
std::vector<SampledFunction> default_probes(const Carrier& c, std::size_t dim);

FunctionalDecomposition decompose_functional(const FunctionalTriple& l, const std::vector<SampledFunction>& probes,
                                             std::uint64_t seed = 0, std::size_t samples = 64);

struct ReflexivityReport {
  bool dom_linear_phi = true;
  std::optional<SampledFunction> witness_phi;
  bool dom_linear_conjugate = true;
  std::optional<SampledFunction> witness_conjugate;
  Delta2Certificate delta2_phi;
  Delta2Certificate delta2_conjugate;
  bool implication_ok = true;  ///< Delta2 => dom linear, for phi and phi*
  std::string caveat;
};

ReflexivityReport reflexivity_linearity_check(const OrliczIntegrand& phi, const Carrier& c, const SamplingGrid& grid,
                                              double delta2_bound = 1000.0);

}  // namespace orlicz
