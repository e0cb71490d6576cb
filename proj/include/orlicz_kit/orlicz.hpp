#pragma once

#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "orlicz_kit/extended_real.hpp"
#include "orlicz_kit/measure.hpp"

namespace orlicz {

enum class OrliczFamily { Power, Absolute, Exponential, BallIndicator, VariableExponent, Custom };

const char* family_name(OrliczFamily f);

/// phi(omega, x) on R^d. Radial integrands are stored through their profile
/// psi(omega, r) with phi(omega, x) = psi(omega, |x|) (Euclidean norm).
/// Point ids at or past the last per-point parameter reuse that parameter,
/// which is how tail points of a tail carrier are served.
class OrliczIntegrand {
 public:
  using Eval = std::function<ExtReal(std::size_t point, std::span<const double> x)>;
  using Profile = std::function<ExtReal(std::size_t point, double r)>;

  /// |x|^p / p, p > 1.
  static OrliczIntegrand power(double p, std::size_t dim = 1);
  /// |x|.
  static OrliczIntegrand absolute(std::size_t dim = 1);
  /// e^|x| - 1.
  static OrliczIntegrand exponential(std::size_t dim = 1);
  /// 0 on |x| <= radius, inf outside.
  static OrliczIntegrand ball_indicator(std::size_t dim = 1, double radius = 1.0);
  /// |x|^p(omega), one exponent per point (p >= 1).
  static OrliczIntegrand variable_exponent(std::vector<double> exponents, std::size_t dim = 1);
  static OrliczIntegrand radial(std::string label, std::size_t dim, Profile psi,
                                std::optional<Profile> psi_conjugate = std::nullopt);
  static OrliczIntegrand general(std::string label, std::size_t dim, Eval phi,
                                 std::optional<Eval> phi_conjugate = std::nullopt);

  /// c * phi, with conjugate c * phi*(x' / c).
  OrliczIntegrand scaled(double c) const;
  /// c_omega * phi(omega, .); ids past the list reuse the last coefficient.
  OrliczIntegrand scaled(std::vector<double> point_coefficients) const;

  ExtReal operator()(std::size_t point, std::span<const double> x) const;
  ExtReal operator()(std::size_t point, std::initializer_list<double> x) const {
    return (*this)(point, std::span<const double>(x.begin(), x.size()));
  }

  bool is_radial() const noexcept { return static_cast<bool>(profile_); }
  /// psi(point, r); throws for non-radial integrands.
  ExtReal profile(std::size_t point, double r) const;

  bool has_conjugate() const noexcept { return static_cast<bool>(conj_eval_) || static_cast<bool>(conj_profile_); }
  /// phi*(point, y); throws ConjugateUnavailable when no conjugate is attached.
  ExtReal conjugate(std::size_t point, std::span<const double> y) const;
  ExtReal conjugate_profile(std::size_t point, double s) const;
  /// phi* as an integrand (its own conjugate is phi again).
  OrliczIntegrand conjugate_integrand() const;
  /// Replaces the attached conjugate (used for numerically computed conjugates).
  OrliczIntegrand with_conjugate_profile(Profile psi_conjugate) const;

  std::size_t dimension() const noexcept { return dim_; }
  const std::string& label() const noexcept { return label_; }
  OrliczFamily family() const noexcept { return family_; }
  /// Family parameters: {p} for power, exponents for varexp, {radius} for ball.
  const std::vector<double>& parameters() const noexcept { return params_; }
  const std::vector<double>& coefficients() const noexcept { return coeffs_; }

 private:
  OrliczIntegrand() = default;
  std::string label_;
  OrliczFamily family_ = OrliczFamily::Custom;
  std::size_t dim_ = 1;
  std::vector<double> params_;
  std::vector<double> coeffs_;
  Profile profile_;
  Profile conj_profile_;
  Eval eval_;
  Eval conj_eval_;
};

struct ConjugateUnavailable : std::runtime_error {
  using std::runtime_error::runtime_error;
};

double euclidean_norm(std::span<const double> x);

/// Log-spaced radii times a fixed direction set.
struct SamplingGrid {
  std::size_t dim = 1;
  int min_decade = -6;
  int max_decade = 3;
  int per_decade = 64;

  std::vector<double> radii() const;
  /// 2d axis directions, plus the sign diagonals for 2 <= d <= 3.
  std::vector<std::vector<double>> directions() const;
};

struct AxiomCheck {
  std::string name;
  bool passed = true;
  double worst = 0.0;
  std::string witness;
};

struct AxiomReport {
  std::vector<AxiomCheck> checks;
  bool all_passed() const;
  const AxiomCheck& get(const std::string& name) const;
};

/// Evaluates phi(0) = 0, evenness, midpoint convexity, vanishing at 0 and
/// coercivity (some sampled sphere with positive infimum) at each point id.
AxiomReport check_axioms(const OrliczIntegrand& phi, const SamplingGrid& grid,
                         const std::vector<std::size_t>& points = {0}, double tol = 1e-12);

struct CoercivityTriple {
  bool precondition_ok = true;  ///< convex with phi(0) = 0 on the grid
  std::string precondition_witness;
  bool tends_to_infinity = false;
  bool positive_sphere_infimum = false;
  bool positive_slope_liminf = false;
  double liminf_quotient = 0.0;
  bool agree() const {
    return tends_to_infinity == positive_sphere_infimum && positive_sphere_infimum == positive_slope_liminf;
  }
};

/// The three equivalent coercivity conditions, evaluated on the grid.
CoercivityTriple coercivity_equivalence(const OrliczIntegrand& phi, const SamplingGrid& grid, std::size_t point = 0);

enum class Delta2Verdict { Holds, FailsWithWitness };

struct Delta2Witness {
  std::size_t point = 0;
  std::vector<double> x;
  ExtReal ratio = 0.0;
};

struct Delta2Certificate {
  Delta2Verdict verdict = Delta2Verdict::Holds;
  double k = 1.0;
  std::vector<double> f;  ///< residual per point id
  std::optional<Delta2Witness> witness;
};

/// Grid-relative Delta_2 test: k is the largest ratio phi(2x)/phi(x) over
/// grid points with phi(x) >= 1, f(omega) the largest residual
/// phi(2x) - k phi(x) elsewhere. Fails when k exceeds `bound` or a residual
/// is infinite; the witness is the smallest-radius offender.
Delta2Certificate delta2(const OrliczIntegrand& phi, const Carrier& carrier, const SamplingGrid& grid, double bound);

/// Point ids an integrand is evaluated at on a carrier: the listed points,
/// plus one representative of the tail.
std::vector<std::size_t> evaluation_points(const Carrier& c);

}  // namespace orlicz
