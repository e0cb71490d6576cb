#pragma once

#include <optional>
#include <vector>

#include "orlicz_kit/measure.hpp"

namespace orlicz {

/// A bounded finitely additive signed set function
///   nu(A) = sum_{n in A} masses[n] + lambda * [A cofinite].
/// lambda (the charge at infinity) must be 0 on FinitePoints carriers.
struct Charge {
  Carrier carrier;
  std::vector<double> masses;
  double lambda = 0.0;

  static Charge on(const Carrier& c, std::vector<double> masses, double lambda = 0.0);
  static Charge zero(const Carrier& c);

  double operator()(const MSet& a) const;
  /// Total variation sum |masses| + |lambda|.
  double norm() const;
  /// nu_B(A) = nu(A intersect B).
  Charge restricted(const MSet& b) const;
  bool nonnegative() const;

  friend bool operator==(const Charge& a, const Charge& b) {
    return a.masses == b.masses && a.lambda == b.lambda;
  }
};

Charge operator+(const Charge& a, const Charge& b);
Charge operator-(const Charge& a, const Charge& b);

struct JordanParts {
  Charge positive;
  Charge negative;
  double total_variation = 0.0;
};

JordanParts jordan(const Charge& nu);

struct HewittYosidaParts {
  Charge sigma_additive;
  Charge purely_finitely_additive;
};

/// Tail carriers only: sigma part keeps the point masses, the purely finitely
/// additive part keeps lambda.
HewittYosidaParts hewitt_yosida(const Charge& nu);

struct GiorgiParts {
  Charge absolutely_continuous;
  Charge diffuse;
  Charge singular;
  /// nu_i / mu_i where 0 < mu_i < inf, empty elsewhere.
  std::vector<std::optional<double>> density;
  Carrier reference;
};

/// de Giorgi decomposition of a nonnegative nu against mu (FinitePoints).
/// Points with mu = 0 go to the singular part, mu = inf to the diffuse part,
/// the rest to the absolutely continuous part.
GiorgiParts de_giorgi(const Charge& nu, const Carrier& mu);

/// Signed version through the Jordan parts: nu_a = (nu+)_a - (nu-)_a etc.
GiorgiParts de_giorgi_signed(const Charge& nu, const Carrier& mu);

/// Minimal sigma-finite set carrying the absolutely continuous part.
MSet sigma_finite_support(const GiorgiParts& parts);

/// Membership predicates of the three subspaces, evaluated on point masses.
bool is_absolutely_continuous(const Charge& c, const Carrier& mu);
bool is_diffuse(const Charge& c, const Carrier& mu);
bool is_singular(const Charge& c, const Carrier& mu);

}  // namespace orlicz
