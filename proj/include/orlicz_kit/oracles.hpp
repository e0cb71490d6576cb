#pragma once

// Brute-force reference implementations. Exponential or quadratic cost;
// used only to cross-check the fast paths.

#include <cstdint>
#include <vector>

#include "orlicz_kit/charges.hpp"
#include "orlicz_kit/conjugation.hpp"

namespace orlicz::oracle {

/// sup over measurable partitions of sum |nu(A_i)|. On a tail carrier the
/// cofinite block is modeled by one extra element carrying lambda.
/// At most 12 elements.
double total_variation(const Charge& nu);

/// Largest sum of x_i over A subject to sum_{i in E} x_i <= nu(E) for all
/// E inside A, with x_i = 0 where mu_i is 0 or inf. nu >= 0, FinitePoints.
double absolutely_continuous_part(const Charge& nu, const Carrier& mu, std::uint64_t a);

struct GiorgiTables {
  std::vector<double> absolutely_continuous;  ///< per singleton
  double absolutely_continuous_total = 0.0;   ///< on the whole space
  std::vector<double> diffuse;                ///< per subset mask
  std::vector<double> singular;               ///< per subset mask
};

/// The three sup formulas evaluated by enumeration. The diffuse and
/// singular parts are tabulated for every subset; the absolutely continuous
/// part for singletons and the whole space. N <= 12.
GiorgiTables de_giorgi(const Charge& nu, const Carrier& mu);

/// min_j g_j + lambda |x_i - x_j| by direct double loop (1-d).
GridFunction lipschitz_envelope(const GridFunction& g, double lambda);

}  // namespace orlicz::oracle
