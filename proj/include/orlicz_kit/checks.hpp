#pragma once

// Batched property checks over seeded random instances. The CLI suites run
// them at small counts; the acceptance binary at full counts.

#include <cstdint>
#include <string>

#include "orlicz_kit/report.hpp"

namespace orlicz::checks {

// measure
CheckRecord integral_conventions();
CheckRecord measure_additivity(std::uint64_t seed, std::size_t count);

// charges
CheckRecord jordan_total_variation(std::uint64_t seed, std::size_t count, std::size_t max_points = 8);
CheckRecord de_giorgi_oracle(std::uint64_t seed, std::size_t count, std::size_t max_points = 12,
                             std::size_t restriction_max_points = 8);
CheckRecord hewitt_yosida_additivity(std::uint64_t seed, std::size_t count);
CheckRecord charge_examples();

// orlicz_functions
CheckRecord catalog_axioms();
CheckRecord coercivity();
CheckRecord delta2_classification();

// modular_norms
CheckRecord norm_examples(double tol);
CheckRecord norm_sandwich(std::uint64_t seed, std::size_t count, double tol);
CheckRecord luxemburg_power(std::uint64_t seed, std::size_t count, double tol);
CheckRecord modular_lemma(std::uint64_t seed, std::size_t count, double tol);
CheckRecord hoelder_random(std::uint64_t seed, std::size_t count, double tol);
CheckRecord hoelder_aligned(double tol);
CheckRecord embedding(std::uint64_t seed, std::size_t count, double tol);

// conjugation
CheckRecord conjugate_transform_exact(std::uint64_t seed, std::size_t count);
CheckRecord biconjugate(std::uint64_t seed, std::size_t count);
CheckRecord numeric_conjugate_axioms();
CheckRecord conjugate_examples();
CheckRecord radial_conjugates(std::uint64_t seed);
CheckRecord conjugate_bounds();
CheckRecord subdifferential_examples();
CheckRecord lipschitz(std::uint64_t seed, std::size_t count);

// duality_lab
CheckRecord interchange(std::uint64_t seed, std::size_t count, double tol);
CheckRecord interchange_negative();
CheckRecord integral_conjugate(std::uint64_t seed, std::size_t count, double tol);
CheckRecord three_part_reduction(std::uint64_t seed, std::size_t count);
CheckRecord subdifferential_agreement(std::uint64_t seed, std::size_t count);
CheckRecord dual_norm(std::uint64_t seed, std::size_t count, double tol);
CheckRecord functional_decomposition(std::uint64_t seed, std::size_t count);
CheckRecord reflexivity();

}  // namespace orlicz::checks
