#include "orlicz_kit/suites.hpp"

#include <chrono>
#include <functional>
#include <stdexcept>

#include "orlicz_kit/checks.hpp"

namespace orlicz {

const std::vector<SuiteInfo>& suite_catalog() {
  static const std::vector<SuiteInfo> catalog = {
      {"measure", "measure_core", "measure, classify_points, integrate"},
      {"charges", "charges", "jordan, hewitt_yosida, de_giorgi, sigma_finite_support"},
      {"orlicz", "orlicz_functions", "check_axioms, coercivity_equivalence, delta2"},
      {"norms", "modular_norms",
       "modular, luxemburg_norm, amemiya_norm, dual_norms, modular_norm_inequalities, hoelder, embedding_constants"},
      {"conjugation", "conjugation",
       "conjugate_1d, conjugate_radial, quantitative_conjugate_bounds, subdifferential_check, lipschitz_regularize"},
      {"duality", "duality_lab",
       "interchange, integral_conjugate, integral_subdifferential, conjugate_three_part, dual_norm_agreement, "
       "decompose_functional, reflexivity_linearity_check"},
  };
  return catalog;
}

std::vector<std::string> expand_suites(const std::vector<std::string>& names) {
  std::vector<std::string> out;
  for (const auto& n : names) {
    if (n == "all") {
      for (const auto& s : suite_catalog()) out.push_back(s.name);
      continue;
    }
    bool known = false;
    for (const auto& s : suite_catalog()) known = known || s.name == n;
    if (!known) throw std::invalid_argument("unknown suite '" + n + "'");
    out.push_back(n);
  }
  return out;
}

void run_suite(const std::string& name, const SuiteOptions& opt, Report& report) {
  using namespace checks;
  const std::uint64_t s = opt.seed;
  const double tol = opt.tol;
  std::vector<std::function<CheckRecord()>> list;
  if (name == "measure") {
    list = {integral_conventions, [&] { return measure_additivity(s, 40); }};
  } else if (name == "charges") {
    list = {charge_examples, [&] { return jordan_total_variation(s, 40); },
            [&] { return de_giorgi_oracle(s, 24, 10, 8); }, [&] { return hewitt_yosida_additivity(s, 40); }};
  } else if (name == "orlicz") {
    list = {catalog_axioms, coercivity, delta2_classification};
  } else if (name == "norms") {
    list = {[&] { return norm_examples(tol); },        [&] { return norm_sandwich(s, 200, tol); },
            [&] { return luxemburg_power(s, 100, tol); }, [&] { return modular_lemma(s, 200, tol); },
            [&] { return hoelder_random(s, 200, tol); }, [&] { return hoelder_aligned(tol); },
            [&] { return embedding(s, 50, tol); }};
  } else if (name == "conjugation") {
    list = {[&] { return conjugate_transform_exact(s, 40); }, [&] { return biconjugate(s, 40); },
            numeric_conjugate_axioms,                          conjugate_examples,
            [&] { return radial_conjugates(s); },             conjugate_bounds,
            subdifferential_examples,                          [&] { return lipschitz(s, 40); }};
  } else if (name == "duality") {
    list = {[&] { return interchange(s, 40, tol); },        interchange_negative,
            [&] { return integral_conjugate(s, 40, tol); }, [&] { return three_part_reduction(s, 40); },
            [&] { return subdifferential_agreement(s, 40); }, [&] { return dual_norm(s, 6, tol); },
            [&] { return functional_decomposition(s, 30); }, reflexivity};
  } else {
    throw std::invalid_argument("unknown suite '" + name + "'");
  }
  for (const auto& check : list) {
    const auto t0 = std::chrono::steady_clock::now();
    CheckRecord r = check();
    r.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    report.records.push_back(std::move(r));
  }
}

}  // namespace orlicz
