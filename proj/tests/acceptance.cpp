// Acceptance gate: one PASS/FAIL line per criterion, exit 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

#include "orlicz_kit/checks.hpp"

namespace {

using orlicz::CheckRecord;
namespace checks = orlicz::checks;

constexpr std::uint64_t kSeed = 20260611;

// Tolerances, fixed here and nowhere else.
constexpr double kSandwichTol = 1e-6;     // relative to max(1, ||u||)
constexpr double kLuxemburgTol = 1e-8;    // relative error against the closed form
constexpr double kModularTol = 1e-8;
constexpr double kHoelderTol = 1e-8;      // relative to max(1, rhs)
constexpr double kAlignedTol = 1e-6;
constexpr double kInterchangeTol = 1e-8;
constexpr double kDualNormTol = 1e-5;
constexpr double kSandwichSeconds = 30.0;
constexpr double kVerifySeconds = 300.0;

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string summary(const CheckRecord& r) {
  char buf[160];
  std::snprintf(buf, sizeof buf, "%s: %zu instances, %zu violations, slack %.3g", r.name.c_str(), r.instances,
                r.violations, r.slack);
  std::string s = buf;
  if (!r.passed && !r.detail.empty()) s += " (" + r.detail + ")";
  return s;
}

struct Gate {
  int failures = 0;

  void report(int id, const char* title, bool ok, const std::string& detail) {
    std::printf("%s [%2d] %s | %s\n", ok ? "PASS" : "FAIL", id, title, detail.c_str());
    std::fflush(stdout);
    failures += ok ? 0 : 1;
  }

  /// All records must pass; details joined.
  void records(int id, const char* title, std::initializer_list<std::function<CheckRecord()>> runs,
               const std::function<bool(const std::vector<CheckRecord>&, std::string&)>& extra = {}) {
    std::vector<CheckRecord> recs;
    bool ok = true;
    std::string detail;
    for (const auto& run : runs) {
      recs.push_back(run());
      ok = ok && recs.back().passed;
      if (!detail.empty()) detail += "; ";
      detail += summary(recs.back());
    }
    if (extra) ok = extra(recs, detail) && ok;
    report(id, title, ok, detail);
  }
};

std::string run_cli(const std::string& args, int& status) {
  const std::string cmd = std::string(ORLICZ_KIT_CLI) + " " + args;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) {
    status = -1;
    return {};
  }
  std::string out;
  char buf[4096];
  for (std::size_t n; (n = std::fread(buf, 1, sizeof buf, p)) > 0;) out.append(buf, n);
  status = pclose(p);
  return out;
}

bool at_least(const CheckRecord& r, std::size_t n, std::string& detail) {
  if (r.instances >= n) return true;
  detail += "; " + r.name + " ran fewer than " + std::to_string(n) + " instances";
  return false;
}

}  // namespace

int main() {
  Gate g;

  {
    const auto t0 = std::chrono::steady_clock::now();
    const CheckRecord r = checks::norm_sandwich(kSeed, 1000, kSandwichTol);
    const double s = seconds_since(t0);
    char buf[64];
    std::snprintf(buf, sizeof buf, ", %.2f s (limit %.0f s)", s, kSandwichSeconds);
    g.report(1, "norm sandwich ||u|| <= |||u||| <= 2||u||", r.passed && r.instances >= 1000 && s < kSandwichSeconds,
             summary(r) + buf);
  }

  g.records(2, "Luxemburg norm equals the closed-form L_p norm", {[] {
              return checks::luxemburg_power(kSeed, 500, kLuxemburgTol);
            }},
            [](const auto& recs, std::string& d) { return at_least(recs[0], 500, d); });

  g.records(3, "modular-norm lemma (a)(b)(c)", {[] { return checks::modular_lemma(kSeed, 1000, kModularTol); }},
            [](const auto& recs, std::string& d) { return at_least(recs[0], 1000, d); });

  g.records(4, "Hoelder inequality with constant 2, aligned equality",
            {[] { return checks::hoelder_random(kSeed, 1000, kHoelderTol); },
             [] { return checks::hoelder_aligned(kAlignedTol); }},
            [](const auto& recs, std::string& d) { return at_least(recs[0], 1000, d); });

  g.records(5, "conjugation: transform = oracle, biconjugate, conjugates are Orlicz",
            {[] { return checks::conjugate_transform_exact(kSeed, 200); },
             [] { return checks::biconjugate(kSeed, 200); }, [] { return checks::numeric_conjugate_axioms(); }},
            [](const auto& recs, std::string& d) { return at_least(recs[0], 200, d) && at_least(recs[1], 200, d); });

  g.records(6, "interchange of infimum and integral, and a counterexample",
            {[] { return checks::interchange(kSeed, 300, kInterchangeTol); },
             [] { return checks::interchange_negative(); }},
            [](const auto& recs, std::string& d) { return at_least(recs[0], 300, d); });

  g.records(7, "subdifferential: pointwise Fenchel-Young = direct definition",
            {[] { return checks::subdifferential_agreement(kSeed, 300); }},
            [](const auto& recs, std::string& d) { return at_least(recs[0], 300, d); });

  g.records(8, "de Giorgi decomposition against the exhaustive oracle",
            {[] { return checks::de_giorgi_oracle(kSeed, 200, 12, 8); }},
            [](const auto& recs, std::string& d) { return at_least(recs[0], 200, d); });

  g.records(9, "Hewitt-Yosida on tail carriers", {[] { return checks::hewitt_yosida_additivity(kSeed, 200); }},
            [](const auto& recs, std::string& d) { return at_least(recs[0], 200, d); });

  g.records(10, "Delta2 classification", {[] { return checks::delta2_classification(); }});

  g.records(11, "dual Amemiya norm = operator norm on the Luxemburg ball",
            {[] { return checks::dual_norm(kSeed, 100, kDualNormTol); }},
            [](const auto& recs, std::string& d) { return at_least(recs[0], 100, d); });

  g.records(12, "functional decomposition round trip and norm additivity",
            {[] { return checks::functional_decomposition(kSeed, 100); }},
            [](const auto& recs, std::string& d) { return at_least(recs[0], 100, d); });

  g.records(13, "Lipschitz regularization", {[] { return checks::lipschitz(kSeed, 200); }},
            [](const auto& recs, std::string& d) { return at_least(recs[0], 200, d); });

  {
    const auto t0 = std::chrono::steady_clock::now();
    int s1 = 0, s2 = 0;
    const std::string a = run_cli("verify --suite all --seed 7", s1);
    const std::string b = run_cli("verify --suite all --seed 7", s2);
    const double secs = seconds_since(t0) / 2.0;
    const bool same = !a.empty() && a == b;
    char buf[160];
    std::snprintf(buf, sizeof buf, "exit codes %d/%d, %zu bytes, %s, %.2f s per run (limit %.0f s)", s1, s2, a.size(),
                  same ? "identical" : "different", secs, kVerifySeconds);
    g.report(14, "determinism of verify --suite all --seed 7", same && s1 == 0 && s2 == 0 && secs < kVerifySeconds,
             buf);
  }

  std::printf("%d of 14 criteria failed\n", g.failures);
  return g.failures == 0 ? 0 : 1;
}
