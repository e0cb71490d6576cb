// orlicz-kit: runs single operations from JSON configs, or the verification suites.
//
// Exit codes: 0 all checks pass, 1 a check failed, 2 parse or schema error,
// 3 I/O error.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "orlicz_kit/charges.hpp"
#include "orlicz_kit/conjugation.hpp"
#include "orlicz_kit/duality.hpp"
#include "orlicz_kit/io.hpp"
#include "orlicz_kit/norms.hpp"
#include "orlicz_kit/orlicz.hpp"
#include "orlicz_kit/report.hpp"
#include "orlicz_kit/suites.hpp"

namespace {

using namespace orlicz;
using io::json;

struct Options {
  std::string config;
  std::optional<std::uint64_t> seed;
  std::optional<double> tol;
  std::string out;
  std::string format = "json";
  std::vector<std::string> suites;
  bool timing = false;
};

/// Report records plus a free-form payload for the operation commands.
struct Outcome {
  Report report;
  json result = json::object();
};

json config_of(const Options& o) {
  if (o.config.empty()) throw io::ParseError("--config is required for this command");
  return io::load_file(o.config);
}

const json& need(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw io::ParseError(std::string("missing key '") + key + "'");
  return j.at(key);
}

double relative(double slack, double scale) { return slack / std::max(1.0, std::abs(scale)); }

CheckRecord record(std::string name, std::string anchor, bool passed, double slack, double tol,
                   std::string detail = {}) {
  CheckRecord r;
  r.name = std::move(name);
  r.anchor = std::move(anchor);
  r.passed = passed;
  r.slack = slack;
  r.tol = tol;
  r.instances = 1;
  r.violations = passed ? 0 : 1;
  r.detail = std::move(detail);
  return r;
}

json ext_list(const std::vector<ExtReal>& xs) {
  json a = json::array();
  for (ExtReal x : xs) a.push_back(io::ext_to_json(x));
  return a;
}

SamplingGrid sampling_grid(const json& cfg, std::size_t dim) {
  SamplingGrid g;
  g.dim = dim;
  if (cfg.contains("sampling")) {
    const json& s = cfg["sampling"];
    g.min_decade = s.value("min_decade", g.min_decade);
    g.max_decade = s.value("max_decade", g.max_decade);
    g.per_decade = s.value("per_decade", g.per_decade);
    if (g.min_decade >= g.max_decade || g.per_decade <= 0) throw io::ParseError("bad sampling decades");
  }
  return g;
}

Outcome cmd_norm(const json& cfg, double tol) {
  const Carrier c = io::carrier_from_json(need(cfg, "carrier"));
  const OrliczIntegrand phi = io::integrand_from_json(need(cfg, "integrand"));
  const SampledFunction u = io::sampled_from_json(need(cfg, "u"), c);
  Outcome out;
  const ExtReal mod = modular(phi, u);
  const NormResult lux = luxemburg_norm(phi, u);
  const NormResult am = amemiya_norm(phi, u);
  out.result = {{"modular", io::ext_to_json(mod)},
                {"luxemburg", io::ext_to_json(lux.value)},
                {"amemiya", io::ext_to_json(am.value)}};
  if (lux.value.is_finite() && am.value.is_finite()) {
    const double l = lux.value.value();
    const double a = am.value.value();
    const double slack = relative(std::min(a - l, 2.0 * l - a), l);
    out.report.records.push_back(
        record("norms.sandwich", "||u|| <= |||u||| <= 2 ||u||", slack >= -tol, slack, tol));
    const ModularNormCheck m = modular_norm_inequalities(phi, u, tol);
    double worst = m.slack_c;
    if (m.a_applies) worst = std::min(worst, m.slack_a);
    if (m.b_applies) worst = std::min(worst, m.slack_b);
    out.report.records.push_back(record("norms.modular_lemma",
                                        "(a) ||u|| <= 1 => I(u) <= ||u||; (b) ||u|| > 1 => I(u) >= ||u||; "
                                        "(c) ||u|| <= 1 + I(u)",
                                        m.all_hold(), worst, tol));
  } else {
    out.result["note"] = "u lies outside the Orlicz space";
  }
  if (cfg.contains("v")) {
    const SampledFunction v = io::sampled_from_json(cfg["v"], c);
    const DualNorms dn = dual_norms(phi, v);
    const HoelderCheck h = hoelder(phi, u, v, tol);
    out.result["dual_luxemburg"] = io::ext_to_json(dn.luxemburg.value);
    out.result["dual_amemiya"] = io::ext_to_json(dn.amemiya.value);
    out.result["hoelder"] = {{"lhs", io::ext_to_json(h.lhs)}, {"rhs", io::ext_to_json(h.rhs)}};
    const double slack = h.lhs.is_finite() && h.rhs.is_finite() ? relative(h.rhs.value() - h.lhs.value(), h.rhs.value())
                                                                : 0.0;
    out.report.records.push_back(record("norms.hoelder", "int |<v, u>| <= 2 ||v||_phi* ||u||_phi", h.holds, slack, tol));
  }
  return out;
}

Outcome cmd_conjugate(const json& cfg, double tol) {
  Outcome out;
  if (cfg.contains("integrand")) {
    const OrliczIntegrand phi = io::integrand_from_json(cfg["integrand"]);
    std::vector<double> radii;
    for (const auto& r : need(cfg, "radii")) radii.push_back(r.get<double>());
    const RadialConjugate rc = conjugate_radial(phi, radii, cfg.value("point", 0u));
    out.result = {{"radii", rc.radii}, {"values", ext_list(rc.values)}, {"primal_extent", rc.primal_extent},
                  {"primal_step", rc.primal_step}};
    if (phi.has_conjugate()) {
      // Grid sampling misses the true maximizer by at most one primal step;
      // that bounds the error only up to the slope variation over a cell, so
      // the closed form is compared at tolerance max(tol, step).
      double worst = 0.0;
      for (std::size_t k = 0; k < rc.radii.size(); ++k) {
        if (!rc.within_slope_range[k]) continue;
        const ExtReal exact = phi.conjugate_profile(cfg.value("point", 0u), rc.radii[k]);
        if (!exact.is_finite() || !rc.values[k].is_finite()) continue;
        worst = std::max(worst, std::abs(exact.value() - rc.values[k].value()));
      }
      const double t = std::max(tol, rc.primal_step);
      out.report.records.push_back(
          record("conjugation.radial", "phi*(x') = psi*(|x'|) for radial phi", worst <= t, t - worst, t));
    }
    return out;
  }
  const GridFunction g = io::grid_from_json(need(cfg, "grid"));
  if (g.dimension() == 1) {
    std::vector<double> dual;
    if (cfg.contains("dual_axis")) {
      for (const auto& s : cfg["dual_axis"]) dual.push_back(s.get<double>());
    } else {
      dual = default_dual_axis(g, cfg.value("dual_nodes", std::size_t{257}));
    }
    const ConjugateTable fast = conjugate_1d(g, dual);
    const ConjugateTable slow = grid_sup(g, {dual});
    std::size_t mismatches = 0;
    for (std::size_t k = 0; k < fast.values.size(); ++k) mismatches += !(fast.values[k] == slow.values[k]);
    out.result = {{"method", method_name(fast.method)}, {"dual_axis", dual}, {"values", ext_list(fast.values)},
                  {"biconjugate", ext_list(biconjugate_1d(fast))}};
    CheckRecord r = record("conjugation.transform_exact",
                           "phi*(s) = sup_x <s, x> - phi(x): linear-time transform equals the sup oracle",
                           mismatches == 0, -static_cast<double>(mismatches), 0.0);
    r.instances = fast.values.size();
    r.violations = mismatches;
    out.report.records.push_back(std::move(r));
    return out;
  }
  std::vector<std::vector<double>> dual_axes;
  for (const auto& a : need(cfg, "dual_axes")) {
    std::vector<double> axis;
    for (const auto& s : a) axis.push_back(s.get<double>());
    dual_axes.push_back(std::move(axis));
  }
  const ConjugateTable t = grid_sup(g, dual_axes);
  out.result = {{"method", method_name(t.method)}, {"dual_axes", dual_axes}, {"values", ext_list(t.values)}};
  return out;
}

json charge_parts(const char* a, const Charge& x, const char* b, const Charge& y) {
  return {{a, io::to_json(x)}, {b, io::to_json(y)}};
}

Outcome cmd_decompose(const json& cfg) {
  const Carrier c = io::carrier_from_json(need(cfg, "carrier"));
  const Charge nu = io::charge_from_json(need(cfg, "charge"), c);
  Outcome out;
  const JordanParts jp = jordan(nu);
  out.result["jordan"] = charge_parts("positive", jp.positive, "negative", jp.negative);
  out.result["total_variation"] = jp.total_variation;
  const double jd = nu.norm() - (jp.positive.norm() + jp.negative.norm());
  out.report.records.push_back(record("charges.jordan", "||nu|| = ||nu+|| + ||nu-||", jd == 0.0, -std::abs(jd), 0.0));
  if (c.is_tail()) {
    const HewittYosidaParts hy = hewitt_yosida(nu);
    out.result["hewitt_yosida"] = charge_parts("sigma_additive", hy.sigma_additive, "purely_finitely_additive",
                                               hy.purely_finitely_additive);
    const double d = nu.norm() - (hy.sigma_additive.norm() + hy.purely_finitely_additive.norm());
    out.report.records.push_back(
        record("charges.hewitt_yosida", "||nu|| = ||nu_sigma|| + ||nu_f||", d == 0.0, -std::abs(d), 0.0));
  } else {
    const GiorgiParts gp = de_giorgi_signed(nu, c);
    json density = json::array();
    for (const auto& d : gp.density) density.push_back(d ? json(*d) : json(nullptr));
    out.result["de_giorgi"] = {{"absolutely_continuous", io::to_json(gp.absolutely_continuous)},
                               {"diffuse", io::to_json(gp.diffuse)},
                               {"singular", io::to_json(gp.singular)},
                               {"density", density}};
    const double d = nu.norm() - (gp.absolutely_continuous.norm() + gp.diffuse.norm() + gp.singular.norm());
    out.report.records.push_back(
        record("charges.de_giorgi", "||nu|| = ||nu_a|| + ||nu_d|| + ||nu_s||", d == 0.0, -std::abs(d), 0.0));
  }
  return out;
}

struct DualitySetup {
  Carrier carrier;
  IntegrandSpec spec;
  SearchGrid grid;
};

DualitySetup duality_setup(const json& cfg) {
  DualitySetup s;
  s.carrier = io::carrier_from_json(need(cfg, "carrier"));
  s.spec = io::integrand_spec_from_json(need(cfg, "integrand"), s.carrier);
  s.grid = io::search_grid_from_json(cfg.value("grid", json(nullptr)), s.spec.dimension());
  return s;
}

Outcome cmd_interchange(const json& cfg, std::uint64_t seed, double tol) {
  const DualitySetup s = duality_setup(cfg);
  InterchangeOptions opt;
  opt.seed = seed;
  opt.tol = tol;
  const std::string space = cfg.value("space", std::string("decomposable"));
  if (space == "vanishing") {
    opt.space = SampleSpace::VanishingOnInfiniteAtoms;
  } else if (space != "decomposable") {
    throw io::ParseError("space must be 'decomposable' or 'vanishing'");
  }
  const InterchangeResult r = interchange(s.spec, s.grid, opt);
  Outcome out;
  out.result = {{"lhs_separable", io::ext_to_json(r.lhs_separable)},
                {"lhs_joint", io::ext_to_json(r.lhs_joint)},
                {"rhs", io::ext_to_json(r.rhs)},
                {"pointwise_min", ext_list(r.pointwise_min)},
                {"hypothesis_atoms", r.hypothesis_atoms},
                {"proper", r.proper},
                {"identity_holds", r.identity_holds}};
  if (r.tail_min) out.result["tail_min"] = io::ext_to_json(*r.tail_min);
  if (r.minimizer) out.result["minimizer"] = io::to_json(*r.minimizer);
  if (!r.note.empty()) out.result["note"] = r.note;
  // Without the hypothesis the identity may fail; that is reported, not flagged.
  const bool ok = r.identity_holds || !r.hypothesis_atoms;
  double slack = 0.0;
  if (r.lhs_separable.is_finite() && r.rhs.is_finite()) {
    slack = -relative(std::abs(r.lhs_separable.value() - r.rhs.value()), r.rhs.value());
  }
  out.report.records.push_back(record("duality.interchange",
                                      "inf_u int f(w, u(w)) dmu = int inf_x f(w, x) dmu, minimizers pointwise", ok,
                                      slack, tol, r.hypothesis_atoms ? "" : "hypothesis violated at an infinite atom"));
  return out;
}

Outcome cmd_conjugate_integral(const json& cfg, double tol) {
  const DualitySetup s = duality_setup(cfg);
  const SampledFunction v = io::sampled_from_json(need(cfg, "v"), s.carrier);
  const IntegralConjugate r = integral_conjugate(s.spec, v, s.grid, tol);
  Outcome out;
  out.result = {{"via_interchange", io::ext_to_json(r.via_interchange)},
                {"via_pointwise", io::ext_to_json(r.via_pointwise)},
                {"agree", r.agree}};
  double slack = 0.0;
  if (r.via_interchange.is_finite() && r.via_pointwise.is_finite()) {
    slack = -relative(std::abs(r.via_interchange.value() - r.via_pointwise.value()), r.via_pointwise.value());
  }
  out.report.records.push_back(record("duality.integral_conjugate",
                                      "I_f*(v) = I_{f*}(v): interchange path against pointwise conjugates", r.agree,
                                      slack, tol));
  return out;
}

Outcome cmd_subdiff(const json& cfg, double tol) {
  const DualitySetup s = duality_setup(cfg);
  const SampledFunction u = io::sampled_from_json(need(cfg, "u"), s.carrier);
  const SampledFunction v = io::sampled_from_json(need(cfg, "v"), s.carrier);
  const IntegralSubdifferential r = integral_subdifferential(s.spec, u, v, s.grid, tol);
  Outcome out;
  out.result = {{"member_fenchel_young", r.member_fenchel_young},
                {"member_direct", r.member_direct},
                {"worst_gap", io::ext_to_json(r.worst_gap)}};
  if (r.failing_point) out.result["failing_point"] = *r.failing_point;
  if (r.witness) out.result["witness"] = io::to_json(*r.witness);
  const bool ok = r.member_fenchel_young == r.member_direct;
  out.report.records.push_back(record("duality.subdifferential",
                                      "v in dI_f(u) iff v(w) in df(w, u(w)) almost everywhere", ok, 0.0, tol,
                                      ok ? "" : "pointwise and direct membership disagree"));
  return out;
}

Outcome cmd_decompose_functional(const json& cfg, std::uint64_t seed) {
  const Carrier c = io::carrier_from_json(need(cfg, "carrier"));
  const FunctionalTriple l = io::triple_from_json(need(cfg, "functional"), c);
  const std::size_t dim = l.density.dimension();
  const FunctionalDecomposition d =
      decompose_functional(l, default_probes(c, dim), seed, cfg.value("samples", std::size_t{64}));
  Outcome out;
  out.result = {{"spanning", d.spanning},
                {"recovered", io::to_json(d.recovered)},
                {"exact_recovery", d.exact_recovery},
                {"charge_mismatches", d.charge_mismatches},
                {"norm_a", d.norm_a},
                {"norm_d", d.norm_d},
                {"norm_f", d.norm_f},
                {"norm_lower", d.norm_lower},
                {"maximizer_norm", d.maximizer_norm},
                {"norm_upper_sampled", d.norm_upper_sampled},
                {"norms_add", d.norms_add}};
  const bool ok = d.exact_recovery && d.norms_add && d.charge_mismatches == 0;
  const double total = d.norm_a + d.norm_d + d.norm_f;
  out.report.records.push_back(record("duality.functional_decomposition",
                                      "l = l_a + l_d + l_f uniquely, with ||l|| = ||l_a|| + ||l_d|| + ||l_f||", ok,
                                      d.norm_lower - total, 0.0));
  return out;
}

json certificate_json(const Delta2Certificate& c) {
  json j = {{"verdict", c.verdict == Delta2Verdict::Holds ? "holds" : "fails"}, {"k", number_json(c.k)}, {"f", c.f}};
  if (c.witness) {
    j["witness"] = {{"point", c.witness->point}, {"x", c.witness->x}, {"ratio", io::ext_to_json(c.witness->ratio)}};
  }
  return j;
}

Outcome cmd_reflexivity(const json& cfg) {
  const Carrier c = io::carrier_from_json(need(cfg, "carrier"));
  const OrliczIntegrand phi = io::integrand_from_json(need(cfg, "integrand"));
  SamplingGrid g = sampling_grid(cfg, phi.dimension());
  if (!cfg.contains("sampling")) {
    g.min_decade = -3;
    g.max_decade = 2;
  }
  const ReflexivityReport r = reflexivity_linearity_check(phi, c, g, cfg.value("bound", 1000.0));
  Outcome out;
  out.result = {{"dom_linear_phi", r.dom_linear_phi},
                {"dom_linear_conjugate", r.dom_linear_conjugate},
                {"delta2_phi", certificate_json(r.delta2_phi)},
                {"delta2_conjugate", certificate_json(r.delta2_conjugate)},
                {"implication_ok", r.implication_ok},
                {"caveat", r.caveat}};
  if (r.witness_phi) out.result["witness_phi"] = io::to_json(*r.witness_phi);
  if (r.witness_conjugate) out.result["witness_conjugate"] = io::to_json(*r.witness_conjugate);
  out.report.records.push_back(record("duality.reflexivity", "Delta2 for phi and phi* => both modular domains are linear",
                                      r.implication_ok, 0.0, 0.0));
  return out;
}

Outcome cmd_delta2(const json& cfg) {
  const Carrier c = io::carrier_from_json(need(cfg, "carrier"));
  const OrliczIntegrand phi = io::integrand_from_json(need(cfg, "integrand"));
  const SamplingGrid g = sampling_grid(cfg, phi.dimension());
  Outcome out;
  out.result = certificate_json(delta2(phi, c, g, cfg.value("bound", 1000.0)));
  return out;
}

void emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    std::cout.flush();
  } else {
    io::write_file(o.out, text);
  }
}

void emit_outcome(const Options& o, Outcome& oc) {
  if (o.format == "csv") {
    emit(o, oc.report.to_csv(o.timing));
    return;
  }
  json j = oc.report.to_json(o.timing);
  j["result"] = std::move(oc.result);
  emit(o, j.dump(2) + "\n");
}

std::uint64_t resolve_seed(const Options& o, const json* cfg) {
  if (o.seed) return *o.seed;
  if (const char* env = std::getenv("ORLICZ_KIT_SEED"); env && *env) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (*end != '\0') throw io::ParseError("ORLICZ_KIT_SEED is not an unsigned integer");
    return v;
  }
  if (cfg && cfg->contains("seed")) return cfg->at("seed").get<std::uint64_t>();
  return 0;
}

double resolve_tol(const Options& o, const json* cfg) {
  double t = 1e-6;
  if (o.tol) {
    t = *o.tol;
  } else if (cfg && cfg->contains("tol")) {
    t = cfg->at("tol").get<double>();
  }
  if (!(t > 0.0)) throw io::ParseError("tol must be positive");
  return t;
}

int run_verify(const Options& o) {
  std::optional<json> cfg;
  if (!o.config.empty()) cfg = io::load_file(o.config);
  const json* cp = cfg ? &*cfg : nullptr;
  Report report;
  report.command = "verify";
  report.seed = resolve_seed(o, cp);
  report.tol = resolve_tol(o, cp);
  std::vector<std::string> names = o.suites;
  if (names.empty() && cp && cp->contains("suite")) {
    const json& s = cp->at("suite");
    if (s.is_string()) {
      names.push_back(s.get<std::string>());
    } else {
      names = s.get<std::vector<std::string>>();
    }
  }
  if (names.empty()) names.push_back("all");
  try {
    report.suites = expand_suites(names);
  } catch (const std::invalid_argument& e) {
    throw io::ParseError(e.what());
  }
  SuiteOptions so;
  so.seed = report.seed;
  so.tol = report.tol;
  for (const auto& s : report.suites) run_suite(s, so, report);
  emit(o, o.format == "csv" ? report.to_csv(o.timing) : report.to_json(o.timing).dump(2) + "\n");
  return report.all_passed() ? 0 : 1;
}

int run_list(const Options& o) {
  std::string text;
  if (o.format == "csv") {
    text = "suite,module,operations\n";
    for (const auto& s : suite_catalog()) text += s.name + "," + s.module + ",\"" + s.operations + "\"\n";
  } else {
    json a = json::array();
    for (const auto& s : suite_catalog()) a.push_back({{"suite", s.name}, {"module", s.module}, {"operations", s.operations}});
    text = json{{"suites", a}}.dump(2) + "\n";
  }
  emit(o, text);
  return 0;
}

int run_operation(const std::string& name, const Options& o) {
  const json cfg = config_of(o);
  const std::uint64_t seed = resolve_seed(o, &cfg);
  const double tol = resolve_tol(o, &cfg);
  Outcome oc;
  if (name == "norm") {
    oc = cmd_norm(cfg, tol);
  } else if (name == "conjugate") {
    oc = cmd_conjugate(cfg, tol);
  } else if (name == "decompose") {
    oc = cmd_decompose(cfg);
  } else if (name == "interchange") {
    oc = cmd_interchange(cfg, seed, tol);
  } else if (name == "conjugate-integral") {
    oc = cmd_conjugate_integral(cfg, tol);
  } else if (name == "subdiff") {
    oc = cmd_subdiff(cfg, tol);
  } else if (name == "decompose-functional") {
    oc = cmd_decompose_functional(cfg, seed);
  } else if (name == "reflexivity") {
    oc = cmd_reflexivity(cfg);
  } else {
    oc = cmd_delta2(cfg);
  }
  oc.report.command = name;
  oc.report.seed = seed;
  oc.report.tol = tol;
  emit_outcome(o, oc);
  return oc.report.all_passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Orlicz space and convex duality toolkit"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  std::uint64_t seed = 0;
  double tol = 0.0;
  bool list_flag = false;
  app.add_option("--config", o.config, "JSON config file");
  auto* seed_opt = app.add_option("--seed", seed, "RNG seed (default: $ORLICZ_KIT_SEED, else 0)");
  auto* tol_opt = app.add_option("--tol", tol, "tolerance for approximate checks (default 1e-6)");
  app.add_option("--out", o.out, "write the report here instead of stdout");
  app.add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  app.add_flag("--timing", o.timing, "record wall-clock ms per check (reports stop being byte-stable)");

  const std::vector<std::pair<std::string, std::string>> operations = {
      {"norm", "modular, Luxemburg and Amemiya norms of u (dual norms and Hoelder with v)"},
      {"conjugate", "Legendre-Fenchel transform of a grid function or a radial integrand"},
      {"decompose", "Jordan, Hewitt-Yosida and de Giorgi parts of a charge"},
      {"interchange", "infimum of an integral functional against the integral of pointwise minima"},
      {"conjugate-integral", "conjugate of an integral functional, both paths"},
      {"subdiff", "membership v in dI_f(u), pointwise and direct"},
      {"decompose-functional", "recover l = l_a + l_d + l_f from probes and check the norm identity"},
      {"reflexivity", "Delta2 for phi and phi* against linearity of the modular domains"},
      {"delta2", "grid-relative Delta2 certificate or witness"},
  };
  for (const auto& [name, help] : operations) app.add_subcommand(name, help);
  auto* verify = app.add_subcommand("verify", "run verification suites");
  verify->add_option("--suite", o.suites, "suite names (repeatable, or 'all')")->delimiter(',');
  verify->add_flag("--list", list_flag, "list the suites and exit");
  app.add_subcommand("list", "list the verification suites");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  if (!seed_opt->empty()) o.seed = seed;
  if (!tol_opt->empty()) o.tol = tol;

  try {
    const std::string name = app.get_subcommands().front()->get_name();
    if (name == "list" || (name == "verify" && list_flag)) return run_list(o);
    if (name == "verify") return run_verify(o);
    return run_operation(name, o);
  } catch (const io::IoError& e) {
    std::fprintf(stderr, "orlicz-kit: I/O error: %s\n", e.what());
    return 3;
  } catch (const io::ParseError& e) {
    std::fprintf(stderr, "orlicz-kit: parse error: %s\n", e.what());
    return 2;
  } catch (const nlohmann::json::exception& e) {
    std::fprintf(stderr, "orlicz-kit: parse error: %s\n", e.what());
    return 2;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "orlicz-kit: invalid input: %s\n", e.what());
    return 2;
  }
}
