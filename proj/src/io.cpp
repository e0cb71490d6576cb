#include "orlicz_kit/io.hpp"

#include <fstream>
#include <sstream>

namespace orlicz::io {

namespace {

std::string where(std::size_t line, std::size_t column) {
  return line == 0 ? std::string() : std::to_string(line) + ":" + std::to_string(column) + ": ";
}

const json& need(const json& j, const char* key) {
  if (!j.is_object()) throw ParseError(std::string("expected an object holding '") + key + "'");
  const auto it = j.find(key);
  if (it == j.end()) throw ParseError(std::string("missing field '") + key + "'");
  return *it;
}

double number(const json& j, const char* what) {
  if (!j.is_number()) throw ParseError(std::string(what) + " must be a number");
  return j.get<double>();
}

std::vector<double> numbers(const json& j, const char* what) {
  if (!j.is_array()) throw ParseError(std::string(what) + " must be an array of numbers");
  std::vector<double> out;
  for (const auto& x : j) out.push_back(number(x, what));
  return out;
}

std::vector<ExtReal> ext_numbers(const json& j, const char* what) {
  if (!j.is_array()) throw ParseError(std::string(what) + " must be an array");
  std::vector<ExtReal> out;
  for (const auto& x : j) out.push_back(ext_from_json(x));
  return out;
}

/// Library constructors validate with invalid_argument; surface those as schema errors.
template <class F>
auto checked(F&& f) {
  try {
    return f();
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

}  // namespace

ParseError::ParseError(const std::string& msg, std::size_t l, std::size_t c)
    : std::runtime_error(where(l, c) + msg), line(l), column(c) {}

json parse_text(const std::string& text, const std::string& source) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    // e.byte is 1-based and points just past the offending character.
    const std::size_t end = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i < end; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    std::string msg = e.what();
    const auto pos = msg.find("syntax error");
    if (pos != std::string::npos) msg = msg.substr(pos);
    throw ParseError(source + ": " + msg, line, column);
  }
}

json load_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_text(ss.str(), path.string());
}

void write_file(const std::filesystem::path& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path.string());
  out << contents;
  if (!out) throw IoError("write failed for " + path.string());
}

ExtReal ext_from_json(const json& j) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "inf" || s == "+inf") return ExtReal::pos_inf();
    if (s == "-inf") return ExtReal::neg_inf();
  }
  throw ParseError("expected a number, \"inf\" or \"-inf\"");
}

json ext_to_json(ExtReal x) {
  if (x.is_finite()) return x.value();
  return x.is_pos_inf() ? "inf" : "-inf";
}

Carrier carrier_from_json(const json& j) {
  const auto kind = need(j, "kind");
  if (kind == "finite") return checked([&] { return Carrier::finite(ext_numbers(need(j, "weights"), "weights")); });
  if (kind == "tail") {
    const json& t = need(j, "tail");
    return checked([&] {
      return Carrier::tail(ext_numbers(need(t, "prefix"), "tail.prefix"), number(need(t, "value"), "tail.value"));
    });
  }
  throw ParseError("carrier kind must be \"finite\" or \"tail\"");
}

json to_json(const Carrier& c) {
  json w = json::array();
  for (const auto& x : c.weights()) w.push_back(ext_to_json(x));
  if (!c.is_tail()) return {{"kind", "finite"}, {"weights", w}};
  return {{"kind", "tail"}, {"tail", {{"prefix", w}, {"value", c.tail_value()}}}};
}

Charge charge_from_json(const json& j, const Carrier& c) {
  const double lambda = j.contains("lambda") ? number(j["lambda"], "lambda") : 0.0;
  return checked([&] { return Charge::on(c, numbers(need(j, "masses"), "masses"), lambda); });
}

json to_json(const Charge& nu) {
  json j = {{"masses", nu.masses}};
  if (nu.carrier.is_tail()) j["lambda"] = nu.lambda;
  j["norm"] = nu.norm();
  return j;
}

OrliczIntegrand integrand_from_json(const json& j) {
  const std::string family = need(j, "family").get<std::string>();
  const json params = j.value("params", json::object());
  const auto dim = j.value("dim", std::size_t{1});
  return checked([&] {
    OrliczIntegrand phi = [&] {
      if (family == "power") return OrliczIntegrand::power(number(need(params, "p"), "params.p"), dim);
      if (family == "abs") return OrliczIntegrand::absolute(dim);
      if (family == "exp") return OrliczIntegrand::exponential(dim);
      if (family == "ball") {
        return OrliczIntegrand::ball_indicator(dim, params.contains("radius") ? number(params["radius"], "radius") : 1.0);
      }
      if (family == "varexp") {
        return OrliczIntegrand::variable_exponent(numbers(need(params, "exponents"), "params.exponents"), dim);
      }
      throw ParseError("unknown integrand family '" + family + "'");
    }();
    if (j.contains("coefficients")) phi = phi.scaled(numbers(j["coefficients"], "coefficients"));
    return phi;
  });
}

SampledFunction sampled_from_json(const json& j, const Carrier& c) {
  const json& vals = need(j, "values");
  if (!vals.is_array()) throw ParseError("values must be an array");
  std::vector<std::vector<double>> values;
  for (const auto& v : vals) values.push_back(v.is_array() ? numbers(v, "values") : std::vector<double>{number(v, "values")});
  std::optional<std::vector<double>> eventual;
  if (j.contains("eventual")) {
    const json& e = j["eventual"];
    eventual = e.is_array() ? numbers(e, "eventual") : std::vector<double>{number(e, "eventual")};
  }
  return checked([&] { return SampledFunction::on(c, std::move(values), std::move(eventual)); });
}

json to_json(const SampledFunction& u) {
  json j = {{"values", u.values}};
  if (u.eventual) j["eventual"] = *u.eventual;
  return j;
}

GridFunction grid_from_json(const json& j) {
  const json& axes = need(j, "axes");
  if (!axes.is_array()) throw ParseError("axes must be an array of arrays");
  std::vector<std::vector<double>> ax;
  for (const auto& a : axes) ax.push_back(numbers(a, "axes"));
  return checked([&] { return GridFunction::make(std::move(ax), ext_numbers(need(j, "values"), "values")); });
}

json to_json(const GridFunction& g) {
  json v = json::array();
  for (const auto& x : g.values) v.push_back(ext_to_json(x));
  return {{"axes", g.axes}, {"values", v}};
}

PointIntegrand point_integrand_from_json(const json& j) {
  const std::string family = need(j, "family").get<std::string>();
  PointIntegrand f = checked([&] {
    if (family == "shifted_quadratic") {
      return PointIntegrand::shifted_quadratic(numbers(need(j, "center"), "center"),
                                               j.contains("coeff") ? number(j["coeff"], "coeff") : 1.0);
    }
    if (family == "tilted_absolute") {
      return PointIntegrand::tilted_absolute(number(need(j, "offset"), "offset"), j.value("dim", std::size_t{1}));
    }
    if (family == "indicator_linear") {
      return PointIntegrand::indicator_linear(numbers(need(j, "center"), "center"), number(need(j, "radius"), "radius"),
                                              j.contains("linear") ? numbers(j["linear"], "linear") : std::vector<double>{});
    }
    if (family == "grid") return PointIntegrand::grid(grid_from_json(need(j, "grid")));
    throw ParseError("unknown point integrand family '" + family + "'");
  });
  if (j.contains("tilt")) f = checked([&] { return f.tilted(numbers(j["tilt"], "tilt")); });
  return f;
}

IntegrandSpec integrand_spec_from_json(const json& j, const Carrier& c) {
  const json& pts = need(j, "points");
  if (!pts.is_array()) throw ParseError("points must be an array");
  std::vector<PointIntegrand> points;
  for (const auto& p : pts) points.push_back(point_integrand_from_json(p));
  std::optional<PointIntegrand> tail;
  if (j.contains("tail")) tail = point_integrand_from_json(j["tail"]);
  return checked([&] { return IntegrandSpec::make(c, std::move(points), std::move(tail)); });
}

SearchGrid search_grid_from_json(const json& j, std::size_t dim) {
  if (j.is_null()) return SearchGrid::uniform(-2.0, 2.0, 17, dim);
  if (j.contains("axes")) {
    SearchGrid g;
    for (const auto& a : j["axes"]) g.axes.push_back(numbers(a, "grid.axes"));
    if (g.axes.size() != dim) throw ParseError("grid dimension does not match the integrand");
    for (const auto& a : g.axes) {
      if (a.empty() || !std::is_sorted(a.begin(), a.end())) throw ParseError("grid axes must be nonempty and sorted");
    }
    return g;
  }
  return checked([&] {
    return SearchGrid::uniform(number(need(j, "lo"), "grid.lo"), number(need(j, "hi"), "grid.hi"),
                               need(j, "n").get<std::size_t>(), dim);
  });
}

FunctionalTriple triple_from_json(const json& j, const Carrier& c) {
  FunctionalTriple l;
  l.density = sampled_from_json(need(j, "density"), c);
  if (j.contains("diffuse")) {
    for (const auto& d : j["diffuse"]) {
      const auto i = need(d, "point").get<std::size_t>();
      const json& w = need(d, "weight");
      l.diffuse.emplace_back(i, w.is_array() ? numbers(w, "weight") : std::vector<double>{number(w, "weight")});
    }
  }
  if (j.contains("pfa")) {
    const json& p = j["pfa"];
    l.pfa = p.is_array() ? numbers(p, "pfa") : std::vector<double>{number(p, "pfa")};
  }
  return l;
}

json to_json(const FunctionalTriple& l) {
  json d = json::array();
  for (const auto& [i, w] : l.diffuse) d.push_back({{"point", i}, {"weight", w}});
  return {{"density", to_json(l.density)}, {"diffuse", d}, {"pfa", l.pfa}};
}

}  // namespace orlicz::io
