#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>

#include "json.hpp"
#include "orlicz_kit/charges.hpp"
#include "orlicz_kit/conjugation.hpp"
#include "orlicz_kit/duality.hpp"
#include "orlicz_kit/norms.hpp"
#include "orlicz_kit/orlicz.hpp"

namespace orlicz::io {

using nlohmann::json;

/// Malformed input: bad JSON syntax (line/column set) or a schema violation.
struct ParseError : std::runtime_error {
  ParseError(const std::string& msg, std::size_t line = 0, std::size_t column = 0);
  std::size_t line;
  std::size_t column;
};

/// Unreadable or unwritable file.
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Parses text; syntax errors carry the 1-based line and column.
json parse_text(const std::string& text, const std::string& source = "<input>");
json load_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, const std::string& contents);

/// number, "inf" or "-inf".
ExtReal ext_from_json(const json& j);
json ext_to_json(ExtReal x);

Carrier carrier_from_json(const json& j);
json to_json(const Carrier& c);

Charge charge_from_json(const json& j, const Carrier& c);
json to_json(const Charge& nu);

/// {"family": ..., "params": {...}, "dim": n?, "coefficients": [...]?}
OrliczIntegrand integrand_from_json(const json& j);

SampledFunction sampled_from_json(const json& j, const Carrier& c);
json to_json(const SampledFunction& u);

GridFunction grid_from_json(const json& j);
json to_json(const GridFunction& g);

/// {"family": "shifted_quadratic"|"tilted_absolute"|"indicator_linear"|"grid", ...}
PointIntegrand point_integrand_from_json(const json& j);
/// {"points": [...], "tail": {...}?}
IntegrandSpec integrand_spec_from_json(const json& j, const Carrier& c);
SearchGrid search_grid_from_json(const json& j, std::size_t dim);

/// {"density": SampledFunction, "diffuse": [{"point": i, "weight": [..]}], "pfa": [..]?}
FunctionalTriple triple_from_json(const json& j, const Carrier& c);
json to_json(const FunctionalTriple& l);

}  // namespace orlicz::io
