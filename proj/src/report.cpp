#include "orlicz_kit/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>

namespace orlicz {

std::size_t Report::passed() const {
  return static_cast<std::size_t>(std::count_if(records.begin(), records.end(), [](const auto& r) { return r.passed; }));
}

std::string format_number(double x) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  if (std::isnan(x)) return "nan";
  if (x == 0.0) return "0";  // no "-0"
  char buf[32];
  for (int prec = 1; prec <= 17; ++prec) {
    std::snprintf(buf, sizeof buf, "%.*g", prec, x);
    if (std::strtod(buf, nullptr) == x) break;
  }
  return buf;
}

nlohmann::json number_json(double x) {
  if (x == 0.0) return 0.0;
  if (std::isfinite(x)) return x;
  return format_number(x);
}

nlohmann::json Report::to_json(bool timing) const {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& r : records) {
    nlohmann::json j = {{"name", r.name},
                        {"anchor", r.anchor},
                        {"status", r.passed ? "pass" : "fail"},
                        {"slack", number_json(r.slack)},
                        {"tol", number_json(r.tol)},
                        {"ms", timing ? r.ms : 0.0},
                        {"instances", r.instances},
                        {"violations", r.violations}};
    if (!r.detail.empty()) j["detail"] = r.detail;
    checks.push_back(std::move(j));
  }
  return {{"command", command},
          {"seed", seed},
          {"tol", number_json(tol)},
          {"suites", suites},
          {"checks", std::move(checks)},
          {"summary", {{"total", records.size()}, {"passed", passed()}, {"failed", failed()}}}};
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string Report::to_csv(bool timing) const {
  std::ostringstream os;
  os << "check_name,anchor,status,slack,tol,ms\n";
  for (const auto& r : records) {
    os << csv_field(r.name) << ',' << csv_field(r.anchor) << ',' << (r.passed ? "pass" : "fail") << ','
       << format_number(r.slack) << ',' << format_number(r.tol) << ',' << format_number(timing ? r.ms : 0.0) << '\n';
  }
  return os.str();
}

}  // namespace orlicz
