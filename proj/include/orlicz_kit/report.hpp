#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

namespace orlicz {

/// One verification check. `slack` is the worst margin seen (>= 0 is good
/// for tolerance checks; exact checks report the worst signed difference).
struct CheckRecord {
  std::string name;
  std::string anchor;
  bool passed = true;
  double slack = 0.0;
  double tol = 0.0;
  double ms = 0.0;
  std::size_t instances = 0;
  std::size_t violations = 0;
  std::string detail;
};

struct Report {
  std::string command;
  std::uint64_t seed = 0;
  double tol = 0.0;
  std::vector<std::string> suites;
  std::vector<CheckRecord> records;

  std::size_t passed() const;
  std::size_t failed() const { return records.size() - passed(); }
  bool all_passed() const { return failed() == 0; }

  /// Runtimes are written as 0 unless `timing`, so reports stay byte-stable.
  nlohmann::json to_json(bool timing = false) const;
  /// check_name,anchor,status,slack,tol,ms
  std::string to_csv(bool timing = false) const;
};

/// Shortest round-trip decimal for finite values, "inf"/"-inf" otherwise.
std::string format_number(double x);
nlohmann::json number_json(double x);

}  // namespace orlicz
