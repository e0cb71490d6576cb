#pragma once

#include <algorithm>
#include <cmath>
#include <string>

#include "orlicz_kit/report.hpp"

namespace orlicz::checks {

/// Accumulates one CheckRecord. Tolerance checks record the normalized
/// margin; exact checks record the signed difference at a violation.
class Tally {
 public:
  Tally(std::string name, std::string anchor, double tol = 0.0) {
    rec_.name = std::move(name);
    rec_.anchor = std::move(anchor);
    rec_.tol = tol;
  }

  void instance() { ++rec_.instances; }

  /// Passes when ok; `diff` is the measured discrepancy (0 when ok).
  void exact(bool ok, double diff, const std::string& what) {
    if (ok) return;
    fail(-std::abs(std::isnan(diff) ? INFINITY : diff), what);
  }

  /// Passes when slack >= -tol * scale. Stores slack / scale.
  void margin(double slack, double scale, const std::string& what) {
    const double s = std::isnan(slack) ? -INFINITY : slack / std::max(scale, 1e-300);
    rec_.slack = std::min(rec_.slack, s);
    if (!(s >= -rec_.tol)) ++rec_.violations, note(what);
  }

  void require(bool ok, const std::string& what) {
    if (!ok) fail(-INFINITY, what);
  }

  CheckRecord finish() {
    rec_.passed = rec_.violations == 0;
    return rec_;
  }

 private:
  void fail(double slack, const std::string& what) {
    ++rec_.violations;
    rec_.slack = std::min(rec_.slack, slack);
    note(what);
  }
  void note(const std::string& what) {
    if (rec_.detail.empty()) rec_.detail = what;
  }
  CheckRecord rec_;
};

}  // namespace orlicz::checks
