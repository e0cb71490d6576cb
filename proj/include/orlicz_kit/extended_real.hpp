#pragma once

#include <cmath>
#include <compare>
#include <iosfwd>
#include <limits>
#include <stdexcept>
#include <string>

namespace orlicz {

/// A value in [-inf, +inf]. NaN is rejected at construction, so it never
/// propagates. Arithmetic follows measure-theory conventions:
///   0 * (+-inf) = 0, and (+inf) + (-inf) = +inf.
class ExtReal {
 public:
  enum class Kind { Finite, PosInf, NegInf };

  constexpr ExtReal() noexcept = default;
  ExtReal(double v);  // NOLINT(google-explicit-constructor)

  static ExtReal pos_inf() noexcept { return ExtReal(Raw{}, std::numeric_limits<double>::infinity()); }
  static ExtReal neg_inf() noexcept { return ExtReal(Raw{}, -std::numeric_limits<double>::infinity()); }

  Kind kind() const noexcept {
    if (v_ == std::numeric_limits<double>::infinity()) return Kind::PosInf;
    if (v_ == -std::numeric_limits<double>::infinity()) return Kind::NegInf;
    return Kind::Finite;
  }
  bool is_finite() const noexcept { return kind() == Kind::Finite; }
  bool is_pos_inf() const noexcept { return kind() == Kind::PosInf; }
  bool is_neg_inf() const noexcept { return kind() == Kind::NegInf; }

  /// Finite value; throws std::domain_error on an infinity.
  double value() const;
  /// Finite value or +-HUGE_VAL.
  double to_double() const noexcept { return v_; }

  ExtReal operator-() const noexcept { return ExtReal(Raw{}, -v_); }
  ExtReal& operator+=(ExtReal o) { return *this = *this + o; }
  ExtReal& operator-=(ExtReal o) { return *this = *this - o; }
  ExtReal& operator*=(ExtReal o) { return *this = *this * o; }

  friend ExtReal operator+(ExtReal a, ExtReal b);
  friend ExtReal operator-(ExtReal a, ExtReal b) { return a + (-b); }
  friend ExtReal operator*(ExtReal a, ExtReal b);

  friend bool operator==(ExtReal a, ExtReal b) noexcept { return a.v_ == b.v_; }
  friend std::partial_ordering operator<=>(ExtReal a, ExtReal b) noexcept { return a.v_ <=> b.v_; }

  std::string str() const;

 private:
  struct Raw {};
  constexpr ExtReal(Raw, double v) noexcept : v_(v) {}
  double v_ = 0.0;
};

std::ostream& operator<<(std::ostream& os, ExtReal x);

inline ExtReal max(ExtReal a, ExtReal b) { return a < b ? b : a; }
inline ExtReal min(ExtReal a, ExtReal b) { return b < a ? b : a; }

}  // namespace orlicz
