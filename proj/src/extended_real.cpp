#include "orlicz_kit/extended_real.hpp"

#include <ostream>
#include <sstream>

namespace orlicz {

ExtReal::ExtReal(double v) : v_(v) {
  if (std::isnan(v)) throw std::domain_error("NaN is not an extended real");
}

double ExtReal::value() const {
  if (!is_finite()) throw std::domain_error("extended real is infinite: " + str());
  return v_;
}

ExtReal operator+(ExtReal a, ExtReal b) {
  if ((a.is_pos_inf() && b.is_neg_inf()) || (a.is_neg_inf() && b.is_pos_inf())) return ExtReal::pos_inf();
  return ExtReal(a.v_ + b.v_);
}

ExtReal operator*(ExtReal a, ExtReal b) {
  if (a.v_ == 0.0 || b.v_ == 0.0) return ExtReal(0.0);
  return ExtReal(a.v_ * b.v_);
}

std::string ExtReal::str() const {
  if (is_pos_inf()) return "inf";
  if (is_neg_inf()) return "-inf";
  std::ostringstream os;
  os.precision(17);
  os << v_;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, ExtReal x) { return os << x.str(); }

}  // namespace orlicz
