#pragma once

// Error-free transformations and an exact sign-of-sum predicate. Used where a
// fast path must pick exactly the same argmax/argmin as a brute-force oracle.

#include <cmath>
#include <initializer_list>
#include <span>

namespace orlicz::exact {

inline void two_sum(double a, double b, double& s, double& e) {
  s = a + b;
  const double bb = s - a;
  e = (a - (s - bb)) + (b - bb);
}

inline void two_product(double a, double b, double& p, double& e) {
  p = a * b;
  e = std::fma(a, b, -p);
}

/// Sign (-1, 0, 1) of the exact real sum of `terms`. Exact unless an
/// intermediate overflows.
int sign_of_sum(std::span<const double> terms);

inline int sign_of_sum(std::initializer_list<double> terms) {
  return sign_of_sum(std::span<const double>(terms.begin(), terms.size()));
}

/// Sign of (a*b - c) - (d*e - f), exactly.
int compare_affine(double a, double b, double c, double d, double e, double f);

/// Sign of the orientation determinant of three planar points:
/// (x2-x1)(y3-y1) - (x3-x1)(y2-y1), exactly.
int orientation(double x1, double y1, double x2, double y2, double x3, double y3);

}  // namespace orlicz::exact
