#include "exact.hpp"

#include <array>
#include <vector>

namespace orlicz::exact {

int sign_of_sum(std::span<const double> terms) {
  // Shewchuk's grow-expansion with zero elimination: h stays a nonoverlapping
  // expansion ordered by increasing magnitude, so its sign is the sign of
  // its last component.
  std::vector<double> h;
  h.reserve(terms.size() + 1);
  for (double t : terms) {
    double q = t;
    std::size_t out = 0;
    for (double hi : h) {
      double s, e;
      two_sum(q, hi, s, e);
      q = s;
      if (e != 0.0) h[out++] = e;
    }
    h.resize(out);
    if (q != 0.0) h.push_back(q);
  }
  if (h.empty()) return 0;
  return h.back() > 0.0 ? 1 : -1;
}

int compare_affine(double a, double b, double c, double d, double e, double f) {
  std::array<double, 6> t{};
  two_product(a, b, t[0], t[1]);
  two_product(d, e, t[2], t[3]);
  t[2] = -t[2];
  t[3] = -t[3];
  t[4] = -c;
  t[5] = f;
  return sign_of_sum(t);
}

int orientation(double x1, double y1, double x2, double y2, double x3, double y3) {
  // Expanded: x2 y3 - x2 y1 - x1 y3 - x3 y2 + x3 y1 + x1 y2.
  const std::array<std::array<double, 3>, 6> prods{{
      {x2, y3, 1.0}, {x2, y1, -1.0}, {x1, y3, -1.0},
      {x3, y2, -1.0}, {x3, y1, 1.0}, {x1, y2, 1.0}}};
  std::array<double, 12> t{};
  for (std::size_t i = 0; i < prods.size(); ++i) {
    double p, e;
    two_product(prods[i][0], prods[i][1], p, e);
    t[2 * i] = prods[i][2] * p;
    t[2 * i + 1] = prods[i][2] * e;
  }
  return sign_of_sum(t);
}

}  // namespace orlicz::exact
