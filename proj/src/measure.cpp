#include "orlicz_kit/measure.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace orlicz {

namespace {

std::vector<std::size_t> normalized(std::vector<std::size_t> ids) {
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return ids;
}

std::vector<std::size_t> set_union(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
  std::vector<std::size_t> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<std::size_t> set_intersection(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
  std::vector<std::size_t> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<std::size_t> set_difference(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
  std::vector<std::size_t> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

Carrier Carrier::finite(std::vector<ExtReal> weights) {
  bool positive = false;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (weights[i] < 0.0) throw std::invalid_argument("carrier weight " + std::to_string(i) + " is negative");
    if (weights[i] > 0.0) positive = true;
  }
  if (!positive) throw std::invalid_argument("carrier needs a point of positive weight");
  return Carrier(CarrierKind::FinitePoints, std::move(weights), 0.0);
}

Carrier Carrier::tail(std::vector<ExtReal> prefix, double tail_value) {
  for (std::size_t i = 0; i < prefix.size(); ++i) {
    if (!(prefix[i] > 0.0)) throw std::invalid_argument("tail carrier prefix weight " + std::to_string(i) + " must be positive");
  }
  if (!(tail_value > 0.0) || !std::isfinite(tail_value)) {
    throw std::invalid_argument("tail carrier tail value must be finite and positive");
  }
  return Carrier(CarrierKind::FiniteCofiniteTail, std::move(prefix), tail_value);
}

ExtReal Carrier::weight(std::size_t i) const {
  if (i < weights_.size()) return weights_[i];
  if (is_tail()) return tail_;
  throw std::out_of_range("point " + std::to_string(i) + " is not on the carrier");
}

bool Carrier::has_infinite_atom() const noexcept {
  return std::any_of(weights_.begin(), weights_.end(), [](ExtReal w) { return w.is_pos_inf(); });
}

MSet MSet::of(std::vector<std::size_t> ids) {
  MSet s;
  s.ids_ = normalized(std::move(ids));
  return s;
}

MSet MSet::cofinite(std::vector<std::size_t> excluded) {
  MSet s;
  s.ids_ = normalized(std::move(excluded));
  s.cofinite_ = true;
  return s;
}

MSet MSet::from_mask(std::uint64_t mask) {
  std::vector<std::size_t> ids;
  for (std::size_t i = 0; i < 64; ++i) {
    if (mask >> i & 1U) ids.push_back(i);
  }
  return of(std::move(ids));
}

bool MSet::contains(std::size_t id) const noexcept {
  return std::binary_search(ids_.begin(), ids_.end(), id) != cofinite_;
}

MSet MSet::complement() const {
  MSet s = *this;
  s.cofinite_ = !cofinite_;
  return s;
}

MSet MSet::intersect(const MSet& o) const {
  MSet s;
  if (!cofinite_ && !o.cofinite_) {
    s.ids_ = set_intersection(ids_, o.ids_);
  } else if (cofinite_ && o.cofinite_) {
    s.ids_ = set_union(ids_, o.ids_);
    s.cofinite_ = true;
  } else if (cofinite_) {
    s.ids_ = set_difference(o.ids_, ids_);
  } else {
    s.ids_ = set_difference(ids_, o.ids_);
  }
  return s;
}

MSet MSet::unite(const MSet& o) const { return complement().intersect(o.complement()).complement(); }

std::uint64_t MSet::mask(std::size_t n) const {
  if (n > 64) throw std::invalid_argument("mask supports at most 64 points");
  std::uint64_t m = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (contains(i)) m |= std::uint64_t{1} << i;
  }
  return m;
}

ExtReal measure(const Carrier& c, const MSet& s) {
  ExtReal total = 0.0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (s.contains(i)) total += c.weight(i);
  }
  if (c.is_tail() && s.is_cofinite() && c.tail_value() > 0.0) return ExtReal::pos_inf();
  if (c.is_tail() && !s.is_cofinite()) {
    for (std::size_t id : s.listed()) {
      if (id >= c.size()) total += c.tail_value();
    }
  }
  return total;
}

PointClasses classify_points(const Carrier& c) {
  if (c.is_tail()) throw std::invalid_argument("classify_points needs a FinitePoints carrier");
  PointClasses out;
  for (std::size_t i = 0; i < c.size(); ++i) {
    const ExtReal w = c.weight(i);
    if (w == 0.0) {
      out.null_points.push_back(i);
    } else if (w.is_pos_inf()) {
      out.infinite_atoms.push_back(i);
    } else {
      out.finite_atoms.push_back(i);
    }
  }
  return out;
}

bool is_sigma_finite(const Carrier& c, const MSet& s) {
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (s.contains(i) && c.weight(i).is_pos_inf()) return false;
  }
  return true;
}

ExtReal exhausting_sum(std::span<const ExtReal> terms) {
  double finite = 0.0;
  bool pos_div = false;
  bool neg_div = false;
  for (ExtReal t : terms) {
    if (t.is_pos_inf()) {
      pos_div = true;
    } else if (t.is_neg_inf()) {
      neg_div = true;
    } else {
      finite += t.value();
    }
  }
  if (pos_div) return ExtReal::pos_inf();
  if (neg_div) return ExtReal::neg_inf();
  return finite;
}

ExtReal integrate(const Carrier& c, std::span<const ExtReal> g, ExtReal eventual) {
  if (g.size() != c.size()) {
    throw std::invalid_argument("integrand has " + std::to_string(g.size()) + " values for " +
                                std::to_string(c.size()) + " points");
  }
  std::vector<ExtReal> terms;
  terms.reserve(g.size() + 1);
  for (std::size_t i = 0; i < g.size(); ++i) terms.push_back(c.weight(i) * g[i]);
  // Constant positive tail weights: the tail sum is +-inf unless the eventual value vanishes.
  if (c.is_tail()) terms.push_back(ExtReal::pos_inf() * eventual);
  return exhausting_sum(terms);
}

}  // namespace orlicz
