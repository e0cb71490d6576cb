#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "orlicz_kit/extended_real.hpp"

namespace orlicz {

enum class CarrierKind { FinitePoints, FiniteCofiniteTail };

/// A measure space whose points are the indices 0..size()-1.
///
/// FinitePoints: full powerset algebra, weights in [0, inf].
/// FiniteCofiniteTail: the naturals with the finite/cofinite algebra; point n
/// weighs prefix[n] for n < size() and tail_value() afterwards. Prefix
/// weights are positive and may be infinite (an infinite atom sitting in
/// front of the tail); the tail value is finite and positive.
class Carrier {
 public:
  /// The empty FinitePoints carrier.
  Carrier() : kind_(CarrierKind::FinitePoints) {}
  static Carrier finite(std::vector<ExtReal> weights);
  static Carrier tail(std::vector<ExtReal> prefix, double tail_value);

  CarrierKind kind() const noexcept { return kind_; }
  bool is_tail() const noexcept { return kind_ == CarrierKind::FiniteCofiniteTail; }
  /// Number of explicitly listed points (the prefix for tail carriers).
  std::size_t size() const noexcept { return weights_.size(); }
  /// Weight of point i; beyond the prefix of a tail carrier this is the tail value.
  ExtReal weight(std::size_t i) const;
  const std::vector<ExtReal>& weights() const noexcept { return weights_; }
  double tail_value() const noexcept { return tail_; }
  bool has_infinite_atom() const noexcept;

  friend bool operator==(const Carrier&, const Carrier&) = default;

 private:
  Carrier(CarrierKind k, std::vector<ExtReal> w, double tail) : kind_(k), weights_(std::move(w)), tail_(tail) {}
  CarrierKind kind_;
  std::vector<ExtReal> weights_;
  double tail_ = 0.0;
};

/// A finite set of point ids, or the complement of one. On a FinitePoints
/// carrier only ids below size() matter.
class MSet {
 public:
  MSet() = default;
  static MSet of(std::vector<std::size_t> ids);
  static MSet cofinite(std::vector<std::size_t> excluded);
  static MSet from_mask(std::uint64_t mask);
  static MSet all() { return cofinite({}); }

  bool contains(std::size_t id) const noexcept;
  bool is_cofinite() const noexcept { return cofinite_; }
  /// Members if finite, excluded ids if cofinite. Sorted, unique.
  const std::vector<std::size_t>& listed() const noexcept { return ids_; }

  MSet complement() const;
  MSet intersect(const MSet& o) const;
  MSet unite(const MSet& o) const;
  /// Membership bits of ids 0..n-1 (n <= 64).
  std::uint64_t mask(std::size_t n) const;

  friend bool operator==(const MSet&, const MSet&) = default;

 private:
  std::vector<std::size_t> ids_;
  bool cofinite_ = false;
};

/// Sum of weights over s with x + inf = inf. A cofinite set on a tail carrier
/// has infinite measure.
ExtReal measure(const Carrier& c, const MSet& s);

struct PointClasses {
  std::vector<std::size_t> null_points;
  std::vector<std::size_t> finite_atoms;
  std::vector<std::size_t> infinite_atoms;
};

/// Null, finite-atom and infinite-atom points. FinitePoints carriers only.
PointClasses classify_points(const Carrier& c);

/// A set is sigma-finite iff it contains no infinite atom.
bool is_sigma_finite(const Carrier& c, const MSet& s);

/// Exhausting integral of g (one value per listed point; `eventual` is the
/// value on the tail of a tail carrier). 0 * inf = 0, and the result is +inf
/// when both the positive and the negative part diverge.
ExtReal integrate(const Carrier& c, std::span<const ExtReal> g, ExtReal eventual = 0.0);

/// Terms w_i * g_i folded under the same convention, in index order.
ExtReal exhausting_sum(std::span<const ExtReal> terms);

}  // namespace orlicz
