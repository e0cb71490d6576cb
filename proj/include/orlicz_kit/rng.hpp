#pragma once

#include <cstdint>
#include <random>

namespace orlicz {

/// Deterministic stream derived from (seed, stream id). Draws use raw
/// engine bits only, so results do not depend on the standard library's
/// distribution implementations.
class Rng {
 public:
  Rng(std::uint64_t seed, std::uint64_t stream) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
    engine_.seed(seq);
  }

  std::uint64_t bits() { return engine_(); }
  /// Uniform on [0, 1).
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  /// Uniform on {0, ..., n-1}; n > 0.
  std::uint64_t below(std::uint64_t n) { return engine_() % n; }
  /// Uniform on {lo, ..., hi}.
  std::int64_t integer(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }
  /// k / 2^bits for a uniform integer k in [lo, hi]: exactly representable sums.
  double dyadic(std::int64_t lo, std::int64_t hi, int bits) {
    return static_cast<double>(integer(lo, hi)) / static_cast<double>(std::int64_t{1} << bits);
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace orlicz
