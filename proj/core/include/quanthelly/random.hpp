#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "quanthelly/scalar.hpp"

namespace quanthelly {

/// Reproducible random source. The engine and the seed_seq mixing are fully
/// specified by the standard and integer draws use rejection sampling, so a
/// (seed, stream) pair gives the same sequence on every platform. Streams
/// keep independent trials independent.
class Rng {
 public:
  explicit Rng(std::uint64_t seed, std::uint64_t stream = 0) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
    engine_.seed(seq);
  }

  std::uint64_t next() { return engine_(); }

  /// Uniform in [0, n).
  std::uint64_t below(std::uint64_t n) {
    if (n <= 1) return 0;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return x % n;
  }

  /// Uniform in [lo, hi].
  std::int64_t between(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo) + 1));
  }

  /// Uniform on the grid {lo + i/den : 0 ≤ i ≤ (hi-lo)·den}.
  Scalar grid(std::int64_t lo, std::int64_t hi, std::int64_t den) {
    Scalar v(Integer(static_cast<long>(between(lo * den, hi * den))), Integer(static_cast<long>(den)));
    v.canonicalize();
    return v;
  }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace quanthelly
