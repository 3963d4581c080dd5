#pragma once

#include <cstdint>

namespace stinar {

/**
 * Seedable pseudo-random generator (xoshiro256** with splitmix64 expansion).
 *
 * A state is derived from a (seed, stream) pair; identical pairs yield
 * identical draw sequences on every platform, and distinct streams are
 * statistically independent. Generators are cheap to construct, so
 * parallel code derives one per unit of work instead of sharing state.
 */
class Rng {
 public:
  explicit Rng(std::uint64_t seed, std::uint64_t stream = 0);

  std::uint64_t next_u64();

  /// Uniform double in [0, 1).
  double next_unit();

  /// Uniform double in (0, 1]; safe to pass to log().
  double next_unit_pos();

 private:
  std::uint64_t state_[4];
};

}  // namespace stinar
