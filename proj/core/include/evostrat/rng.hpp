#pragma once

#include <cstdint>
#include <random>

namespace evostrat {

/// splitmix64 finalizer; used to decorrelate seeds derived from small integers.
std::uint64_t mix64(std::uint64_t x) noexcept;

/// Seed for the noise block of one training iteration. Keying by
/// (seed, iteration) gives every run with the same seed an identical
/// noise stream regardless of algorithm, so A/B curves are comparable.
std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t iteration) noexcept;

/// Deterministic standard-normal generator: mt19937_64 under a Box-Muller
/// transform. Fully specified here so output does not depend on the standard
/// library's distribution implementation.
class GaussianRng {
 public:
  explicit GaussianRng(std::uint64_t seed);

  /// One draw from N(0, 1).
  double next_normal();

  /// One draw from U(0, 1), strictly inside the open interval.
  double next_uniform();

  /// Unbiased draw from {0, 1, ..., bound-1}. bound must be nonzero.
  std::uint64_t next_below(std::uint64_t bound);

 private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace evostrat
