#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace nondeg {

/// Portable seeded generator. Every decision site draws from its own named
/// substream: the engine is std::mt19937_64 seeded with
/// splitmix64(seed ^ fnv1a64(name)). Bounded draws use rejection sampling
/// rather than std::uniform_int_distribution, whose output is not specified
/// by the standard.
class Rng {
 public:
  Rng(std::uint64_t seed, std::string_view stream);

  std::uint64_t next() { return engine_(); }

  /// Uniform in [0, bound); bound > 0.
  std::uint64_t uniform_below(std::uint64_t bound);

  /// Uniform in [lo, hi].
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);

 private:
  std::mt19937_64 engine_;
};

std::uint64_t splitmix64(std::uint64_t x);
std::uint64_t fnv1a64(std::string_view text);

}  // namespace nondeg
