#pragma once

#include <cstdint>
#include <random>

namespace pathcover {

__extension__ using uint128 = unsigned __int128;

/// Seeded 64-bit Mersenne Twister (std::mt19937_64) with portable draws.
///
/// The engine's output sequence is fixed by the C++ standard; the standard
/// distributions are not, so bounded integers and unit reals are derived
/// here directly from raw engine output.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform integer in [lo, hi] via a single multiply-shift, no rejection.
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
    const auto range = static_cast<uint128>(static_cast<std::uint64_t>(hi - lo) + 1);
    const auto scaled = static_cast<uint128>(engine_()) * range;
    return lo + static_cast<std::int64_t>(static_cast<std::uint64_t>(scaled >> 64));
  }

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace pathcover
