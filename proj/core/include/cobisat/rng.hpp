#pragma once

#include <cstdint>
#include <random>

namespace cobisat {

/// Seeded random source with explicit output mappings.
///
/// All randomized results in this library are part of a reproducibility
/// contract (identical seed => identical output, across platforms), so the
/// integer/real mappings are implemented here instead of relying on
/// std::uniform_*_distribution, whose streams differ between standard
/// library implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform double in [0, 1) with 53 bits of precision.
  double uniform01() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  /// Uniform integer in [0, n). Requires n > 0.
  /// Multiply-shift mapping; bias is O(n / 2^64).
  int below(int n) {
    const auto x = static_cast<unsigned __int128>(next_u64());
    return static_cast<int>((x * static_cast<unsigned __int128>(n)) >> 64);
  }

  /// Fair coin as an Ising spin.
  int random_spin() { return (next_u64() >> 63) ? +1 : -1; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace cobisat
