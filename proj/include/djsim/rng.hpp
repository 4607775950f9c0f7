// Seeded RNG with platform-independent draws.
//
// std::shuffle and the std distributions are implementation-defined, which
// would break byte-identical outputs for a fixed seed. All randomness in the
// library goes through this wrapper instead. Sweeps derive per-run streams
// as Rng(master_seed + run_index).

#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace djsim {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform integer in [0, bound) via rejection sampling; bound > 0.
  std::uint64_t uniform_below(std::uint64_t bound) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return x % bound;
  }

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform_unit() { return (engine_() >> 11) * 0x1.0p-53; }

  bool coin() { return (engine_() >> 63) != 0; }

  /// In-place Fisher-Yates shuffle.
  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::swap(v[i - 1], v[uniform_below(i)]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace djsim
