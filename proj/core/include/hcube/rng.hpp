#pragma once

#include <cstdint>

// Deterministic randomness. A root seed expands into independent per-trial
// seeds via the splitmix64 finalizer, so suites produce identical results
// independent of thread count or trial order:
//   trial_seed(root, i) = mix64(root + (i + 1) * 0x9e3779b97f4a7c15).

namespace hcube {

constexpr std::uint64_t kSplitMixGamma = 0x9e3779b97f4a7c15ULL;

constexpr std::uint64_t mix64(std::uint64_t z) {
  z ^= z >> 30;
  z *= 0xbf58476d1ce4e5b9ULL;
  z ^= z >> 27;
  z *= 0x94d049bb133111ebULL;
  z ^= z >> 31;
  return z;
}

constexpr std::uint64_t trial_seed(std::uint64_t root, std::uint64_t index) {
  return mix64(root + (index + 1) * kSplitMixGamma);
}

// splitmix64 stream; small, fast, and identical on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    state_ += kSplitMixGamma;
    return mix64(state_);
  }

  // Uniform in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Uniform in [-1, 1).
  double signed_unit() { return 2.0 * uniform() - 1.0; }

  // Uniform integer in [0, bound); bound > 0.
  std::uint64_t below(std::uint64_t bound) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(next_u64()) * bound) >> 64);
  }

 private:
  std::uint64_t state_;
};

}  // namespace hcube
