#pragma once

#include <cstdint>
#include <limits>

namespace probemc {

// SplitMix64 (Steele, Lea, Flood / Vigna). One instance drives one chain;
// ensembles derive per-chain seeds with chain_seed() so streams stay disjoint.
// All sampling goes through next_double()/next_uniform() instead of
// <random> distributions so that identical seeds give identical sequences on
// every platform and standard library.
class SplitMix64 {
 public:
  using result_type = std::uint64_t;

  explicit constexpr SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept {
    return std::numeric_limits<std::uint64_t>::max();
  }

  constexpr result_type operator()() noexcept {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform on [0, 1) with 53-bit resolution.
  double next_double() noexcept {
    return static_cast<double>((*this)() >> 11) * 0x1.0p-53;
  }

  // Uniform on [lo, hi).
  double next_uniform(double lo, double hi) noexcept {
    return lo + (hi - lo) * next_double();
  }

  constexpr std::uint64_t state() const noexcept { return state_; }

 private:
  std::uint64_t state_;
};

// Chain i of an ensemble runs on seed + i.
inline constexpr std::uint64_t chain_seed(std::uint64_t base,
                                          std::uint64_t chain_index) noexcept {
  return base + chain_index;
}

}  // namespace probemc
