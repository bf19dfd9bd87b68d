#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

namespace nvpair {

// Counter-based random stream. Every draw is a pure function of
// (seed, domain, index, draw number), so samples can be produced in any
// order, on any number of workers, with identical results.
class CounterRng {
 public:
  CounterRng(std::uint64_t seed, std::uint64_t domain, std::uint64_t index)
      : key_(mix(mix(seed ^ 0x6a09e667f3bcc909ULL) ^ mix(domain + 0xbb67ae8584caa73bULL) ^
                 (index * 0x9e3779b97f4a7c15ULL))) {}

  std::uint64_t next_u64() { return mix(key_ + (++counter_) * 0x9e3779b97f4a7c15ULL); }

  // Uniform on the open interval (0, 1).
  double uniform() { return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53; }

  double normal() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    const double radius = std::sqrt(-2.0 * std::log(uniform()));
    const double angle = 2.0 * std::numbers::pi * uniform();
    spare_ = radius * std::sin(angle);
    has_spare_ = true;
    return radius * std::cos(angle);
  }

  double normal(double mean, double sigma) { return mean + sigma * normal(); }

 private:
  // SplitMix64 finalizer.
  static constexpr std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::uint64_t key_;
  std::uint64_t counter_ = 0;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

// Stream tags so that independent quantities drawn for the same sample index
// never share random numbers.
namespace rng_domain {
inline constexpr std::uint64_t kPairPositions = 1;
inline constexpr std::uint64_t kCouplingAngle = 2;
inline constexpr std::uint64_t kTraceNoise = 3;
}  // namespace rng_domain

}  // namespace nvpair
