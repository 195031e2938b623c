#pragma once

#include <cstdint>

namespace sling {

// Counter-based generator: the i-th output is a pure function of (seed, i),
// so replay only depends on the call sequence and split() streams never
// collide regardless of how work is divided.
class RngState {
 public:
  explicit RngState(std::uint64_t seed) : seed_(seed) {}

  std::uint64_t next_u64() { return mix(seed_ + kGamma * ++counter_); }

  // [0, 1), 53 random bits
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // standard normal via Box-Muller (two uniforms per draw, no cache)
  double normal();

  // uniform integer in [0, n), n > 0
  std::int64_t uniform_int(std::int64_t n);

  // Independent stream derived from this seed; does not disturb the counter.
  RngState split(std::uint64_t stream) const {
    return RngState(mix(seed_ ^ mix(stream + kGamma)));
  }

  std::uint64_t seed() const { return seed_; }
  std::uint64_t counter() const { return counter_; }

 private:
  static constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ULL;

  static std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  std::uint64_t seed_;
  std::uint64_t counter_ = 0;
};

}  // namespace sling
