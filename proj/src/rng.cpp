#include "sling/rng.hpp"

#include <cmath>

#include "sling/errors.hpp"

namespace sling {

double RngState::normal() {
  // u1 in (0,1] so the log is finite
  const double u1 =
      (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;
  const double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925287 * u2);
}

std::int64_t RngState::uniform_int(std::int64_t n) {
  if (n <= 0) throw ArgumentError("uniform_int: n must be positive");
  const std::uint64_t un = static_cast<std::uint64_t>(n);
  // rejection to remove modulo bias
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % un;
  std::uint64_t r;
  do {
    r = next_u64();
  } while (r >= limit);
  return static_cast<std::int64_t>(r % un);
}

}  // namespace sling
