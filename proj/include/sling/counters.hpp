#pragma once

#include <cstdint>
#include <limits>

#include "sling/errors.hpp"

namespace sling {

// Monotone oracle-call counts for a solver run: exact gradients (fo),
// stochastic samples (sfo), finite-sum components (ifo) and linear
// optimizations (lo). The complexity tests compare these against
// closed-form counts, so every increment site is deliberate.
struct OracleCounters {
  std::int64_t fo = 0;
  std::int64_t sfo = 0;
  std::int64_t ifo = 0;
  std::int64_t lo = 0;

  void add_fo(std::int64_t k = 1) { fo = checked_add(fo, k); }
  void add_sfo(std::int64_t k) { sfo = checked_add(sfo, k); }
  void add_ifo(std::int64_t k) { ifo = checked_add(ifo, k); }
  void add_lo(std::int64_t k = 1) { lo = checked_add(lo, k); }

  bool dominates(const OracleCounters& o) const {
    return fo >= o.fo && sfo >= o.sfo && ifo >= o.ifo && lo >= o.lo;
  }
  bool operator==(const OracleCounters&) const = default;

  static std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    if (b < 0 || a > std::numeric_limits<std::int64_t>::max() - b)
      throw ArgumentError("oracle counter overflow");
    return a + b;
  }
};

inline OracleCounters counters_merge(const OracleCounters& a, const OracleCounters& b) {
  OracleCounters out = a;
  out.add_fo(b.fo);
  out.add_sfo(b.sfo);
  out.add_ifo(b.ifo);
  out.add_lo(b.lo);
  return out;
}

}  // namespace sling
