#pragma once

#include <cstdint>
#include <functional>

#include "sling/counters.hpp"

namespace sling {

// Per-iteration snapshot emitted by the saddle solvers. `wall_ms` covers
// solver work only (gap evaluation for reporting is timed out of band), and
// `counters` likewise count solver oracle calls, not measurement calls.
// `theory_bound` is NaN when the solver has no published rate (SPFW).
struct TraceRecord {
  std::int64_t k = 0;
  double wall_ms = 0.0;
  double fw_gap = 0.0;
  double theory_bound = 0.0;
  OracleCounters counters;
};

// Records arrive strictly in iteration order on the solver thread; a consumer
// on another thread must be fed through a single-producer queue.
using TraceSink = std::function<void(const TraceRecord&)>;

}  // namespace sling
