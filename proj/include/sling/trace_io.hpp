#pragma once

#include <iosfwd>
#include <span>
#include <vector>

#include "sling/trace.hpp"

namespace sling {

enum class TraceFormat { Csv, Json };

// CSV columns, exactly in this order:
//   k,wall_ms,fw_gap,theory_bound,fo,sfo,ifo,lo
// Floats carry 17 significant digits so a parse-back is bit-exact. JSON is an
// array of objects with the same keys. A missing bound is serialized as nan.
void write_trace(std::span<const TraceRecord> records, TraceFormat format,
                 std::ostream& out);

std::vector<TraceRecord> read_trace_csv(std::istream& in);

}  // namespace sling
