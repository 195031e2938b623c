#include "sling/trace_io.hpp"

#include <cstdio>
#include <cstdlib>
#include <istream>
#include <ostream>
#include <string>

#include "sling/errors.hpp"

namespace sling {
namespace {

constexpr const char* kHeader = "k,wall_ms,fw_gap,theory_bound,fo,sfo,ifo,lo";

std::string f17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

void write_trace(std::span<const TraceRecord> records, TraceFormat format,
                 std::ostream& out) {
  if (format == TraceFormat::Csv) {
    out << kHeader << '\n';
    for (const TraceRecord& r : records) {
      out << r.k << ',' << f17(r.wall_ms) << ',' << f17(r.fw_gap) << ','
          << f17(r.theory_bound) << ',' << r.counters.fo << ',' << r.counters.sfo
          << ',' << r.counters.ifo << ',' << r.counters.lo << '\n';
    }
    if (!out) throw NumericError("write_trace: sink write failed");
    return;
  }
  out << "[";
  bool first = true;
  for (const TraceRecord& r : records) {
    out << (first ? "\n" : ",\n");
    first = false;
    out << "  {\"k\": " << r.k << ", \"wall_ms\": " << f17(r.wall_ms)
        << ", \"fw_gap\": " << f17(r.fw_gap)
        << ", \"theory_bound\": " << f17(r.theory_bound)
        << ", \"fo\": " << r.counters.fo << ", \"sfo\": " << r.counters.sfo
        << ", \"ifo\": " << r.counters.ifo << ", \"lo\": " << r.counters.lo << "}";
  }
  out << (first ? "]" : "\n]") << '\n';
  if (!out) throw NumericError("write_trace: sink write failed");
}

std::vector<TraceRecord> read_trace_csv(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  if (!std::getline(in, line)) throw ParseError("trace: empty input", 1);
  ++lineno;
  if (line.ends_with('\r')) line.pop_back();
  if (line != kHeader) throw ParseError("trace: unexpected CSV header", lineno);

  std::vector<TraceRecord> out;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line == "\r") continue;
    TraceRecord r;
    const char* p = line.c_str();
    auto next_comma = [&](int i) {
      if (i < 7) {
        if (*p != ',') throw ParseError("trace: expected comma", lineno);
        ++p;
      }
    };
    auto read_int = [&](int i) {
      char* e = nullptr;
      const long long v = std::strtoll(p, &e, 10);
      if (e == p) throw ParseError("trace: malformed integer field", lineno);
      p = e;
      next_comma(i);
      return static_cast<std::int64_t>(v);
    };
    auto read_double = [&](int i) {
      char* e = nullptr;
      const double v = std::strtod(p, &e);
      if (e == p) throw ParseError("trace: malformed float field", lineno);
      p = e;
      next_comma(i);
      return v;
    };
    r.k = read_int(0);
    r.wall_ms = read_double(1);
    r.fw_gap = read_double(2);
    r.theory_bound = read_double(3);
    r.counters.fo = read_int(4);
    r.counters.sfo = read_int(5);
    r.counters.ifo = read_int(6);
    r.counters.lo = read_int(7);
    out.push_back(r);
  }
  return out;
}

}  // namespace sling
