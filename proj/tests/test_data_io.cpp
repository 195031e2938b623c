#include <doctest.h>

#include <cmath>
#include <sstream>

#include "sling/libsvm.hpp"
#include "sling/rng.hpp"
#include "sling/trace_io.hpp"

using namespace sling;

namespace {

Dataset random_dataset(RngState& rng) {
  // labels deliberately unsorted / arbitrary values, rows with varying
  // sparsity including empty rows; every class appears at least once so the
  // parsed label universe matches
  const std::int64_t h = 2 + rng.uniform_int(3);
  const std::int64_t n = h + 3 + rng.uniform_int(10);
  const std::int64_t d = 4 + rng.uniform_int(8);
  Dataset data;
  data.features = SparseRowMatrix(static_cast<std::size_t>(n), static_cast<std::size_t>(d));
  for (std::int64_t i = 0; i < n; ++i) {
    for (std::int64_t j = 0; j < d; ++j)
      if (rng.uniform() < 0.4) {
        data.features.idx.push_back(static_cast<std::size_t>(j));
        data.features.val.push_back(rng.normal());
      }
    data.features.row_start[static_cast<std::size_t>(i) + 1] = data.features.idx.size();
  }
  for (std::int64_t i = 0; i < n; ++i)
    data.labels.push_back(
        static_cast<std::int32_t>(i < h ? i : rng.uniform_int(h)));
  for (std::int64_t k = 0; k < h; ++k)
    data.class_values.push_back(static_cast<double>(7 * (h - k)));  // descending raws
  // class_values must be ascending on a parsed dataset; sort and remap here
  std::vector<double> sorted = data.class_values;
  std::sort(sorted.begin(), sorted.end());
  for (auto& l : data.labels) {
    const double raw = data.class_values[static_cast<std::size_t>(l)];
    l = static_cast<std::int32_t>(
        std::lower_bound(sorted.begin(), sorted.end(), raw) - sorted.begin());
  }
  data.class_values = sorted;
  return data;
}

}  // namespace

TEST_CASE("parses the basic line format with 1-based indices") {
  std::istringstream in("2 1:0.5 4:1.0\n");
  const Dataset d = parse_libsvm(in);
  CHECK(d.n() == 1);
  CHECK(d.d() == 4);
  CHECK(d.h() == 1);
  CHECK(d.class_values == std::vector<double>{2.0});
  CHECK(d.features.idx == std::vector<std::size_t>{0, 3});
  CHECK(d.features.val == Vec{0.5, 1.0});
}

TEST_CASE("labels remap densely in ascending order") {
  std::istringstream in("7 1:1\n3 2:1\n");
  const Dataset d = parse_libsvm(in);
  CHECK(d.h() == 2);
  CHECK(d.class_values == std::vector<double>{3.0, 7.0});
  CHECK(d.labels == std::vector<std::int32_t>{1, 0});
}

TEST_CASE("comments, blank lines and whitespace runs are tolerated") {
  std::istringstream in(
      "# header comment\n"
      "\n"
      "1   2:0.25\t4:1.5   # trailing comment\n"
      "   \t \n"
      "2 1:1\n");
  const Dataset d = parse_libsvm(in);
  CHECK(d.n() == 2);
  CHECK(d.features.idx == std::vector<std::size_t>{1, 3, 0});
}

TEST_CASE("parse errors carry line numbers") {
  std::istringstream bad_label("x 1:1\n");
  CHECK_THROWS_AS(parse_libsvm(bad_label), ParseError);
  std::istringstream bad_pair("1 1:\n");
  CHECK_THROWS_AS(parse_libsvm(bad_pair), ParseError);
  std::istringstream bad_order("1 3:1 2:1\n");
  CHECK_THROWS_AS(parse_libsvm(bad_order), ParseError);
  std::istringstream dup("1 2:1 2:1\n");
  CHECK_THROWS_AS(parse_libsvm(dup), ParseError);
  std::istringstream nan_val("1 2:nan\n");
  CHECK_THROWS_AS(parse_libsvm(nan_val), ParseError);
  std::istringstream empty("# nothing here\n\n");
  CHECK_THROWS_AS(parse_libsvm(empty), ArgumentError);
  try {
    std::istringstream two_lines("1 1:1\n1 0:1\n");
    parse_libsvm(two_lines);
    FAIL("expected throw");
  } catch (const ParseError& e) {
    CHECK(e.line == 2);
  }
}

TEST_CASE("forced dimension pads but cannot shrink") {
  std::istringstream in("1 2:1\n");
  const Dataset d = parse_libsvm(in, 10);
  CHECK(d.d() == 10);
  std::istringstream in2("1 5:1\n");
  CHECK_THROWS_AS(parse_libsvm(in2, 3), ArgumentError);
}

TEST_CASE("write/parse round trip is exact on generated fixtures") {
  RngState rng(42);
  for (int trial = 0; trial < 10; ++trial) {
    const Dataset original = random_dataset(rng);
    std::ostringstream out;
    write_libsvm(original, out);
    std::istringstream back(out.str());
    const Dataset reparsed = parse_libsvm(back, original.d());
    CHECK(reparsed == original);
  }
}

TEST_CASE("trace csv: header-only when empty, exact columns otherwise") {
  std::ostringstream empty;
  write_trace({}, TraceFormat::Csv, empty);
  CHECK(empty.str() == "k,wall_ms,fw_gap,theory_bound,fo,sfo,ifo,lo\n");

  TraceRecord r;
  r.k = 1;
  r.wall_ms = 1.5;
  r.fw_gap = 0.125;
  r.theory_bound = 2.0;
  r.counters.fo = 3;
  r.counters.lo = 9;
  std::ostringstream one;
  const TraceRecord recs[1] = {r};
  write_trace(recs, TraceFormat::Csv, one);
  CHECK(one.str() ==
        "k,wall_ms,fw_gap,theory_bound,fo,sfo,ifo,lo\n"
        "1,1.5,0.125,2,3,0,0,9\n");
}

TEST_CASE("trace csv round trip is bit-exact, including nan bounds") {
  std::vector<TraceRecord> recs;
  RngState rng(5);
  for (std::int64_t k = 1; k <= 6; ++k) {
    TraceRecord r;
    r.k = k;
    r.wall_ms = 1000.0 * rng.uniform();
    r.fw_gap = std::exp(-rng.uniform() * 30.0) * 7.0 / 3.0;
    r.theory_bound = k == 3 ? std::nan("") : 1.0 / static_cast<double>(k * k);
    r.counters.fo = rng.uniform_int(1 << 30);
    r.counters.sfo = rng.uniform_int(1 << 30);
    r.counters.ifo = rng.uniform_int(1 << 30);
    r.counters.lo = rng.uniform_int(1 << 30);
    recs.push_back(r);
  }
  std::ostringstream out;
  write_trace(recs, TraceFormat::Csv, out);
  std::istringstream in(out.str());
  const auto back = read_trace_csv(in);
  REQUIRE(back.size() == recs.size());
  for (std::size_t i = 0; i < recs.size(); ++i) {
    CHECK(back[i].k == recs[i].k);
    CHECK((back[i].wall_ms == recs[i].wall_ms));
    CHECK((back[i].fw_gap == recs[i].fw_gap));
    if (std::isnan(recs[i].theory_bound))
      CHECK(std::isnan(back[i].theory_bound));
    else
      CHECK(back[i].theory_bound == recs[i].theory_bound);
    CHECK(back[i].counters == recs[i].counters);
  }
}

TEST_CASE("trace json carries the same keys") {
  TraceRecord r;
  r.k = 2;
  r.fw_gap = 0.5;
  r.theory_bound = 1.0;
  std::ostringstream out;
  const TraceRecord recs[1] = {r};
  write_trace(recs, TraceFormat::Json, out);
  const std::string s = out.str();
  CHECK(s.find("\"k\": 2") != std::string::npos);
  CHECK(s.find("\"fw_gap\": 0.5") != std::string::npos);
  CHECK(s.find("\"lo\": 0") != std::string::npos);
}

TEST_CASE("trace csv parse errors") {
  std::istringstream bad_header("not,a,trace\n1,2,3\n");
  CHECK_THROWS_AS(read_trace_csv(bad_header), ParseError);
  std::istringstream bad_row("k,wall_ms,fw_gap,theory_bound,fo,sfo,ifo,lo\n1,2\n");
  CHECK_THROWS_AS(read_trace_csv(bad_row), ParseError);
}

TEST_CASE("sink write failures propagate") {
  std::ostringstream out;
  out.setstate(std::ios::badbit);
  TraceRecord r;
  const TraceRecord recs[1] = {r};
  CHECK_THROWS_AS(write_trace(recs, TraceFormat::Csv, out), NumericError);
}
