#include <doctest.h>

#include <limits>

#include "sling/counters.hpp"
#include "sling/rng.hpp"
#include "sling/trace.hpp"
#include "sling/types.hpp"

using namespace sling;

TEST_CASE("counters_merge is a componentwise sum") {
  OracleCounters a, b;
  a.fo = 2;
  a.lo = 3;
  b.fo = 1;
  const OracleCounters m = counters_merge(a, b);
  CHECK(m.fo == 3);
  CHECK(m.lo == 3);
  CHECK(m.sfo == 0);

  // identity and symmetry
  CHECK(counters_merge(OracleCounters{}, a) == a);
  const OracleCounters doubled = counters_merge(a, a);
  CHECK(doubled.fo == 4);
  CHECK(doubled.lo == 6);
}

TEST_CASE("counter overflow is a configuration error") {
  OracleCounters a;
  a.fo = std::numeric_limits<std::int64_t>::max();
  OracleCounters b;
  b.fo = 1;
  CHECK_THROWS_AS(counters_merge(a, b), ArgumentError);
}

TEST_CASE("rng replays bit-identically and splits into distinct streams") {
  RngState a(42), b(42);
  for (int i = 0; i < 1000; ++i) REQUIRE(a.next_u64() == b.next_u64());

  RngState s1 = RngState(42).split(1);
  RngState s2 = RngState(42).split(2);
  CHECK(s1.next_u64() != s2.next_u64());

  RngState u(7);
  for (int i = 0; i < 1000; ++i) {
    const double x = u.uniform();
    CHECK(x >= 0.0);
    CHECK(x < 1.0);
  }
  for (int i = 0; i < 1000; ++i) {
    const std::int64_t k = u.uniform_int(17);
    CHECK(k >= 0);
    CHECK(k < 17);
  }
}

TEST_CASE("rng normal has sane first moments") {
  RngState rng(11);
  double sum = 0.0, sumsq = 0.0;
  const int n = 200000;
  for (int i = 0; i < n; ++i) {
    const double z = rng.normal();
    sum += z;
    sumsq += z * z;
  }
  CHECK(std::abs(sum / n) < 0.01);
  CHECK(std::abs(sumsq / n - 1.0) < 0.02);
}

TEST_CASE("dense matrix apply and transpose agree with naive loops") {
  DenseMatrix m(2, 3, Vec{1, 2, 3, 4, 5, 6});
  Vec x = {1, 0, -1};
  Vec out;
  m.apply(x, out);
  CHECK(out == Vec{-2, -2});
  Vec y = {1, 1};
  m.apply_transpose(y, out);
  CHECK(out == Vec{5, 7, 9});
}

TEST_CASE("sparse rows dot and accumulate") {
  SparseRowMatrix s(2, 4);
  s.idx = {0, 3, 1};
  s.val = {0.5, 1.0, 2.0};
  s.row_start = {0, 2, 3};
  Vec x = {1, 1, 1, 1};
  CHECK(s.row_dot(0, x) == 1.5);
  CHECK(s.row_dot(1, x) == 2.0);
  Vec acc(4, 0.0);
  s.add_row(0, 2.0, acc.data());
  CHECK(acc == Vec{1.0, 0, 0, 2.0});
}
