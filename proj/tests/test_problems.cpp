#include <doctest.h>

#include <cmath>

#include "sling/estimate.hpp"
#include "sling/robust_multiclass.hpp"
#include "sling/synthetic_saddle.hpp"
#include "sling/top_singular.hpp"
#include "support/oracles.hpp"

using namespace sling;

namespace {

Dataset tiny_dataset(std::uint64_t seed, std::int64_t n, std::int64_t d, std::int64_t h,
                     double density = 0.6) {
  RngState rng(seed);
  Dataset data;
  data.features = SparseRowMatrix(static_cast<std::size_t>(n), static_cast<std::size_t>(d));
  for (std::int64_t i = 0; i < n; ++i) {
    for (std::int64_t j = 0; j < d; ++j) {
      if (rng.uniform() < density) {
        data.features.idx.push_back(static_cast<std::size_t>(j));
        data.features.val.push_back(rng.normal());
      }
    }
    data.features.row_start[static_cast<std::size_t>(i) + 1] = data.features.idx.size();
  }
  for (std::int64_t i = 0; i < n; ++i)
    data.labels.push_back(static_cast<std::int32_t>(rng.uniform_int(h)));
  for (std::int64_t k = 0; k < h; ++k) data.class_values.push_back(static_cast<double>(k));
  return data;
}

}  // namespace

TEST_CASE("robust multiclass value at fixed points") {
  const std::int64_t n = 6, d = 4, h = 3;
  const RobustMulticlass p(tiny_dataset(2, n, d, h), 1.0, 0.05);
  const Vec zero(static_cast<std::size_t>(h * d), 0.0);

  SUBCASE("zero predictor gives log(h) loss on every sample") {
    Vec y(static_cast<std::size_t>(n), 1.0 / static_cast<double>(n));
    // uniform y kills the regularizer entirely
    CHECK(p.value(zero, y) == doctest::Approx(std::log(3.0)).epsilon(1e-12));

    // non-uniform y keeps sum y_i = 1 in the loss term
    Vec y2(static_cast<std::size_t>(n), 0.0);
    y2[0] = 0.7;
    y2[3] = 0.3;
    double reg = 0.0;
    for (std::size_t i = 0; i < y2.size(); ++i) {
      const double r = static_cast<double>(n) * y2[i] - 1.0;
      reg += r * r;
    }
    CHECK(p.value(zero, y2) ==
          doctest::Approx(std::log(3.0) - 0.5 * 0.05 * reg).epsilon(1e-12));
  }
}

TEST_CASE("single-sample value is the plain logistic loss") {
  Dataset data;
  data.features = SparseRowMatrix(1, 2);
  data.features.idx = {0};
  data.features.val = {1.0};
  data.features.row_start = {0, 1};
  data.labels = {0};
  data.class_values = {0.0, 1.0};  // h = 2
  const RobustMulticlass p(std::move(data), 1.0, 0.5);
  // rows: w_0 = (1,0), w_1 = (0,0); margin = w_1.a - w_0.a = -1
  const Vec w = {1.0, 0.0, 0.0, 0.0};
  const Vec y = {1.0};
  CHECK(p.value(w, y) == doctest::Approx(std::log(1.0 + std::exp(-1.0))).epsilon(1e-14));
}

TEST_CASE("zero-predictor softmax weights are uniform 1/h") {
  const std::int64_t n = 4, d = 3, h = 4;
  const RobustMulticlass p(tiny_dataset(5, n, d, h), 1.0, 0.1);
  const Vec zero(static_cast<std::size_t>(h * d), 0.0);
  Vec y(static_cast<std::size_t>(n), 1.0 / static_cast<double>(n));
  Vec gw, gy;
  p.grad_x(zero, y, gw);

  // expected: sum_i y_i * (1/h) * (e_j - e_{b_i}) a_i^T
  Vec want(static_cast<std::size_t>(h * d), 0.0);
  const auto& feats = p.data().features;
  for (std::size_t i = 0; i < feats.rows; ++i) {
    const auto b = static_cast<std::size_t>(p.data().labels[i]);
    for (std::size_t j = 0; j < static_cast<std::size_t>(h); ++j) {
      const double coef =
          y[i] * (j == b ? -(static_cast<double>(h) - 1.0) : 1.0) / static_cast<double>(h);
      feats.add_row(i, coef, want.data() + j * static_cast<std::size_t>(d));
    }
  }
  for (std::size_t k = 0; k < want.size(); ++k)
    CHECK(gw[k] == doctest::Approx(want[k]).epsilon(1e-12));
}

TEST_CASE("grad_y at uniform weights is the loss vector") {
  const std::int64_t n = 5, d = 4, h = 3;
  const RobustMulticlass p(tiny_dataset(9, n, d, h), 1.0, 0.2);
  RngState rng(4);
  const Vec w = random_feasible_point(p.set_x(), rng);
  const Vec y(static_cast<std::size_t>(n), 1.0 / static_cast<double>(n));
  Vec gy, losses;
  p.grad_y(w, y, gy);
  p.losses(w, losses);
  for (std::size_t i = 0; i < gy.size(); ++i)
    CHECK(gy[i] == doctest::Approx(losses[i]).epsilon(1e-14));
}

TEST_CASE("gradients match central finite differences") {
  const std::int64_t n = 5, d = 3, h = 3;
  const RobustMulticlass p(tiny_dataset(13, n, d, h), 1.0, 0.1);
  RngState rng(31);
  for (int trial = 0; trial < 10; ++trial) {
    const Vec w = random_feasible_point(p.set_x(), rng);
    const Vec y = random_feasible_point(p.set_y(), rng);
    Vec gw, gy;
    p.grad_x(w, y, gw);
    p.grad_y(w, y, gy);
    const Vec fd_w = testing::central_differences(
        [&](const Vec& wq) { return p.value(wq, y); }, w, 1e-6);
    const Vec fd_y = testing::central_differences(
        [&](const Vec& yq) { return p.value(w, yq); }, y, 1e-6);
    const double scale_w = nrm2(gw) + 1.0;
    for (std::size_t k = 0; k < gw.size(); ++k)
      CHECK(std::abs(gw[k] - fd_w[k]) <= 1e-5 * scale_w);
    const double scale_y = nrm2(gy) + 1.0;
    for (std::size_t k = 0; k < gy.size(); ++k)
      CHECK(std::abs(gy[k] - fd_y[k]) <= 1e-5 * scale_y);
  }
}

TEST_CASE("batch gradients: full batch, singleton enumeration, repeats") {
  const std::int64_t n = 20, d = 3, h = 3;
  const RobustMulticlass p(tiny_dataset(17, n, d, h), 1.0, 0.05);
  RngState rng(8);
  const Vec w = random_feasible_point(p.set_x(), rng);
  const Vec y = random_feasible_point(p.set_y(), rng);
  Vec gw_full, gy_full;
  p.grad_x(w, y, gw_full);
  p.grad_y(w, y, gy_full);

  SUBCASE("all indices reproduce the full gradient exactly") {
    std::vector<std::int64_t> all(static_cast<std::size_t>(n));
    for (std::int64_t i = 0; i < n; ++i) all[static_cast<std::size_t>(i)] = i;
    Vec gw, gy;
    p.batch_grad(w, y, all, gw, gy);
    for (std::size_t k = 0; k < gw.size(); ++k)
      CHECK(gw[k] == doctest::Approx(gw_full[k]).epsilon(1e-12));
    for (std::size_t k = 0; k < gy.size(); ++k)
      CHECK(gy[k] == doctest::Approx(gy_full[k]).epsilon(1e-12));
  }

  SUBCASE("mean of the n singleton batches is the full gradient") {
    Vec acc_w(gw_full.size(), 0.0), acc_y(gy_full.size(), 0.0), gw, gy;
    for (std::int64_t i = 0; i < n; ++i) {
      const std::int64_t one[1] = {i};
      p.batch_grad(w, y, one, gw, gy);
      axpy(1.0 / static_cast<double>(n), gw, acc_w);
      axpy(1.0 / static_cast<double>(n), gy, acc_y);
    }
    for (std::size_t k = 0; k < acc_w.size(); ++k)
      CHECK(acc_w[k] == doctest::Approx(gw_full[k]).epsilon(1e-10));
    for (std::size_t k = 0; k < acc_y.size(); ++k)
      CHECK(acc_y[k] == doctest::Approx(gy_full[k]).epsilon(1e-10));
  }

  SUBCASE("repeated indices are multiset-averaged; empty is an error") {
    const std::int64_t rep[4] = {3, 3, 7, 3};
    Vec gw, gy;
    p.batch_grad(w, y, rep, gw, gy);  // no throw
    CHECK_THROWS_AS(p.batch_grad(w, y, std::span<const std::int64_t>{}, gw, gy),
                    ArgumentError);
    const std::int64_t bad[1] = {n};
    CHECK_THROWS_AS(p.batch_grad(w, y, bad, gw, gy), ArgumentError);
  }
}

TEST_CASE("closed-form inner maximizer beats every sampled dual point") {
  const std::int64_t n = 8, d = 3, h = 3;
  const RobustMulticlass p(tiny_dataset(23, n, d, h), 1.0, 0.1);
  RngState rng(5);
  const Vec w = random_feasible_point(p.set_x(), rng);
  Vec y_star;
  REQUIRE(p.max_y_closed_form(w, y_star));
  CHECK(p.set_y().contains(y_star, 1e-9));
  const double best = p.value(w, y_star);
  for (int t = 0; t < 500; ++t) {
    const Vec y = random_feasible_point(p.set_y(), rng);
    CHECK(best >= p.value(w, y) - 1e-10);
  }
  // agreement with a projected-ascent oracle
  const double mu = p.constants().strong_concavity;
  const Vec y_pgd = testing::pgd_minimize(
      [&](const Vec& y, Vec& g) {
        p.grad_y(w, y, g);
        scal(-1.0, g);  // minimize -f(w, .)
      },
      [](Vec v) { return testing::proj_simplex(std::move(v)); },
      Vec(static_cast<std::size_t>(n), 1.0 / static_cast<double>(n)),
      std::max(p.constants().smoothness, mu), 20000);
  CHECK(p.value(w, y_pgd) == doctest::Approx(best).epsilon(1e-9));
}

TEST_CASE("strong concavity and convexity certificates") {
  const std::int64_t n = 6, d = 4, h = 3;
  const RobustMulticlass p(tiny_dataset(29, n, d, h), 1.0, 0.1);
  const double mu = p.constants().strong_concavity;
  CHECK(mu == doctest::Approx(0.1 * 36.0));  // lambda n^2
  RngState rng(6);
  for (int t = 0; t < 50; ++t) {
    const Vec x = random_feasible_point(p.set_x(), rng);
    const Vec y1 = random_feasible_point(p.set_y(), rng);
    const Vec y2 = random_feasible_point(p.set_y(), rng);
    Vec gy2(y2.size());
    p.grad_y(x, y2, gy2);
    Vec dy(y1.size());
    combine(dy, 1.0, y1, -1.0, y2);
    CHECK(p.value(x, y1) - p.value(x, y2) <=
          dot(gy2, dy) - 0.5 * mu * nrm2sq(dy) + 1e-9);

    const Vec x1 = random_feasible_point(p.set_x(), rng);
    Vec gx(x.size());
    p.grad_x(x, y1, gx);
    Vec dx(x.size());
    combine(dx, 1.0, x1, -1.0, x);
    CHECK(p.value(x1, y1) - p.value(x, y1) >= dot(gx, dx) - 1e-9);
  }
}

TEST_CASE("synthetic instance hits the target conditioning") {
  for (std::uint64_t seed : {1ull, 2ull, 3ull}) {
    const auto p = synthetic_make(seed, 12, 7, 6.0);
    CHECK(p.constants().kappa() == doctest::Approx(6.0).epsilon(0.1));
    // kappa is measured as s1(A)/mu
    const double s1 = top_singular_pair(p.coupling(), 1e-10, 5000, RngState(1)).sigma;
    CHECK(s1 / p.mu() == doctest::Approx(6.0).epsilon(0.1));
  }
  CHECK_THROWS_AS(synthetic_make(1, 4, 4, 0.5), ArgumentError);
}

TEST_CASE("synthetic gradients match finite differences") {
  const auto p = synthetic_make(4, 6, 4, 3.0);
  RngState rng(9);
  for (int t = 0; t < 10; ++t) {
    const Vec x = random_feasible_point(p.set_x(), rng);
    const Vec y = random_feasible_point(p.set_y(), rng);
    Vec gx, gy;
    gx.resize(x.size());
    gy.resize(y.size());
    p.grad_x(x, y, gx);
    p.grad_y(x, y, gy);
    const Vec fx = testing::central_differences(
        [&](const Vec& q) { return p.value(q, y); }, x, 1e-6);
    const Vec fy = testing::central_differences(
        [&](const Vec& q) { return p.value(x, q); }, y, 1e-6);
    for (std::size_t k = 0; k < gx.size(); ++k)
      CHECK(std::abs(gx[k] - fx[k]) <= 1e-5 * (nrm2(gx) + 1.0));
    for (std::size_t k = 0; k < gy.size(); ++k)
      CHECK(std::abs(gy[k] - fy[k]) <= 1e-5 * (nrm2(gy) + 1.0));
  }
}

TEST_CASE("decoupled instance: zero coupling separates the blocks") {
  const std::size_t dx = 4, dy = 3;
  Vec c = {0.5, -0.25, 0.0, 1.0};
  Vec y0 = {0.1, 0.05, -0.1};
  SyntheticSaddle p(DenseMatrix(dx, dy), c, y0, 1.0, 0.5);
  CHECK(p.constants().smoothness == 1.0);  // max(0, mu)
  // inner maximizer ignores x entirely
  Vec y_star;
  RngState rng(3);
  for (int t = 0; t < 5; ++t) {
    const Vec x = random_feasible_point(p.set_x(), rng);
    REQUIRE(p.max_y_closed_form(x, y_star));
    for (std::size_t j = 0; j < dy; ++j)
      CHECK(y_star[j] == doctest::Approx(y0[j]).epsilon(1e-12));
  }
  // primal side is a pure LO problem; vertex argmin of c
  OracleCounters cnt;
  const Vec xstar = p.set_x().lo_solve(c, cnt);
  CHECK(xstar == Vec{0, 1, 0, 0});
}

TEST_CASE("designed saddle agrees with a long extragradient run") {
  const auto p = synthetic_make(1, 2, 2, 2.0);
  REQUIRE(p.designed_saddle().has_value());
  const double radius = p.set_y().radius();
  const auto eg = testing::extragradient_saddle(
      p, Vec{0.5, 0.5}, Vec(2, 0.0),
      [](Vec v) { return testing::proj_simplex(std::move(v)); },
      [radius](Vec v) { return testing::proj_ball(std::move(v), radius); }, 1e-2,
      1000000);
  CHECK(dist2(eg.x, p.designed_saddle()->x) <= 1e-8);
  CHECK(dist2(eg.y, p.designed_saddle()->y) <= 1e-8);
}

TEST_CASE("inner maximizer path is kappa-Lipschitz") {
  const auto p = synthetic_make(6, 8, 5, 4.0);
  const double kappa = p.constants().kappa();
  RngState rng(12);
  Vec y1, y2;
  for (int t = 0; t < 50; ++t) {
    const Vec x1 = random_feasible_point(p.set_x(), rng);
    const Vec x2 = random_feasible_point(p.set_x(), rng);
    REQUIRE(p.max_y_closed_form(x1, y1));
    REQUIRE(p.max_y_closed_form(x2, y2));
    CHECK(dist2(y1, y2) <= kappa * dist2(x1, x2) + 1e-9);
  }
}

TEST_CASE("synthetic stochastic surface is unbiased and exact at sigma zero") {
  SUBCASE("sigma zero: draws are the exact gradient") {
    const auto p = synthetic_make(3, 5, 4, 2.0, 0.0);
    RngState rng(7);
    const auto batch = p.draw_batch(3, rng);
    const Vec x = random_feasible_point(p.set_x(), rng);
    const Vec y = random_feasible_point(p.set_y(), rng);
    Vec gb(x.size()), gx(x.size());
    batch->grad_x_at(x, y, gb);
    p.grad_x(x, y, gx);
    CHECK(gb == gx);
  }
  SUBCASE("batch means concentrate on the gradient") {
    const auto p = synthetic_make(3, 5, 4, 2.0, 0.8);
    RngState rng(19);
    const Vec x = random_feasible_point(p.set_x(), rng);
    const Vec y = random_feasible_point(p.set_y(), rng);
    Vec gx(x.size());
    p.grad_x(x, y, gx);
    Vec mean(x.size(), 0.0), g(x.size());
    Vec var(x.size(), 0.0);
    const int trials = 10000;
    for (int t = 0; t < trials; ++t) {
      const auto batch = p.draw_batch(4, rng);
      batch->grad_x_at(x, y, g);
      for (std::size_t j = 0; j < g.size(); ++j) {
        const double e = g[j] - gx[j];
        mean[j] += e / trials;
        var[j] += e * e / trials;
      }
    }
    for (std::size_t j = 0; j < mean.size(); ++j) {
      const double se = std::sqrt(var[j] / trials);
      CHECK(std::abs(mean[j]) <= 3.0 * se + 1e-12);
    }
  }
}

TEST_CASE("constant estimation: analytic passthrough and safe empirical bounds") {
  const auto p = synthetic_make(10, 6, 4, 3.0, 0.5);
  RngState rng(1);
  const ProblemConstants analytic = estimate_constants(p, 20, rng);
  CHECK(analytic.smoothness == p.constants().smoothness);
  CHECK(analytic.noise_bound == p.constants().noise_bound);

  // empirical smoothness overestimates the true coupling norm in >= 95% of seeds
  int covered = 0;
  const int seeds = 100;
  for (int s = 0; s < seeds; ++s) {
    const auto q = synthetic_make(100 + static_cast<std::uint64_t>(s), 5, 4, 2.5);
    RngState r(55 + static_cast<std::uint64_t>(s));
    const ProblemConstants est = estimate_constants(q, 20, r, /*force_empirical=*/true);
    const double s1 = q.constants().smoothness;  // = ||A||_2 here
    covered += est.smoothness >= s1 ? 1 : 0;
  }
  CHECK(covered >= 95);

  // finite-sum pilot fills a positive noise bound and the analytic mu
  const RobustMulticlass rm(tiny_dataset(3, 12, 4, 3), 1.0, 1.0 / 12.0);
  RngState r2(2);
  const ProblemConstants est = estimate_constants(rm, 15, r2);
  CHECK(est.strong_concavity == doctest::Approx(12.0));  // lambda n^2 = n
  CHECK(est.noise_bound > 0.0);
  CHECK(est.smoothness >= est.strong_concavity);
}
