#include "sling/mpscgs.hpp"

#include <chrono>
#include <cmath>

namespace sling {

std::int64_t MpscgsSchedule::batch_size(std::int64_t k) const {
  const double d2 = diameter_x * diameter_x;
  const double p = std::ceil(96.0 * noise_bound * noise_bound *
                             std::pow(static_cast<double>(k + 1), 3.0) /
                             (kappa() * smoothness * smoothness * d2) * scale);
  return std::max<std::int64_t>(1, static_cast<std::int64_t>(p));
}

ProxPlan plan_stochastic_prox_step(double gamma, double alpha, double zeta,
                                   double eps, double kappa, double smoothness,
                                   double diameter_x, double sigma,
                                   std::int64_t batch) {
  ProxPlan plan;
  plan.inner_target = eps / (64.0 * kappa);
  plan.fixed_point_tol =
      8.0 * gamma * gamma *
      (4.0 * kappa * smoothness * plan.inner_target / (alpha * alpha) +
       2.0 * zeta / alpha +
       2.0 * sigma * sigma / (static_cast<double>(batch) * alpha * alpha));
  const double d2 = diameter_x * diameter_x;
  const double r = std::ceil(std::log2(4.0 * d2 / plan.fixed_point_tol));
  plan.refinements = std::max<std::int64_t>(1, static_cast<std::int64_t>(r));
  return plan;
}

namespace {

void count_batch(OracleCounters& c, const SaddleProblem& f, std::int64_t k) {
  if (f.sample_count() > 0)
    c.add_ifo(k);
  else
    c.add_sfo(k);
}

IstorcSchedule inner_schedule(const ProblemConstants& c, double target, double scale) {
  const double delta0 = cgs_default_initial_gap(c.smoothness, c.diameter_y);
  IstorcSchedule s;
  s.smoothness = c.smoothness;
  s.strong_convexity = c.strong_concavity;
  s.noise_bound = c.noise_bound;
  s.diameter = c.diameter_y;
  s.epochs = cgs_epochs_for(target, delta0);
  s.scale = scale;
  return s;
}

}  // namespace

ProxResult stochastic_prox_step(const SaddleProblem& f, const Vec& x0, const Vec& y0,
                                const Vec& z, const Vec& v, double gamma,
                                double alpha, double zeta, const SampleBatch& batch,
                                double eps, double scale, RngState& rng,
                                OracleCounters& counters) {
  const ProblemConstants& c = f.constants();
  const ProxPlan plan =
      plan_stochastic_prox_step(gamma, alpha, zeta, eps, c.kappa(), c.smoothness,
                                c.diameter_x, c.noise_bound, batch.size());
  const IstorcSchedule inner = inner_schedule(c, plan.inner_target, scale);

  ProxResult res;
  res.x = x0;
  res.v = v;
  res.y = y0;
  Vec x_prev = x0;
  Vec gx(x0.size());
  for (std::int64_t r = 1; r <= plan.refinements; ++r) {
    res.y = istorc_minimize(f.stochastic_neg_y_objective(res.x), f.set_y(), y0, inner,
                            rng, counters);
    batch.grad_x_at(z, res.y, gx);
    count_batch(counters, f, batch.size());
    res.v = cndg(gx, v, alpha, zeta, f.set_x(), counters).point;
    x_prev = res.x;
    combine(res.x, 1.0 - gamma, x0, gamma, res.v);
    res.step_distances.push_back(dist2(res.x, x_prev));
  }
  return res;
}

SaddleSolution mpscgs_solve(const SaddleProblem& f, const Vec& x0, const Vec& y0,
                            const MpscgsSchedule& schedule, RngState& rng,
                            OracleCounters& counters, const TraceSink& sink) {
  if (x0.size() != f.set_x().dim() || y0.size() != f.set_y().dim())
    throw ArgumentError("mpscgs_solve: shape mismatch");

  SaddleSolution sol;
  sol.x = x0;
  sol.y_avg = y0;
  if (schedule.iters <= 0) return sol;

  using clock = std::chrono::steady_clock;
  std::int64_t active_ns = 0;
  auto t0 = clock::now();

  Vec x = x0, y = y0, v = x0, z(x0.size());
  Vec y_avg(y0.size(), 0.0);
  double weight_sum = 0.0;

  for (std::int64_t k = 1; k <= schedule.iters; ++k) {
    const double gamma = schedule.mixing(k);
    combine(z, 1.0 - gamma, x, gamma, v);
    const auto batch = f.draw_batch(schedule.batch_size(k), rng);
    ProxResult prox = stochastic_prox_step(
        f, x, y, z, v, gamma, schedule.prox_weight(k), schedule.cndg_tol(k), *batch,
        schedule.inner_accuracy(k), schedule.scale, rng, counters);
    x = std::move(prox.x);
    y = std::move(prox.y);
    v = std::move(prox.v);

    const double w = static_cast<double>(k) * static_cast<double>(k + 1);
    weight_sum += w;
    combine(y_avg, (weight_sum - w) / weight_sum, y_avg, w / weight_sum, y);

    active_ns += std::chrono::duration_cast<std::chrono::nanoseconds>(clock::now() - t0).count();
    TraceRecord rec;
    rec.k = k;
    rec.wall_ms = static_cast<double>(active_ns) * 1e-6;
    OracleCounters gap_scratch;
    rec.fw_gap = fw_gap(f, x, y_avg, gap_scratch);
    rec.theory_bound = schedule.theory_bound(k);
    rec.counters = counters;
    if (sink) sink(rec);
    sol.trace.push_back(rec);
    t0 = clock::now();
  }
  sol.x = std::move(x);
  sol.y_avg = std::move(y_avg);
  return sol;
}

std::int64_t mpscgs_predicted_draws(const MpscgsSchedule& schedule, double diameter_y,
                                    std::int64_t finite_sum_n) {
  ProblemConstants c;
  c.smoothness = schedule.smoothness;
  c.strong_concavity = schedule.strong_concavity;
  c.noise_bound = schedule.noise_bound;
  c.diameter_x = schedule.diameter_x;
  c.diameter_y = diameter_y;
  std::int64_t total = 0;
  for (std::int64_t k = 1; k <= schedule.iters; ++k) {
    const std::int64_t p = schedule.batch_size(k);
    const ProxPlan plan = plan_stochastic_prox_step(
        schedule.mixing(k), schedule.prox_weight(k), schedule.cndg_tol(k),
        schedule.inner_accuracy(k), schedule.kappa(), schedule.smoothness,
        schedule.diameter_x, schedule.noise_bound, p);
    const IstorcSchedule inner = inner_schedule(c, plan.inner_target, schedule.scale);
    total += plan.refinements * (p + inner.predicted_sample_draws(finite_sum_n));
  }
  return total;
}

}  // namespace sling
