#include "sling/mpcgs.hpp"

#include <chrono>
#include <cmath>

namespace sling {

ProxPlan plan_prox_step(double gamma, double alpha, double zeta, double eps,
                        double kappa, double smoothness, double diameter_x) {
  ProxPlan plan;
  plan.inner_target = eps / (64.0 * kappa);
  plan.fixed_point_tol =
      4.0 * gamma *
      std::sqrt(2.0 * kappa * smoothness * plan.inner_target / (alpha * alpha) +
                2.0 * zeta / alpha);
  const double r = std::ceil(std::log2(4.0 * diameter_x / plan.fixed_point_tol));
  plan.refinements = std::max<std::int64_t>(1, static_cast<std::int64_t>(r));
  return plan;
}

ProxResult prox_step(const SaddleProblem& f, const Vec& x0, const Vec& y0,
                     const Vec& z, const Vec& v, double gamma, double alpha,
                     double zeta, double eps, OracleCounters& counters,
                     bool warm_start_y) {
  const ProblemConstants& c = f.constants();
  const ProxPlan plan =
      plan_prox_step(gamma, alpha, zeta, eps, c.kappa(), c.smoothness, c.diameter_x);

  const double delta0 = cgs_default_initial_gap(c.smoothness, c.diameter_y);
  CgsSchedule inner{c.smoothness, c.strong_concavity,
                    cgs_epochs_for(plan.inner_target, delta0), delta0};

  ProxResult res;
  res.x = x0;
  res.v = v;
  res.y = y0;
  Vec x_prev = x0;
  Vec gx(x0.size());
  for (std::int64_t r = 1; r <= plan.refinements; ++r) {
    const Vec& y_start = warm_start_y ? res.y : y0;
    res.y = cgs_minimize(f.neg_y_objective(res.x), f.set_y(), y_start, inner, counters);
    f.grad_x(z, res.y, gx);
    counters.add_fo();
    res.v = cndg(gx, v, alpha, zeta, f.set_x(), counters).point;
    x_prev = res.x;
    combine(res.x, 1.0 - gamma, x0, gamma, res.v);
    res.step_distances.push_back(dist2(res.x, x_prev));
  }
  return res;
}

SaddleSolution mpcgs_solve(const SaddleProblem& f, const Vec& x0, const Vec& y0,
                           const MpcgsSchedule& schedule, OracleCounters& counters,
                           const TraceSink& sink, bool warm_start_y) {
  if (x0.size() != f.set_x().dim() || y0.size() != f.set_y().dim())
    throw ArgumentError("mpcgs_solve: shape mismatch");

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
    ProxResult prox =
        prox_step(f, x, y, z, v, gamma, schedule.prox_weight(k), schedule.cndg_tol(k),
                  schedule.inner_accuracy(k), counters, warm_start_y);
    x = std::move(prox.x);
    y = std::move(prox.y);
    v = std::move(prox.v);

    const double w = static_cast<double>(k) * static_cast<double>(k + 1);
    weight_sum += w;
    combine(y_avg, (weight_sum - w) / weight_sum, y_avg, w / weight_sum, y);

    // pause the solver clock while measuring the reported gap
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

std::vector<double> dual_average_weights(std::int64_t k) {
  std::vector<double> w(static_cast<std::size_t>(k));
  const double norm = 3.0 / (static_cast<double>(k) * static_cast<double>(k + 1) *
                             static_cast<double>(k + 2));
  for (std::int64_t s = 1; s <= k; ++s)
    w[static_cast<std::size_t>(s - 1)] =
        norm * static_cast<double>(s) * static_cast<double>(s + 1);
  return w;
}

std::int64_t mpcgs_predicted_fo(const MpcgsSchedule& schedule, double diameter_y) {
  const double kappa = schedule.kappa();
  const double delta0 = cgs_default_initial_gap(schedule.smoothness, diameter_y);
  const std::int64_t m =
      CgsSchedule{schedule.smoothness, schedule.strong_concavity, 1, delta0}.inner_iters();
  std::int64_t total = 0;
  for (std::int64_t k = 1; k <= schedule.iters; ++k) {
    const ProxPlan plan = plan_prox_step(
        schedule.mixing(k), schedule.prox_weight(k), schedule.cndg_tol(k),
        schedule.inner_accuracy(k), kappa, schedule.smoothness, schedule.diameter_x);
    const std::int64_t epochs = cgs_epochs_for(plan.inner_target, delta0);
    total += plan.refinements * (epochs * m + 1);
  }
  return total;
}

}  // namespace sling
