#include "sling/metrics.hpp"

#include <cmath>

namespace sling {

double fw_gap(const SaddleProblem& f, const Vec& x, const Vec& y,
              OracleCounters& counters) {
  Vec gx(x.size()), gy(y.size());
  f.grad_x(x, y, gx);
  f.grad_y(x, y, gy);
  counters.add_fo();

  const Vec u = f.set_x().lo_solve(gx, counters);
  Vec neg_gy = gy;
  scal(-1.0, neg_gy);
  const Vec v = f.set_y().lo_solve(neg_gy, counters);

  return (dot(x, gx) - dot(u, gx)) + (dot(v, gy) - dot(y, gy));
}

namespace {

// certified Frank-Wolfe descent for min_x f(x, y_fixed); stops at Wolfe gap
// <= tol
Vec fw_minimize_x(const SaddleProblem& f, const Vec& y, const Vec& x0, double tol,
                  OracleCounters& scratch) {
  const double L = f.constants().smoothness;
  const double d = f.set_x().diameter();
  const std::int64_t cap =
      10 * static_cast<std::int64_t>(std::min(std::ceil(4.0 * L * d * d / tol) + 1.0, 9.0e17));
  Vec x = x0, gx(x0.size());
  for (std::int64_t it = 0; it < cap; ++it) {
    f.grad_x(x, y, gx);
    const Vec p = f.set_x().lo_solve(gx, scratch);
    const double gap = dot(x, gx) - dot(p, gx);
    if (gap <= tol) return x;
    const double denom = L * kernels().dist2sq(x.data(), p.data(), x.size());
    const double step = denom > 0.0 ? std::min(1.0, gap / denom) : 1.0;
    combine(x, 1.0 - step, x, step, p);
  }
  throw NumericError("primal_dual_gap: Frank-Wolfe inner solve did not certify", tol);
}

}  // namespace

double primal_dual_gap(const SaddleProblem& f, const Vec& x, const Vec& y,
                       double accuracy) {
  if (accuracy <= 0.0) throw ArgumentError("primal_dual_gap: accuracy must be positive");
  if (f.set_x().dim() > 64 || f.set_y().dim() > 64)
    throw ArgumentError("primal_dual_gap: oracle limited to 64 dimensions per side");

  OracleCounters scratch;  // measurement cost, deliberately not surfaced
  const ProblemConstants& c = f.constants();

  double max_over_y;
  Vec y_star(y.size());
  if (f.max_y_closed_form(x, y_star)) {
    max_over_y = f.value(x, y_star);
  } else {
    const double delta0 =
        cgs_default_initial_gap(c.smoothness, f.set_y().diameter());
    CgsSchedule sched{c.smoothness, c.strong_concavity,
                      cgs_epochs_for(accuracy / 4.0, delta0), delta0};
    const Vec y_hat =
        cgs_minimize(f.neg_y_objective(x), f.set_y(), f.set_y().canonical_point(),
                     sched, scratch);
    max_over_y = f.value(x, y_hat);
  }

  double min_over_x;
  if (f.linear_in_x()) {
    Vec gx(x.size());
    f.grad_x(x, y, gx);  // constant in x
    const Vec u = f.set_x().lo_solve(gx, scratch);
    min_over_x = f.value(u, y);
  } else {
    const Vec x_hat = fw_minimize_x(f, y, x, accuracy / 4.0, scratch);
    min_over_x = f.value(x_hat, y);
  }

  return max_over_y - min_over_x;
}

}  // namespace sling
