#include "sling/cgs.hpp"

#include <cmath>

namespace sling {

std::int64_t CgsSchedule::inner_iters() const {
  return static_cast<std::int64_t>(
      std::ceil(std::sqrt(24.0 * smoothness / strong_convexity)));
}

double CgsSchedule::cndg_tol(std::int64_t t, std::int64_t k) const {
  return 8.0 * smoothness * initial_gap * std::pow(2.0, -static_cast<double>(t)) /
         (strong_convexity * static_cast<double>(epochs) * static_cast<double>(k));
}

std::int64_t cgs_epochs_for(double accuracy, double delta0) {
  if (accuracy <= 0.0) throw ArgumentError("cgs_epochs_for: accuracy must be positive");
  if (delta0 <= accuracy) return 0;
  return static_cast<std::int64_t>(std::ceil(std::log2(delta0 / accuracy)));
}

double cgs_default_initial_gap(double smoothness, double diameter) {
  return 0.5 * smoothness * diameter * diameter;
}

Vec cgs_minimize(const SmoothObjective& h, const FeasibleSet& set, const Vec& x0,
                 const CgsSchedule& schedule, OracleCounters& counters) {
  if (x0.size() != set.dim()) throw ArgumentError("cgs_minimize: shape mismatch");
  if (schedule.epochs <= 0) return x0;
  if (schedule.smoothness < schedule.strong_convexity || schedule.strong_convexity <= 0.0)
    throw ArgumentError("cgs_minimize: need L >= mu > 0");

  const std::int64_t inner = schedule.inner_iters();
  const std::size_t n = set.dim();

  Vec anchor = x0;  // x_bar_{t-1}
  Vec x(n), u(n), w(n), grad(n);
  for (std::int64_t t = 1; t <= schedule.epochs; ++t) {
    x = anchor;
    u = x;
    for (std::int64_t k = 1; k <= inner; ++k) {
      const double lam = schedule.mixing(k);
      combine(w, 1.0 - lam, x, lam, u);
      h.gradient(w, grad);
      counters.add_fo();
      u = cndg(grad, u, schedule.prox_weight(k), schedule.cndg_tol(t, k), set, counters)
              .point;
      combine(x, 1.0 - lam, x, lam, u);
    }
    anchor = x;
  }
  return anchor;
}

}  // namespace sling
