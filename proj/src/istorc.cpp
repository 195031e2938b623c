#include "sling/istorc.hpp"

#include <cmath>

namespace sling {

std::int64_t IstorcSchedule::inner_iters() const {
  return static_cast<std::int64_t>(std::ceil(4.0 * std::sqrt(2.0 * kappa())));
}

std::int64_t IstorcSchedule::control_batch() const {
  const double s = std::ceil(4800.0 * static_cast<double>(inner_iters()) * kappa() * scale);
  return std::max<std::int64_t>(1, static_cast<std::int64_t>(s));
}

std::int64_t IstorcSchedule::anchor_batch(std::int64_t t) const {
  const double d2 = diameter * diameter;
  const double q = std::ceil(1200.0 * std::pow(2.0, static_cast<double>(t - 1)) *
                             noise_bound * noise_bound * std::sqrt(kappa()) /
                             (smoothness * smoothness * d2) * scale);
  return std::max<std::int64_t>(1, static_cast<std::int64_t>(q));
}

double IstorcSchedule::cndg_tol(std::int64_t t, std::int64_t k) const {
  const double d2 = diameter * diameter;
  return kappa() * smoothness * d2 /
         (std::pow(2.0, static_cast<double>(t - 2)) *
          static_cast<double>(inner_iters()) * static_cast<double>(k));
}

std::int64_t IstorcSchedule::predicted_sample_draws(std::int64_t clamp_n) const {
  std::int64_t total = 0;
  const std::int64_t m = inner_iters();
  const std::int64_t s = control_batch();
  for (std::int64_t t = 1; t <= epochs; ++t) {
    std::int64_t q = anchor_batch(t);
    if (clamp_n > 0 && q >= clamp_n) q = clamp_n;  // exact anchor
    total += q + m * s;
  }
  return total;
}

namespace {

void count_draws(OracleCounters& c, std::int64_t k, bool finite_sum) {
  if (finite_sum)
    c.add_ifo(k);
  else
    c.add_sfo(k);
}

}  // namespace

Vec istorc_minimize(const StochasticObjective& h, const FeasibleSet& set,
                    const Vec& x0, const IstorcSchedule& schedule, RngState& rng,
                    OracleCounters& counters) {
  if (x0.size() != set.dim()) throw ArgumentError("istorc_minimize: shape mismatch");
  if (schedule.epochs <= 0) return x0;

  const bool finite_sum = h.component_count > 0;
  if (finite_sum && !h.full_gradient)
    throw ArgumentError("istorc_minimize: finite-sum form needs full_gradient");
  const std::int64_t m = schedule.inner_iters();
  const std::int64_t s = schedule.control_batch();
  const std::size_t n = set.dim();

  Vec epoch_anchor = x0;  // x_bar_{t-1}, the control-variate base point
  Vec x(n), u(n), w(n), nu(n), gw(n), ganchor(n), r(n);
  for (std::int64_t t = 1; t <= schedule.epochs; ++t) {
    x = epoch_anchor;
    u = x;
    std::int64_t q = schedule.anchor_batch(t);
    if (finite_sum && q >= h.component_count) {
      // anchor batch covers the whole sum: use the exact gradient
      h.full_gradient(epoch_anchor, nu);
      count_draws(counters, h.component_count, true);
    } else {
      h.sample_gradient(epoch_anchor, q, rng, nu);
      count_draws(counters, q, finite_sum);
    }
    for (std::int64_t k = 1; k <= m; ++k) {
      const double lam = schedule.mixing(k);
      combine(w, 1.0 - lam, x, lam, u);
      h.sample_gradient_pair(w, epoch_anchor, s, rng, gw, ganchor);
      count_draws(counters, s, finite_sum);
      combine(r, 1.0, gw, -1.0, ganchor);
      axpy(1.0, nu, r);
      u = cndg(r, u, schedule.prox_weight(k), schedule.cndg_tol(t, k), set, counters)
              .point;
      combine(x, 1.0 - lam, x, lam, u);
    }
    epoch_anchor = x;
  }
  return epoch_anchor;
}

EstimatorProbe estimator_variance_probe(const StochasticObjective& h, const Vec& point,
                                        const Vec& anchor, const Vec& anchor_grad,
                                        std::int64_t batch_s, std::int64_t trials,
                                        RngState& rng, std::int64_t anchor_batch_q) {
  if (trials < 100) throw ArgumentError("estimator_variance_probe: trials >= 100 required");
  if (!h.full_gradient) throw ArgumentError("estimator_variance_probe: needs full_gradient");

  const std::size_t n = point.size();
  Vec true_grad(n);
  h.full_gradient(point, true_grad);

  Vec gp(n), ga(n), nu(n), r(n), err(n);
  Vec mean(n, 0.0), msq(n, 0.0);
  double second = 0.0;
  for (std::int64_t i = 0; i < trials; ++i) {
    h.sample_gradient_pair(point, anchor, batch_s, rng, gp, ga);
    if (anchor_batch_q > 0)
      h.sample_gradient(anchor, anchor_batch_q, rng, nu);
    else
      nu = anchor_grad;
    combine(r, 1.0, gp, -1.0, ga);
    axpy(1.0, nu, r);
    combine(err, 1.0, r, -1.0, true_grad);
    axpy(1.0, err, mean);
    for (std::size_t j = 0; j < n; ++j) msq[j] += err[j] * err[j];
    second += nrm2sq(err);
  }
  EstimatorProbe out;
  out.mean_error = std::move(mean);
  scal(1.0 / static_cast<double>(trials), out.mean_error);
  out.coord_variance.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    const double m2 = msq[j] / static_cast<double>(trials);
    out.coord_variance[j] = std::max(0.0, m2 - out.mean_error[j] * out.mean_error[j]);
  }
  out.second_moment = second / static_cast<double>(trials);
  return out;
}

}  // namespace sling
