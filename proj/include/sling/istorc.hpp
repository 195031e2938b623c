#pragma once

#include <functional>

#include "sling/cndg.hpp"
#include "sling/rng.hpp"

namespace sling {

// Stochastic minimization objective. sample_gradient averages `batch` fresh
// draws; sample_gradient_pair evaluates the SAME draws at two points, which
// is what makes the variance-reduced difference term work. In finite-sum
// mode (component_count > 0) draws are uniform components with replacement
// and count against the ifo counter; in expectation mode they count against
// sfo. full_gradient is required in finite-sum mode (exact anchor when the
// anchor batch reaches n) and by the variance probe.
struct StochasticObjective {
  std::function<void(const Vec& x, std::int64_t batch, RngState& rng, Vec& out)>
      sample_gradient;
  std::function<void(const Vec& a, const Vec& b, std::int64_t batch, RngState& rng,
                     Vec& grad_a, Vec& grad_b)>
      sample_gradient_pair;
  std::function<void(const Vec& x, Vec& out)> full_gradient;
  std::int64_t component_count = 0;
};

// Variance-reduced sliding schedule. The batch sizes are the ones the rate
// theorem prescribes and they are enormous; `scale` multiplies both batch
// sizes (recorded in run manifests when != 1) so experiments stay usable
// while theorem tests run unscaled on tiny-kappa fixtures.
struct IstorcSchedule {
  double smoothness = 1.0;        // L
  double strong_convexity = 1.0;  // mu
  double noise_bound = 0.0;       // sigma
  double diameter = 1.0;          // D of the feasible set
  std::int64_t epochs = 1;        // N
  double scale = 1.0;

  double kappa() const { return smoothness / strong_convexity; }
  std::int64_t inner_iters() const;              // M = ceil(4 sqrt(2 kappa))
  std::int64_t control_batch() const;            // S = 4800 M kappa, scaled, >= 1
  std::int64_t anchor_batch(std::int64_t t) const;  // Q_t, scaled, >= 1
  double mixing(std::int64_t k) const { return 2.0 / (k + 1); }
  double prox_weight(std::int64_t k) const { return 3.0 * smoothness / k; }
  double cndg_tol(std::int64_t t, std::int64_t k) const;

  // Exact stochastic-oracle cost of one full run; the counter tests compare
  // measured counts against this.
  std::int64_t predicted_sample_draws(std::int64_t clamp_n = 0) const;
};

// Epoch t halves the expected gap: E[h(x_bar_t) - h*] <= L D^2 / 2^{t+1}.
// Same epoch-count closure as the deterministic slider.
Vec istorc_minimize(const StochasticObjective& h, const FeasibleSet& set,
                    const Vec& x0, const IstorcSchedule& schedule, RngState& rng,
                    OracleCounters& counters);

// Monte-Carlo probe of the control-variate estimator
//   r = grad_S(point) - grad_S(anchor) + anchor_grad
// over `trials` independent batches of size S. When anchor_batch_q > 0 the
// anchor estimate is redrawn per trial with that many samples instead of
// using `anchor_grad`. Requires h.full_gradient.
struct EstimatorProbe {
  Vec mean_error;           // sample mean of r - grad h(point)
  Vec coord_variance;       // per-coordinate sample variance of r
  double second_moment;     // mean ||r - grad h(point)||^2
};
EstimatorProbe estimator_variance_probe(const StochasticObjective& h, const Vec& point,
                                        const Vec& anchor, const Vec& anchor_grad,
                                        std::int64_t batch_s, std::int64_t trials,
                                        RngState& rng, std::int64_t anchor_batch_q = 0);

}  // namespace sling
