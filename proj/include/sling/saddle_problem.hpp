#pragma once

#include <memory>

#include "sling/cgs.hpp"
#include "sling/feasible_set.hpp"
#include "sling/istorc.hpp"
#include "sling/rng.hpp"

namespace sling {

// Constants of the smoothness/concavity assumptions that every schedule is
// built from. Invariant: L >= mu > 0, sigma >= 0.
struct ProblemConstants {
  double smoothness = 1.0;        // L
  double strong_concavity = 1.0;  // mu of f(x, .)
  double noise_bound = 0.0;       // sigma
  double diameter_x = 1.0;        // D_X
  double diameter_y = 1.0;        // D_Y

  double kappa() const { return smoothness / strong_concavity; }
  void validate() const;
};

struct PrimalDualPoint {
  Vec x;
  Vec y;
};

// A batch of samples drawn once and then evaluated at several points (the
// stochastic prox step reuses one batch for every inner refinement).
class SampleBatch {
 public:
  virtual ~SampleBatch() = default;
  virtual std::int64_t size() const = 0;
  // batch-averaged partial x-gradient at (x, y)
  virtual void grad_x_at(const Vec& x, const Vec& y, Vec& gx) const = 0;
};

// Convex-strongly-concave saddle objective f(x, y) over set_x() x set_y().
// Evaluations are const and pure; oracle accounting is done by the solvers.
class SaddleProblem {
 public:
  virtual ~SaddleProblem() = default;

  virtual double value(const Vec& x, const Vec& y) const = 0;
  virtual void grad_x(const Vec& x, const Vec& y, Vec& gx) const = 0;
  virtual void grad_y(const Vec& x, const Vec& y, Vec& gy) const = 0;

  virtual const FeasibleSet& set_x() const = 0;
  virtual const FeasibleSet& set_y() const = 0;
  virtual const ProblemConstants& constants() const = 0;

  // --- stochastic surface (throws for purely deterministic problems) ---
  virtual bool stochastic() const { return false; }
  // n in finite-sum form, 0 in expectation form
  virtual std::int64_t sample_count() const { return 0; }
  virtual std::unique_ptr<SampleBatch> draw_batch(std::int64_t size, RngState& rng) const;
  // objective -f(x, .) over set_y for the inner stochastic maximizer
  virtual StochasticObjective stochastic_neg_y_objective(const Vec& x) const;
  // joint gradient of one finite-sum component (throws in expectation form)
  virtual void component_grad(const Vec& x, const Vec& y, std::int64_t i, Vec& gx,
                              Vec& gy) const;
  // true when constants() is exact by construction, so estimation is a no-op
  virtual bool analytic_constants() const { return false; }

  // objective -f(x, .) over set_y for the inner deterministic maximizer;
  // problems override this when a fixed x lets them precompute (the robust
  // loss vector, say) so repeated inner gradients stop paying full passes
  virtual SmoothObjective neg_y_objective(const Vec& x) const;

  // --- optional exact structure used by the desk-scale gap oracle ---
  // closed-form argmax_y f(x, .); false when unavailable
  virtual bool max_y_closed_form(const Vec& /*x*/, Vec& /*y_star*/) const {
    return false;
  }
  // f(., y) linear in x, so min_x is one LO call
  virtual bool linear_in_x() const { return false; }
};

}  // namespace sling
