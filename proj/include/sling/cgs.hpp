#pragma once

#include <functional>

#include "sling/cndg.hpp"

namespace sling {

// Minimization objective handed to cgs_minimize: a gradient closure (each
// call is one FO tick, counted by the solver).
struct SmoothObjective {
  std::function<void(const Vec& x, Vec& grad_out)> gradient;
};

// Schedule of the sliding method for an L-smooth, mu-strongly-convex
// objective. Each outer epoch halves the optimality gap starting from
// initial_gap, so epochs_for_accuracy picks the epoch count for a target.
struct CgsSchedule {
  double smoothness = 1.0;        // L
  double strong_convexity = 1.0;  // mu
  std::int64_t epochs = 1;        // N
  double initial_gap = 1.0;       // delta0 >= h(x0) - h*

  std::int64_t inner_iters() const;  // M = ceil(sqrt(24 L / mu))
  double mixing(std::int64_t k) const { return 2.0 / (k + 1); }             // lambda_k
  double prox_weight(std::int64_t k) const { return 2.0 * smoothness / k; } // beta_k
  double cndg_tol(std::int64_t t, std::int64_t k) const;                    // eta_{t,k}
};

// Epochs needed so that halving from delta0 reaches accuracy: the smallest N
// with delta0 * 2^-N <= accuracy (0 when already satisfied).
std::int64_t cgs_epochs_for(double accuracy, double delta0);

// Smoothness-based default for the initial gap when the caller starts from
// an arbitrary feasible point: L * diam^2 / 2.
double cgs_default_initial_gap(double smoothness, double diameter);

// Sliding minimization: accelerated outer steps whose projections are
// replaced by cndg calls. Exactly one FO call per inner step, N*M total.
// epochs = 0 returns x0 untouched.
Vec cgs_minimize(const SmoothObjective& h, const FeasibleSet& set, const Vec& x0,
                 const CgsSchedule& schedule, OracleCounters& counters);

}  // namespace sling
