#pragma once

#include <vector>

#include "sling/metrics.hpp"
#include "sling/saddle_problem.hpp"
#include "sling/trace.hpp"

namespace sling {

// Rate-theorem schedule for the batch mirror-prox slider. All four knobs
// depend only on (L, mu, D_X) and the iteration index.
struct MpcgsSchedule {
  double smoothness = 1.0;        // L
  double strong_concavity = 1.0;  // mu
  double diameter_x = 1.0;        // D_X
  std::int64_t iters = 0;         // N

  static MpcgsSchedule from(const ProblemConstants& c, std::int64_t iters) {
    return {c.smoothness, c.strong_concavity, c.diameter_x, iters};
  }

  double kappa() const { return smoothness / strong_concavity; }
  double mixing(std::int64_t k) const { return 3.0 / (k + 2); }  // gamma_k
  double prox_weight(std::int64_t k) const {                     // alpha_k
    return 6.0 * kappa() * smoothness / (k + 1);
  }
  double cndg_tol(std::int64_t k) const {  // zeta_k
    const double d2 = diameter_x * diameter_x;
    return smoothness * d2 / (384.0 * static_cast<double>(k) * static_cast<double>(k + 1));
  }
  double inner_accuracy(std::int64_t k) const {  // eps_k
    const double d2 = diameter_x * diameter_x;
    return kappa() * smoothness * d2 /
           (static_cast<double>(k) * static_cast<double>(k + 1) * static_cast<double>(k + 2));
  }
  // guaranteed primal-dual gap after k iterations
  double theory_bound(std::int64_t k) const {
    const double d2 = diameter_x * diameter_x;
    return 11.0 * kappa() * smoothness * d2 /
           (static_cast<double>(k + 1) * static_cast<double>(k + 2));
  }
};

// Resolved constants of one prox call: target accuracy for the inner
// maximizer, the fixed-point tolerance, and the refinement count R.
struct ProxPlan {
  double inner_target = 0.0;      // eps_cgs = eps / (64 kappa)
  double fixed_point_tol = 0.0;   // eps_mp
  std::int64_t refinements = 1;   // R >= 1
};
ProxPlan plan_prox_step(double gamma, double alpha, double zeta, double eps,
                        double kappa, double smoothness, double diameter_x);

struct ProxResult {
  Vec x, y, v;
  // ||x_r - x_{r-1}|| for r = 1..R; the fixed-point contraction check reads
  // successive entries
  std::vector<double> step_distances;
};

// One proximal fixed-point pass: R rounds of (inner maximizer to eps_cgs
// accuracy from the given y0, one cndg refinement of v against the fixed z,
// mix x toward v). z and v never move inside the pass; x0 stays the mixing
// anchor. warm_start_y restarts the inner maximizer from the previous y_r
// instead of y0 (an off-by-default deviation recorded by the CLI manifest).
ProxResult prox_step(const SaddleProblem& f, const Vec& x0, const Vec& y0,
                     const Vec& z, const Vec& v, double gamma, double alpha,
                     double zeta, double eps, OracleCounters& counters,
                     bool warm_start_y = false);

struct SaddleSolution {
  Vec x;                           // last primal iterate
  Vec y_avg;                       // weighted dual average
  std::vector<TraceRecord> trace;  // one record per outer iteration
};

// Batch solver. Emits one TraceRecord per iteration (gap measured at
// (x_k, y_avg_k) with scratch counters and paused wall clock, so traces
// reflect solver cost only). iters = 0 returns the inputs untouched.
SaddleSolution mpcgs_solve(const SaddleProblem& f, const Vec& x0, const Vec& y0,
                           const MpcgsSchedule& schedule, OracleCounters& counters,
                           const TraceSink& sink = {}, bool warm_start_y = false);

// Exact FO count of a full run under this schedule (the counter tests pin
// measured counts to this formula).
std::int64_t mpcgs_predicted_fo(const MpcgsSchedule& schedule, double diameter_y);

// Normalized dual-averaging weights at outer iteration k: entry s-1 is
// 3 s(s+1) / (k(k+1)(k+2)), the weight of y_s in y_avg_k. They sum to one.
std::vector<double> dual_average_weights(std::int64_t k);

}  // namespace sling
