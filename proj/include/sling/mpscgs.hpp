#pragma once

#include "sling/mpcgs.hpp"

namespace sling {

// Stochastic schedule: same mixing/prox weights as the batch slider, a
// tighter cndg tolerance, and the k^3-growing gradient batch P_k. `scale`
// multiplies P_k and the inner variance-reduction batches; theorem tests run
// scale = 1, experiment configs may lower it (recorded in manifests).
struct MpscgsSchedule {
  double smoothness = 1.0;
  double strong_concavity = 1.0;
  double noise_bound = 0.0;  // sigma
  double diameter_x = 1.0;
  std::int64_t iters = 0;
  double scale = 1.0;

  static MpscgsSchedule from(const ProblemConstants& c, std::int64_t iters,
                             double scale = 1.0) {
    return {c.smoothness, c.strong_concavity, c.noise_bound, c.diameter_x, iters, scale};
  }

  double kappa() const { return smoothness / strong_concavity; }
  double mixing(std::int64_t k) const { return 3.0 / (k + 2); }
  double prox_weight(std::int64_t k) const {
    return 6.0 * kappa() * smoothness / (k + 1);
  }
  double cndg_tol(std::int64_t k) const {
    const double d2 = diameter_x * diameter_x;
    return smoothness * d2 / (576.0 * static_cast<double>(k) * static_cast<double>(k + 1));
  }
  double inner_accuracy(std::int64_t k) const {
    const double d2 = diameter_x * diameter_x;
    return kappa() * smoothness * d2 /
           (static_cast<double>(k) * static_cast<double>(k + 1) * static_cast<double>(k + 2));
  }
  // P_k = ceil(96 sigma^2 (k+1)^3 / (kappa L^2 D_X^2)), scaled, >= 1
  std::int64_t batch_size(std::int64_t k) const;
  double theory_bound(std::int64_t k) const {
    const double d2 = diameter_x * diameter_x;
    return 12.0 * kappa() * smoothness * d2 /
           (static_cast<double>(k + 1) * static_cast<double>(k + 2));
  }
};

// Plan of one stochastic prox pass; the fixed-point tolerance carries the
// batch variance term sigma^2 / |P| and R comes from the squared-distance
// contraction.
ProxPlan plan_stochastic_prox_step(double gamma, double alpha, double zeta,
                                   double eps, double kappa, double smoothness,
                                   double diameter_x, double sigma,
                                   std::int64_t batch);

// One stochastic prox pass: the inner maximizer is the variance-reduced
// slider (fresh draws from rng), the v refinement uses the batch-averaged
// x-gradient over the SAME batch for every r. Counts |batch| sample draws
// per refinement plus whatever the inner maximizer draws.
ProxResult stochastic_prox_step(const SaddleProblem& f, const Vec& x0, const Vec& y0,
                                const Vec& z, const Vec& v, double gamma,
                                double alpha, double zeta, const SampleBatch& batch,
                                double eps, double scale, RngState& rng,
                                OracleCounters& counters);

SaddleSolution mpscgs_solve(const SaddleProblem& f, const Vec& x0, const Vec& y0,
                            const MpscgsSchedule& schedule, RngState& rng,
                            OracleCounters& counters, const TraceSink& sink = {});

// Exact stochastic-draw count (sfo in expectation form, ifo in finite-sum
// form with anchor clamping) of a full run under this schedule.
std::int64_t mpscgs_predicted_draws(const MpscgsSchedule& schedule, double diameter_y,
                                    std::int64_t finite_sum_n = 0);

}  // namespace sling
