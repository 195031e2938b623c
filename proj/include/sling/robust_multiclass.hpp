#pragma once

#include <span>

#include "sling/dataset.hpp"
#include "sling/saddle_problem.hpp"

namespace sling {

// Robust multiclass classification: the dual weights y live on the simplex
// and re-weight per-sample multivariate logistic losses of a nuclear-norm-
// bounded linear predictor W (h x d, flattened row-major):
//
//   f(W, y) = sum_i y_i * loss_i(W) - (lambda/2) ||n y - 1||^2
//   loss_i(W) = log(1 + sum_{j != b_i} exp(w_j.a_i - w_{b_i}.a_i))
//
// Finite-sum form: F_i scales the i-th loss term by n and keeps the full
// (deterministic) regularizer, so uniform component draws are unbiased.
// The y-block is an exact quadratic, hence mu = lambda * n^2.
class RobustMulticlass final : public SaddleProblem {
 public:
  RobustMulticlass(Dataset data, double tau, double lambda);

  double value(const Vec& w, const Vec& y) const override;
  void grad_x(const Vec& w, const Vec& y, Vec& gw) const override;
  void grad_y(const Vec& w, const Vec& y, Vec& gy) const override;

  // batch-averaged component gradients; indices may repeat (draws are with
  // replacement), empty indices are an error
  void batch_grad(const Vec& w, const Vec& y, std::span<const std::int64_t> indices,
                  Vec& gw, Vec& gy) const;

  const FeasibleSet& set_x() const override { return set_x_; }
  const FeasibleSet& set_y() const override { return set_y_; }
  const ProblemConstants& constants() const override { return constants_; }

  bool stochastic() const override { return true; }
  std::int64_t sample_count() const override { return data_.n(); }
  std::unique_ptr<SampleBatch> draw_batch(std::int64_t size, RngState& rng) const override;
  StochasticObjective stochastic_neg_y_objective(const Vec& x) const override;
  void component_grad(const Vec& w, const Vec& y, std::int64_t i, Vec& gw,
                      Vec& gy) const override {
    const std::int64_t idx[1] = {i};
    batch_grad(w, y, idx, gw, gy);
  }

  // f(W, .) is an exact quadratic: its maximizer over the simplex is a
  // Euclidean projection, computed here in closed form (desk-scale oracle
  // support, not a solver path).
  bool max_y_closed_form(const Vec& w, Vec& y_star) const override;

  // losses(W) are independent of y, so the inner maximizer's gradients reuse
  // one precomputed loss vector instead of a full data pass per call
  SmoothObjective neg_y_objective(const Vec& w) const override;

  const Dataset& data() const { return data_; }
  double tau() const { return tau_; }
  double lambda() const { return lambda_; }

  // per-sample losses at W; size n
  void losses(const Vec& w, Vec& out) const;

  // Fill smoothness/noise constants from an empirical probe (mu and the
  // diameters are analytic). Called by estimate_constants.
  void set_smoothness(double smoothness, double noise_bound);

 private:
  // softmax weights s_ij over j != b_i for one sample; returns loss_i
  double sample_softmax(const Vec& w, std::size_t i, Vec& weights) const;

  Dataset data_;
  double tau_, lambda_;
  FeasibleSet set_x_;
  FeasibleSet set_y_;
  ProblemConstants constants_;
};

}  // namespace sling
