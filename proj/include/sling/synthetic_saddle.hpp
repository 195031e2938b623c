#pragma once

#include <optional>

#include "sling/saddle_problem.hpp"

namespace sling {

// Theorem-check fixture with every constant known in closed form:
//
//     f(x, y) = c.x + x^T A y - (mu/2) ||y - y0||^2
//
// over X = simplex(dx), Y = l2 ball(dy, radius). The inner maximizer is
// y*(x) = clip-to-ball(y0 + A^T x / mu), f(., y) is linear, L = max(s1(A), mu)
// and kappa = L/mu, so rate bounds can be asserted against an exact gap
// oracle. The stochastic variant adds i.i.d. Gaussian noise to every sampled
// gradient with E||noise||^2 = sigma^2 exactly; batch averages are drawn
// directly at their reduced deviation, which is distribution-exact for
// additive noise and keeps huge theorem batch sizes affordable.
class SyntheticSaddle final : public SaddleProblem {
 public:
  SyntheticSaddle(DenseMatrix coupling, Vec linear_x, Vec y_center, double mu,
                  double ball_radius, double sigma = 0.0);

  double value(const Vec& x, const Vec& y) const override;
  void grad_x(const Vec& x, const Vec& y, Vec& gx) const override;
  void grad_y(const Vec& x, const Vec& y, Vec& gy) const override;

  const FeasibleSet& set_x() const override { return set_x_; }
  const FeasibleSet& set_y() const override { return set_y_; }
  const ProblemConstants& constants() const override { return constants_; }

  bool max_y_closed_form(const Vec& x, Vec& y_star) const override;
  bool linear_in_x() const override { return true; }

  // The stochastic surface always exists; sigma = 0 just makes the noise
  // degenerate, which the zero-variance tests rely on.
  bool stochastic() const override { return true; }
  std::unique_ptr<SampleBatch> draw_batch(std::int64_t size, RngState& rng) const override;
  StochasticObjective stochastic_neg_y_objective(const Vec& x) const override;
  bool analytic_constants() const override { return true; }

  const DenseMatrix& coupling() const { return coupling_; }
  double mu() const { return mu_; }

  // Saddle point built into the instance by synthetic_make (stationary in
  // both blocks); absent for hand-rolled instances.
  const std::optional<PrimalDualPoint>& designed_saddle() const { return saddle_; }
  void set_designed_saddle(PrimalDualPoint p) { saddle_ = std::move(p); }

 private:
  double coord_noise_std() const;  // per-coordinate std of the additive noise

  DenseMatrix coupling_;  // dx x dy
  Vec linear_x_;          // c
  Vec y_center_;          // y0
  double mu_;
  double sigma_;
  FeasibleSet set_x_;
  FeasibleSet set_y_;
  ProblemConstants constants_;
  std::optional<PrimalDualPoint> saddle_;
};

// Random instance with measured kappa equal to target_kappa (A is rescaled so
// s1(A) = target_kappa * mu), an interior inner maximizer for every x in the
// simplex, and an interior stationary saddle (barycenter in x) cached on the
// instance.
SyntheticSaddle synthetic_make(std::uint64_t seed, std::size_t dx, std::size_t dy,
                               double target_kappa, double sigma = 0.0);

}  // namespace sling
