#include "sling/saddle_problem.hpp"

namespace sling {

void ProblemConstants::validate() const {
  if (!(strong_concavity > 0.0) || smoothness < strong_concavity)
    throw ArgumentError("ProblemConstants: need L >= mu > 0");
  if (noise_bound < 0.0) throw ArgumentError("ProblemConstants: sigma >= 0");
  if (!(diameter_x > 0.0) || !(diameter_y > 0.0))
    throw ArgumentError("ProblemConstants: diameters must be positive");
}

std::unique_ptr<SampleBatch> SaddleProblem::draw_batch(std::int64_t, RngState&) const {
  throw ArgumentError("draw_batch: problem has no stochastic oracle");
}

StochasticObjective SaddleProblem::stochastic_neg_y_objective(const Vec&) const {
  throw ArgumentError("stochastic_neg_y_objective: problem has no stochastic oracle");
}

void SaddleProblem::component_grad(const Vec&, const Vec&, std::int64_t, Vec&, Vec&) const {
  throw ArgumentError("component_grad: problem is not in finite-sum form");
}

SmoothObjective SaddleProblem::neg_y_objective(const Vec& x) const {
  SmoothObjective h;
  h.gradient = [this, x](const Vec& y, Vec& out) {
    grad_y(x, y, out);
    scal(-1.0, out);
  };
  return h;
}

}  // namespace sling
