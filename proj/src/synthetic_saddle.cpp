#include "sling/synthetic_saddle.hpp"

#include <cmath>

#include "sling/top_singular.hpp"

namespace sling {
namespace {

void clip_to_ball(Vec& y, double radius) {
  const double n = nrm2(y);
  if (n > radius) scal(radius / n, y);
}

class AdditiveNoiseBatch final : public SampleBatch {
 public:
  AdditiveNoiseBatch(const SyntheticSaddle& p, std::int64_t size, Vec noise_x)
      : problem_(p), size_(size), noise_x_(std::move(noise_x)) {}

  std::int64_t size() const override { return size_; }
  void grad_x_at(const Vec& x, const Vec& y, Vec& gx) const override {
    problem_.grad_x(x, y, gx);
    axpy(1.0, noise_x_, gx);
  }

 private:
  const SyntheticSaddle& problem_;
  std::int64_t size_;
  Vec noise_x_;  // batch-averaged noise, fixed at draw time
};

}  // namespace

SyntheticSaddle::SyntheticSaddle(DenseMatrix coupling, Vec linear_x, Vec y_center,
                                 double mu, double ball_radius, double sigma)
    : coupling_(std::move(coupling)),
      linear_x_(std::move(linear_x)),
      y_center_(std::move(y_center)),
      mu_(mu),
      sigma_(sigma),
      set_x_(FeasibleSet::simplex(coupling_.rows)),
      set_y_(FeasibleSet::l2_ball(coupling_.cols, ball_radius)) {
  if (linear_x_.size() != coupling_.rows || y_center_.size() != coupling_.cols)
    throw ArgumentError("SyntheticSaddle: shape mismatch");
  if (mu_ <= 0.0) throw ArgumentError("SyntheticSaddle: mu must be positive");
  if (!set_y_.contains(y_center_, 1e-12))
    throw ArgumentError("SyntheticSaddle: y_center outside the ball");

  double sigma1 = 0.0;
  if (nrm2sq(coupling_.data) > 0.0)
    sigma1 = top_singular_pair(coupling_, 1e-10, 10000, RngState(17)).sigma;
  constants_.smoothness = std::max(sigma1, mu_);
  constants_.strong_concavity = mu_;
  constants_.noise_bound = sigma_;
  constants_.diameter_x = set_x_.diameter();
  constants_.diameter_y = set_y_.diameter();
  constants_.validate();
}

double SyntheticSaddle::value(const Vec& x, const Vec& y) const {
  Vec ay(coupling_.rows);
  coupling_.apply(y, ay);
  double quad = 0.0;
  for (std::size_t j = 0; j < y.size(); ++j) {
    const double d = y[j] - y_center_[j];
    quad += d * d;
  }
  return dot(linear_x_, x) + dot(x, ay) - 0.5 * mu_ * quad;
}

void SyntheticSaddle::grad_x(const Vec& x, const Vec& y, Vec& gx) const {
  coupling_.apply(y, gx);
  axpy(1.0, linear_x_, gx);
  (void)x;
}

void SyntheticSaddle::grad_y(const Vec& x, const Vec& y, Vec& gy) const {
  coupling_.apply_transpose(x, gy);
  axpy(-mu_, y, gy);
  axpy(mu_, y_center_, gy);
}

bool SyntheticSaddle::max_y_closed_form(const Vec& x, Vec& y_star) const {
  coupling_.apply_transpose(x, y_star);
  scal(1.0 / mu_, y_star);
  axpy(1.0, y_center_, y_star);
  clip_to_ball(y_star, set_y_.radius());
  return true;
}

double SyntheticSaddle::coord_noise_std() const {
  return sigma_ / std::sqrt(static_cast<double>(coupling_.rows + coupling_.cols));
}

std::unique_ptr<SampleBatch> SyntheticSaddle::draw_batch(std::int64_t size,
                                                         RngState& rng) const {
  if (size <= 0) throw ArgumentError("draw_batch: batch must be positive");
  // average of `size` i.i.d. Gaussian noises == one Gaussian at reduced std
  const double std = coord_noise_std() / std::sqrt(static_cast<double>(size));
  Vec noise(coupling_.rows);
  for (double& v : noise) v = std * rng.normal();
  return std::make_unique<AdditiveNoiseBatch>(*this, size, std::move(noise));
}

StochasticObjective SyntheticSaddle::stochastic_neg_y_objective(const Vec& x) const {
  StochasticObjective h;
  const std::size_t dy = coupling_.cols;
  const double coord_std = coord_noise_std();

  h.full_gradient = [this, x](const Vec& y, Vec& out) {
    grad_y(x, y, out);
    scal(-1.0, out);
  };
  h.sample_gradient = [this, x, dy, coord_std](const Vec& y, std::int64_t batch,
                                               RngState& rng, Vec& out) {
    grad_y(x, y, out);
    scal(-1.0, out);
    const double std = coord_std / std::sqrt(static_cast<double>(batch));
    for (std::size_t j = 0; j < dy; ++j) out[j] -= std * rng.normal();
  };
  h.sample_gradient_pair = [this, x, dy, coord_std](const Vec& a, const Vec& b,
                                                    std::int64_t batch, RngState& rng,
                                                    Vec& ga, Vec& gb) {
    grad_y(x, a, ga);
    scal(-1.0, ga);
    grad_y(x, b, gb);
    scal(-1.0, gb);
    // additive noise: the same draws hit both points, so the difference
    // ga - gb is exact and only the shared offset is random
    const double std = coord_std / std::sqrt(static_cast<double>(batch));
    for (std::size_t j = 0; j < dy; ++j) {
      const double m = std * rng.normal();
      ga[j] -= m;
      gb[j] -= m;
    }
  };
  h.component_count = 0;
  return h;
}

SyntheticSaddle synthetic_make(std::uint64_t seed, std::size_t dx, std::size_t dy,
                               double target_kappa, double sigma) {
  if (target_kappa < 1.0) throw ArgumentError("synthetic_make: target_kappa >= 1 required");
  if (dx == 0 || dy == 0) throw ArgumentError("synthetic_make: empty dimensions");
  RngState rng(seed);

  constexpr double mu = 1.0;
  // Rank-1 layer with uniform rows plus a random layer; the uniform layer
  // keeps max row norm close to s1/sqrt(dx), which keeps the y-ball (and with
  // it D_Y) small relative to D_X.
  DenseMatrix a(dx, dy);
  Vec q(dy);
  for (double& v : q) v = rng.normal();
  scal(1.0 / nrm2(q), q);
  for (std::size_t i = 0; i < dx; ++i)
    for (std::size_t j = 0; j < dy; ++j)
      a.at(i, j) = q[j] / std::sqrt(static_cast<double>(dx)) + 0.35 * rng.normal();

  const double s1 = top_singular_pair(a, 1e-10, 10000, rng.split(1)).sigma;
  scal(target_kappa * mu / s1, a.data);

  double max_row = 0.0;
  for (std::size_t i = 0; i < dx; ++i)
    max_row = std::max(max_row, std::sqrt(kernels().nrm2sq(a.row(i), dy)));

  // y*(x) = A^T x / mu stays strictly inside the ball for every simplex x
  const double radius = 1.3 * max_row / mu;
  Vec y_center(dy, 0.0);

  // Stationary saddle at the barycenter: c = -A y_hat kills grad_x there.
  Vec x_hat(dx, 1.0 / static_cast<double>(dx));
  Vec y_hat(dy);
  a.apply_transpose(x_hat, y_hat);
  scal(1.0 / mu, y_hat);
  Vec c(dx);
  a.apply(y_hat, c);
  scal(-1.0, c);

  SyntheticSaddle p(std::move(a), std::move(c), std::move(y_center), mu, radius, sigma);
  p.set_designed_saddle({std::move(x_hat), std::move(y_hat)});
  return p;
}

}  // namespace sling
