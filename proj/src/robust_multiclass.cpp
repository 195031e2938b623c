#include "sling/robust_multiclass.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace sling {
namespace {

// Euclidean projection onto the probability simplex (sort-based).
void project_simplex(Vec& v) {
  const std::size_t n = v.size();
  Vec u = v;
  std::sort(u.begin(), u.end(), std::greater<double>());
  double cum = 0.0, theta = 0.0;
  std::size_t rho = 0;
  for (std::size_t i = 0; i < n; ++i) {
    cum += u[i];
    const double t = (cum - 1.0) / static_cast<double>(i + 1);
    if (u[i] - t > 0.0) {
      rho = i + 1;
      theta = t;
    }
  }
  (void)rho;
  for (double& x : v) x = std::max(0.0, x - theta);
}

class ComponentBatch final : public SampleBatch {
 public:
  ComponentBatch(const RobustMulticlass& p, std::vector<std::int64_t> indices)
      : problem_(p), indices_(std::move(indices)) {}

  std::int64_t size() const override {
    return static_cast<std::int64_t>(indices_.size());
  }
  void grad_x_at(const Vec& w, const Vec& y, Vec& gw) const override {
    Vec gy_unused;
    problem_.batch_grad(w, y, indices_, gw, gy_unused);
  }

 private:
  const RobustMulticlass& problem_;
  std::vector<std::int64_t> indices_;
};

}  // namespace

RobustMulticlass::RobustMulticlass(Dataset data, double tau, double lambda)
    : data_(std::move(data)),
      tau_(tau),
      lambda_(lambda),
      set_x_(FeasibleSet::nuclear_ball(static_cast<std::size_t>(data_.h()),
                                       static_cast<std::size_t>(data_.d()), tau)),
      set_y_(FeasibleSet::simplex(static_cast<std::size_t>(data_.n()))) {
  if (data_.n() <= 0) throw ArgumentError("RobustMulticlass: empty dataset");
  if (lambda_ <= 0.0) throw ArgumentError("RobustMulticlass: lambda must be positive");
  const std::int64_t h = data_.h();
  for (std::int32_t b : data_.labels)
    if (b < 0 || b >= h) throw ArgumentError("RobustMulticlass: label out of range");

  const double n = static_cast<double>(data_.n());
  double max_norm2 = 0.0;
  for (std::size_t i = 0; i < data_.features.rows; ++i)
    max_norm2 = std::max(max_norm2, data_.features.row_nrm2sq(i));

  constants_.strong_concavity = lambda_ * n * n;
  // Safe analytic smoothness bound: the x-block of the weighted logistic
  // losses plus the x/y coupling through the per-sample loss gradients.
  const double hx = static_cast<double>(h) * max_norm2;
  const double cross = std::sqrt(2.0 * n * max_norm2);
  constants_.smoothness = std::max(constants_.strong_concavity, hx + cross);
  constants_.noise_bound = 0.0;  // filled by estimate_constants when needed
  constants_.diameter_x = set_x_.diameter();
  constants_.diameter_y = set_y_.diameter();
  constants_.validate();
}

void RobustMulticlass::set_smoothness(double smoothness, double noise_bound) {
  constants_.smoothness = std::max(smoothness, constants_.strong_concavity);
  constants_.noise_bound = noise_bound;
  constants_.validate();
}

double RobustMulticlass::sample_softmax(const Vec& w, std::size_t i, Vec& weights) const {
  const std::size_t h = static_cast<std::size_t>(data_.h());
  const std::size_t d = static_cast<std::size_t>(data_.d());
  const std::size_t b = static_cast<std::size_t>(data_.labels[i]);

  weights.assign(h, 0.0);
  double tb = 0.0;
  Vec t(h);
  for (std::size_t j = 0; j < h; ++j) {
    double s = 0.0;
    const double* wj = w.data() + j * d;
    for (std::size_t k = data_.features.row_start[i]; k < data_.features.row_start[i + 1]; ++k)
      s += data_.features.val[k] * wj[data_.features.idx[k]];
    t[j] = s;
    if (j == b) tb = s;
  }

  // stable log(1 + sum_{j != b} exp(t_j - t_b))
  double m = 0.0;  // max(0, margins)
  for (std::size_t j = 0; j < h; ++j)
    if (j != b) m = std::max(m, t[j] - tb);
  double denom = std::exp(-m);
  for (std::size_t j = 0; j < h; ++j)
    if (j != b) denom += std::exp(t[j] - tb - m);
  const double loss = m + std::log(denom);

  double total = 0.0;
  for (std::size_t j = 0; j < h; ++j) {
    if (j == b) continue;
    weights[j] = std::exp(t[j] - tb - m) / denom;
    total += weights[j];
  }
  weights[b] = -total;
  return loss;
}

void RobustMulticlass::losses(const Vec& w, Vec& out) const {
  const std::size_t n = data_.features.rows;
  out.resize(n);
  Vec weights;
  for (std::size_t i = 0; i < n; ++i) out[i] = sample_softmax(w, i, weights);
}

double RobustMulticlass::value(const Vec& w, const Vec& y) const {
  const double n = static_cast<double>(data_.n());
  Vec weights;
  double v = 0.0;
  for (std::size_t i = 0; i < data_.features.rows; ++i)
    v += y[i] * sample_softmax(w, i, weights);
  double reg = 0.0;
  for (std::size_t i = 0; i < data_.features.rows; ++i) {
    const double r = n * y[i] - 1.0;
    reg += r * r;
  }
  return v - 0.5 * lambda_ * reg;
}

void RobustMulticlass::grad_x(const Vec& w, const Vec& y, Vec& gw) const {
  const std::size_t d = static_cast<std::size_t>(data_.d());
  const std::size_t h = static_cast<std::size_t>(data_.h());
  gw.assign(h * d, 0.0);
  Vec weights;
  for (std::size_t i = 0; i < data_.features.rows; ++i) {
    if (y[i] == 0.0) continue;
    sample_softmax(w, i, weights);
    for (std::size_t j = 0; j < h; ++j) {
      const double coef = y[i] * weights[j];
      if (coef != 0.0) data_.features.add_row(i, coef, gw.data() + j * d);
    }
  }
}

void RobustMulticlass::grad_y(const Vec& w, const Vec& y, Vec& gy) const {
  const double n = static_cast<double>(data_.n());
  losses(w, gy);
  for (std::size_t i = 0; i < gy.size(); ++i)
    gy[i] -= lambda_ * n * (n * y[i] - 1.0);
}

void RobustMulticlass::batch_grad(const Vec& w, const Vec& y,
                                  std::span<const std::int64_t> indices, Vec& gw,
                                  Vec& gy) const {
  if (indices.empty()) throw ArgumentError("batch_grad: empty index set");
  const double n = static_cast<double>(data_.n());
  const std::size_t d = static_cast<std::size_t>(data_.d());
  const std::size_t h = static_cast<std::size_t>(data_.h());
  const double inv = 1.0 / static_cast<double>(indices.size());

  gw.assign(h * d, 0.0);
  gy.assign(data_.features.rows, 0.0);
  Vec weights;
  for (std::int64_t raw : indices) {
    if (raw < 0 || raw >= data_.n()) throw ArgumentError("batch_grad: index out of range");
    const std::size_t i = static_cast<std::size_t>(raw);
    const double loss = sample_softmax(w, i, weights);
    // F_i carries the i-th loss scaled by n plus the full regularizer
    for (std::size_t j = 0; j < h; ++j) {
      const double coef = inv * n * y[i] * weights[j];
      if (coef != 0.0) data_.features.add_row(i, coef, gw.data() + j * d);
    }
    gy[i] += inv * n * loss;
  }
  for (std::size_t i = 0; i < gy.size(); ++i)
    gy[i] -= lambda_ * n * (n * y[i] - 1.0);
}

std::unique_ptr<SampleBatch> RobustMulticlass::draw_batch(std::int64_t size,
                                                          RngState& rng) const {
  if (size <= 0) throw ArgumentError("draw_batch: batch must be positive");
  std::vector<std::int64_t> idx(static_cast<std::size_t>(size));
  for (auto& i : idx) i = rng.uniform_int(data_.n());
  return std::make_unique<ComponentBatch>(*this, std::move(idx));
}

SmoothObjective RobustMulticlass::neg_y_objective(const Vec& w) const {
  auto loss = std::make_shared<Vec>();
  losses(w, *loss);
  const double n = static_cast<double>(data_.n());
  const double lam = lambda_;
  SmoothObjective h;
  h.gradient = [loss, n, lam](const Vec& y, Vec& out) {
    out.resize(loss->size());
    for (std::size_t i = 0; i < out.size(); ++i)
      out[i] = -(*loss)[i] + lam * n * (n * y[i] - 1.0);
  };
  return h;
}

StochasticObjective RobustMulticlass::stochastic_neg_y_objective(const Vec& w) const {
  StochasticObjective h;
  // the stochastic part of grad_y F_i depends on w only; freeze the losses
  auto loss = std::make_shared<Vec>();
  losses(w, *loss);
  const double n = static_cast<double>(data_.n());
  const double lam = lambda_;

  h.full_gradient = [loss, n, lam](const Vec& y, Vec& out) {
    out.resize(loss->size());
    for (std::size_t i = 0; i < out.size(); ++i)
      out[i] = -(*loss)[i] + lam * n * (n * y[i] - 1.0);
  };
  h.sample_gradient = [loss, n, lam](const Vec& y, std::int64_t batch, RngState& rng,
                                     Vec& out) {
    out.assign(loss->size(), 0.0);
    const double inv = n / static_cast<double>(batch);
    for (std::int64_t j = 0; j < batch; ++j) {
      const std::int64_t i = rng.uniform_int(static_cast<std::int64_t>(loss->size()));
      out[static_cast<std::size_t>(i)] -= inv * (*loss)[static_cast<std::size_t>(i)];
    }
    for (std::size_t i = 0; i < out.size(); ++i)
      out[i] += lam * n * (n * y[i] - 1.0);
  };
  h.sample_gradient_pair = [loss, n, lam](const Vec& a, const Vec& b,
                                          std::int64_t batch, RngState& rng, Vec& ga,
                                          Vec& gb) {
    // one index stream, evaluated at both points
    ga.assign(loss->size(), 0.0);
    const double inv = n / static_cast<double>(batch);
    for (std::int64_t j = 0; j < batch; ++j) {
      const std::int64_t i = rng.uniform_int(static_cast<std::int64_t>(loss->size()));
      ga[static_cast<std::size_t>(i)] -= inv * (*loss)[static_cast<std::size_t>(i)];
    }
    gb = ga;
    for (std::size_t i = 0; i < ga.size(); ++i) {
      ga[i] += lam * n * (n * a[i] - 1.0);
      gb[i] += lam * n * (n * b[i] - 1.0);
    }
  };
  h.component_count = data_.n();
  return h;
}

bool RobustMulticlass::max_y_closed_form(const Vec& w, Vec& y_star) const {
  const double n = static_cast<double>(data_.n());
  losses(w, y_star);
  const double mu = lambda_ * n * n;
  for (double& v : y_star) v = v / mu;
  for (std::size_t i = 0; i < y_star.size(); ++i) y_star[i] += 1.0 / n;
  project_simplex(y_star);
  return true;
}

}  // namespace sling
