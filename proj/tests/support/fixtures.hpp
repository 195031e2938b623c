// Shared test fixtures: a heterogeneous finite-sum quadratic with analytic
// constants and a synthetic sparse classification dataset generator.
#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include "sling/dataset.hpp"
#include "sling/istorc.hpp"
#include "sling/rng.hpp"

namespace sling::testing {

// h_i(x) = 0.5 q_i ||x - c_i||^2 averaged over i
struct FiniteSumQuadratic {
  std::vector<double> scales;
  std::vector<Vec> centers;
  std::size_t dim = 0;

  std::int64_t n() const { return static_cast<std::int64_t>(scales.size()); }
  double smoothness() const {
    double m = 0.0;
    for (double q : scales) m = std::max(m, q);
    return m;
  }
  double strong_convexity() const {
    double s = 0.0;
    for (double q : scales) s += q;
    return s / static_cast<double>(scales.size());
  }
  void component_gradient(std::int64_t i, const Vec& x, Vec& g) const {
    const auto ui = static_cast<std::size_t>(i);
    g.resize(dim);
    combine(g, scales[ui], x, -scales[ui], centers[ui]);
  }
  void full_gradient(const Vec& x, Vec& g) const {
    g.assign(dim, 0.0);
    Vec tmp(dim);
    for (std::int64_t i = 0; i < n(); ++i) {
      component_gradient(i, x, tmp);
      axpy(1.0 / static_cast<double>(n()), tmp, g);
    }
  }
  double value(const Vec& x) const {
    double v = 0.0;
    for (std::int64_t i = 0; i < n(); ++i) {
      const auto ui = static_cast<std::size_t>(i);
      v += 0.5 * scales[ui] * kernels().dist2sq(x.data(), centers[ui].data(), dim);
    }
    return v / static_cast<double>(n());
  }
  // sup over the simplex of E_i ||grad_i - grad||^2; affine in x so the max
  // sits at a vertex, checked exactly over all vertices
  double sigma_on_simplex() const {
    double worst = 0.0;
    Vec x(dim, 0.0), gi(dim), g(dim);
    for (std::size_t v = 0; v < dim; ++v) {
      x.assign(dim, 0.0);
      x[v] = 1.0;
      full_gradient(x, g);
      double acc = 0.0;
      for (std::int64_t i = 0; i < n(); ++i) {
        component_gradient(i, x, gi);
        acc += kernels().dist2sq(gi.data(), g.data(), dim);
      }
      worst = std::max(worst, acc / static_cast<double>(n()));
    }
    return std::sqrt(worst);
  }

  StochasticObjective objective() const {
    StochasticObjective h;
    h.component_count = n();
    h.full_gradient = [this](const Vec& x, Vec& out) { full_gradient(x, out); };
    h.sample_gradient = [this](const Vec& x, std::int64_t batch, RngState& rng,
                               Vec& out) {
      out.assign(dim, 0.0);
      Vec tmp(dim);
      const double inv = 1.0 / static_cast<double>(batch);
      for (std::int64_t j = 0; j < batch; ++j) {
        component_gradient(rng.uniform_int(n()), x, tmp);
        axpy(inv, tmp, out);
      }
    };
    h.sample_gradient_pair = [this](const Vec& a, const Vec& b, std::int64_t batch,
                                    RngState& rng, Vec& ga, Vec& gb) {
      ga.assign(dim, 0.0);
      gb.assign(dim, 0.0);
      Vec tmp(dim);
      const double inv = 1.0 / static_cast<double>(batch);
      for (std::int64_t j = 0; j < batch; ++j) {
        const std::int64_t i = rng.uniform_int(n());
        component_gradient(i, a, tmp);
        axpy(inv, tmp, ga);
        component_gradient(i, b, tmp);
        axpy(inv, tmp, gb);
      }
    };
    return h;
  }
};

inline FiniteSumQuadratic make_finite_sum_quadratic(std::uint64_t seed, std::size_t dim,
                                                    std::int64_t n,
                                                    double scale_spread) {
  RngState rng(seed);
  FiniteSumQuadratic f;
  f.dim = dim;
  for (std::int64_t i = 0; i < n; ++i) {
    f.scales.push_back(1.0 + scale_spread * rng.uniform());
    Vec c(dim);
    for (double& x : c) x = 0.4 * rng.normal() + 1.0 / static_cast<double>(dim);
    f.centers.push_back(std::move(c));
  }
  return f;
}

// Sparse classification data with class-dependent means; mean_scale spreads
// the per-sample losses, which is what makes the dual weights act.
inline Dataset make_classification(std::uint64_t seed, std::int64_t n, std::int64_t d,
                                   std::int64_t h, double density, double mean_scale,
                                   double noise) {
  RngState rng(seed);
  std::vector<Vec> means;
  for (std::int64_t c = 0; c < h; ++c) {
    Vec m(static_cast<std::size_t>(d), 0.0);
    for (auto& v : m) v = rng.uniform() < 0.3 ? mean_scale * rng.normal() : 0.0;
    means.push_back(std::move(m));
  }
  Dataset data;
  data.features =
      SparseRowMatrix(static_cast<std::size_t>(n), static_cast<std::size_t>(d));
  for (std::int64_t i = 0; i < n; ++i) {
    const auto label = static_cast<std::int32_t>(i < h ? i : rng.uniform_int(h));
    data.labels.push_back(label);
    for (std::int64_t j = 0; j < d; ++j) {
      if (rng.uniform() < density) {
        const double v =
            means[static_cast<std::size_t>(label)][static_cast<std::size_t>(j)] +
            noise * rng.normal();
        if (v != 0.0) {
          data.features.idx.push_back(static_cast<std::size_t>(j));
          data.features.val.push_back(v);
        }
      }
    }
    data.features.row_start[static_cast<std::size_t>(i) + 1] = data.features.idx.size();
  }
  for (std::int64_t c = 0; c < h; ++c) data.class_values.push_back(static_cast<double>(c));
  return data;
}

}  // namespace sling::testing
