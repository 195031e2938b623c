#include "sling/estimate.hpp"

#include <cmath>

namespace sling {

Vec random_feasible_point(const FeasibleSet& set, RngState& rng) {
  Vec p(set.dim());
  switch (set.kind()) {
    case SetKind::Simplex: {
      double sum = 0.0;
      for (double& v : p) {
        v = -std::log(1.0 - rng.uniform());
        sum += v;
      }
      scal(1.0 / sum, p);
      return p;
    }
    case SetKind::L2Ball: {
      for (double& v : p) v = rng.normal();
      const double n = nrm2(p);
      const double mag =
          set.radius() *
          std::pow(rng.uniform(), 1.0 / static_cast<double>(set.dim()));
      if (n > 0.0) scal(mag / n, p);
      const Vec center = set.canonical_point();
      axpy(1.0, center, p);
      return p;
    }
    case SetKind::NuclearBall: {
      for (double& v : p) v = rng.normal();
      const double fro = nrm2(p);
      const double k = std::sqrt(
          static_cast<double>(std::min(set.rows(), set.cols())));
      const double target = set.radius() * rng.uniform() / k;
      if (fro > 0.0) scal(target / fro, p);
      return p;
    }
  }
  throw ArgumentError("random_feasible_point: unknown set kind");
}

ProblemConstants estimate_constants(const SaddleProblem& p, std::int64_t trials,
                                    RngState& rng, bool force_empirical) {
  if (trials < 10) throw ArgumentError("estimate_constants: trials >= 10 required");
  if (p.analytic_constants() && !force_empirical) return p.constants();

  ProblemConstants out = p.constants();
  const std::size_t nx = p.set_x().dim(), ny = p.set_y().dim();
  Vec gx1(nx), gy1(ny), gx2(nx), gy2(ny);

  double max_ratio = 0.0;
  std::vector<Vec> xs, ys;
  for (std::int64_t t = 0; t < trials; ++t) {
    xs.push_back(random_feasible_point(p.set_x(), rng));
    ys.push_back(random_feasible_point(p.set_y(), rng));
  }
  for (std::int64_t t = 0; t < trials; ++t) {
    const Vec& xa = xs[static_cast<std::size_t>(t)];
    const Vec& ya = ys[static_cast<std::size_t>(t)];
    const Vec& xb = xs[static_cast<std::size_t>((t + 1) % trials)];
    const Vec& yb = ys[static_cast<std::size_t>((t + 1) % trials)];
    p.grad_x(xa, ya, gx1);
    p.grad_y(xa, ya, gy1);
    p.grad_x(xb, yb, gx2);
    p.grad_y(xb, yb, gy2);
    const double dg = std::sqrt(kernels().dist2sq(gx1.data(), gx2.data(), nx) +
                                kernels().dist2sq(gy1.data(), gy2.data(), ny));
    const double dp = std::sqrt(kernels().dist2sq(xa.data(), xb.data(), nx) +
                                kernels().dist2sq(ya.data(), yb.data(), ny));
    if (dp > 1e-12) max_ratio = std::max(max_ratio, dg / dp);
  }
  out.smoothness = std::max(1.5 * max_ratio, out.strong_concavity);

  if (p.sample_count() > 0) {
    // pilot second moment of per-component gradient deviations
    const std::int64_t n = p.sample_count();
    Vec cgx(nx), cgy(ny);
    double max_second = 0.0;
    const std::int64_t pilot_points = std::min<std::int64_t>(trials, 5);
    for (std::int64_t t = 0; t < pilot_points; ++t) {
      const Vec& x = xs[static_cast<std::size_t>(t)];
      const Vec& y = ys[static_cast<std::size_t>(t)];
      p.grad_x(x, y, gx1);
      p.grad_y(x, y, gy1);
      double acc = 0.0;
      for (std::int64_t i = 0; i < n; ++i) {
        p.component_grad(x, y, i, cgx, cgy);
        acc += kernels().dist2sq(cgx.data(), gx1.data(), nx) +
               kernels().dist2sq(cgy.data(), gy1.data(), ny);
      }
      max_second = std::max(max_second, acc / static_cast<double>(n));
    }
    out.noise_bound = 1.2 * std::sqrt(max_second);
  }

  out.validate();
  return out;
}

}  // namespace sling
