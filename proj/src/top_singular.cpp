#include "sling/top_singular.hpp"

#include <cmath>

#include "sling/errors.hpp"

namespace sling {
namespace {

struct MatOps {
  std::size_t rows, cols;
  void (*apply)(const void*, const Vec&, Vec&);    // out = G x
  void (*apply_t)(const void*, const Vec&, Vec&);  // out = G^T x
  const void* m;
  double frob2;
};

void fix_sign(Vec& u, Vec& v) {
  // resolve the +/- ambiguity: first nonzero entry of u nonnegative
  for (double x : u) {
    if (x != 0.0) {
      if (x < 0.0) {
        for (double& a : u) a = -a;
        for (double& b : v) b = -b;
      }
      return;
    }
  }
}

SingularPair power_iterate(const MatOps& g, double tol, std::int64_t max_iter,
                           RngState& rng) {
  if (tol <= 0.0) throw ArgumentError("top_singular_pair: tol must be positive");
  if (g.frob2 == 0.0) throw ArgumentError("top_singular_pair: zero matrix");

  Vec v(g.cols), u(g.rows), gv(g.rows), gtu(g.cols);
  for (double& x : v) x = rng.normal();
  double nv = nrm2(v);
  if (nv == 0.0) v[0] = 1.0, nv = 1.0;
  scal(1.0 / nv, v);

  double sigma = 0.0, residual = 0.0;
  for (std::int64_t it = 1; it <= max_iter; ++it) {
    g.apply(g.m, v, gv);
    double nu = nrm2(gv);
    if (nu == 0.0) {
      // v landed in the null space; restart from a fresh direction
      for (double& x : v) x = rng.normal();
      scal(1.0 / nrm2(v), v);
      continue;
    }
    u = gv;
    scal(1.0 / nu, u);

    g.apply_t(g.m, u, gtu);
    sigma = nrm2(gtu);
    if (sigma == 0.0) continue;
    v = gtu;
    scal(1.0 / sigma, v);

    // residuals of the singular-pair equations at (sigma, u, v)
    g.apply(g.m, v, gv);
    double r1 = 0.0;
    for (std::size_t i = 0; i < g.rows; ++i) {
      const double d = gv[i] - sigma * u[i];
      r1 += d * d;
    }
    g.apply_t(g.m, u, gtu);
    double r2 = 0.0;
    for (std::size_t i = 0; i < g.cols; ++i) {
      const double d = gtu[i] - sigma * v[i];
      r2 += d * d;
    }
    residual = std::sqrt(std::max(r1, r2));
    if (residual <= tol * sigma) {
      SingularPair out;
      out.sigma = sigma;
      out.u = std::move(u);
      out.v = std::move(v);
      out.iterations = it;
      fix_sign(out.u, out.v);
      return out;
    }
  }
  throw NumericError("top_singular_pair: no convergence after " +
                         std::to_string(max_iter) + " iterations",
                     residual);
}

}  // namespace

SingularPair top_singular_pair(const DenseMatrix& g, double tol,
                               std::int64_t max_iter, RngState rng) {
  MatOps ops{
      g.rows, g.cols,
      [](const void* m, const Vec& x, Vec& out) {
        static_cast<const DenseMatrix*>(m)->apply(x, out);
      },
      [](const void* m, const Vec& x, Vec& out) {
        static_cast<const DenseMatrix*>(m)->apply_transpose(x, out);
      },
      &g, nrm2sq(g.data)};
  return power_iterate(ops, tol, max_iter, rng);
}

SingularPair top_singular_pair(const SparseRowMatrix& g, double tol,
                               std::int64_t max_iter, RngState rng) {
  MatOps ops{
      g.rows, g.cols,
      [](const void* m, const Vec& x, Vec& out) {
        const auto& s = *static_cast<const SparseRowMatrix*>(m);
        out.assign(s.rows, 0.0);
        for (std::size_t i = 0; i < s.rows; ++i) out[i] = s.row_dot(i, x);
      },
      [](const void* m, const Vec& x, Vec& out) {
        const auto& s = *static_cast<const SparseRowMatrix*>(m);
        out.assign(s.cols, 0.0);
        for (std::size_t i = 0; i < s.rows; ++i) s.add_row(i, x[i], out.data());
      },
      &g, nrm2sq(g.val)};
  return power_iterate(ops, tol, max_iter, rng);
}

}  // namespace sling
