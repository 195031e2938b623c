#include "sling/svd_small.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace sling {
namespace {

// One-sided Jacobi on the columns of B (m x n, m >= n): rotate column pairs
// until they are mutually orthogonal, then column norms are the singular
// values. V accumulates the rotations.
void jacobi_columns(DenseMatrix& b, DenseMatrix& v) {
  const std::size_t m = b.rows, n = b.cols;
  const double eps = 1e-15;
  const int max_sweeps = 60;
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    bool rotated = false;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        double app = 0.0, aqq = 0.0, apq = 0.0;
        for (std::size_t i = 0; i < m; ++i) {
          const double bp = b.at(i, p), bq = b.at(i, q);
          app += bp * bp;
          aqq += bq * bq;
          apq += bp * bq;
        }
        if (std::abs(apq) <= eps * std::sqrt(app * aqq) || apq == 0.0) continue;
        rotated = true;
        const double zeta = (aqq - app) / (2.0 * apq);
        const double t = (zeta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = c * t;
        for (std::size_t i = 0; i < m; ++i) {
          const double bp = b.at(i, p), bq = b.at(i, q);
          b.at(i, p) = c * bp - s * bq;
          b.at(i, q) = s * bp + c * bq;
        }
        for (std::size_t i = 0; i < n; ++i) {
          const double vp = v.at(i, p), vq = v.at(i, q);
          v.at(i, p) = c * vp - s * vq;
          v.at(i, q) = s * vp + c * vq;
        }
      }
    }
    if (!rotated) break;
  }
}

}  // namespace

SmallSvd svd_small(const DenseMatrix& a) {
  if (a.rows == 0 || a.cols == 0) throw ArgumentError("svd_small: empty matrix");
  if (a.rows > kSvdSmallMaxDim || a.cols > kSvdSmallMaxDim)
    throw ArgumentError("svd_small: matrix exceeds the 64x64 dense-SVD limit");

  // Work on the tall orientation so columns are the short dimension.
  const bool transposed = a.rows < a.cols;
  DenseMatrix b = a;
  if (transposed) {
    b = DenseMatrix(a.cols, a.rows);
    for (std::size_t i = 0; i < a.rows; ++i)
      for (std::size_t j = 0; j < a.cols; ++j) b.at(j, i) = a.at(i, j);
  }
  const std::size_t m = b.rows, n = b.cols;

  DenseMatrix v(n, n);
  for (std::size_t i = 0; i < n; ++i) v.at(i, i) = 1.0;
  jacobi_columns(b, v);

  Vec sigma(n, 0.0);
  for (std::size_t j = 0; j < n; ++j) {
    double s = 0.0;
    for (std::size_t i = 0; i < m; ++i) s += b.at(i, j) * b.at(i, j);
    sigma[j] = std::sqrt(s);
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t x, std::size_t y) { return sigma[x] > sigma[y]; });

  SmallSvd out;
  out.sigma.resize(n);
  DenseMatrix uu(m, n);
  DenseMatrix vv(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t j = order[k];
    out.sigma[k] = sigma[j];
    const double inv = sigma[j] > 0.0 ? 1.0 / sigma[j] : 0.0;
    for (std::size_t i = 0; i < m; ++i) uu.at(i, k) = b.at(i, j) * inv;
    for (std::size_t i = 0; i < n; ++i) vv.at(i, k) = v.at(i, j);
  }
  if (transposed) {
    out.u = std::move(vv);  // factors swap when A was transposed
    out.v = std::move(uu);
  } else {
    out.u = std::move(uu);
    out.v = std::move(vv);
  }
  return out;
}

double nuclear_norm_small(const DenseMatrix& a) {
  const SmallSvd s = svd_small(a);
  double sum = 0.0;
  for (double x : s.sigma) sum += x;
  return sum;
}

}  // namespace sling
