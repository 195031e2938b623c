#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "sling/errors.hpp"
#include "sling/kernels.hpp"

namespace sling {

// All iterates live in flat 64-bit float vectors; matrix-valued points (the
// nuclear-ball predictor) are stored row-major and reshaped by their set.
using Vec = std::vector<double>;

inline double dot(const Vec& a, const Vec& b) {
  return kernels().dot(a.data(), b.data(), a.size());
}
inline double nrm2sq(const Vec& a) { return kernels().nrm2sq(a.data(), a.size()); }
inline double nrm2(const Vec& a) { return std::sqrt(nrm2sq(a)); }
inline double dist2(const Vec& a, const Vec& b) {
  return std::sqrt(kernels().dist2sq(a.data(), b.data(), a.size()));
}
// y += alpha * x
inline void axpy(double alpha, const Vec& x, Vec& y) {
  kernels().axpy(alpha, x.data(), y.data(), x.size());
}
// out = wa*a + wb*b; out may alias a or b exactly
inline void combine(Vec& out, double wa, const Vec& a, double wb, const Vec& b) {
  kernels().combine(out.data(), wa, a.data(), wb, b.data(), a.size());
}
inline void scal(double alpha, Vec& x) { kernels().scal(alpha, x.data(), x.size()); }

inline bool all_finite(const Vec& v) {
  for (double x : v)
    if (!std::isfinite(x)) return false;
  return true;
}

struct DenseMatrix {
  std::size_t rows = 0, cols = 0;
  Vec data;  // row-major, rows*cols entries

  DenseMatrix() = default;
  DenseMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0.0) {}
  DenseMatrix(std::size_t r, std::size_t c, Vec d) : rows(r), cols(c), data(std::move(d)) {
    if (data.size() != rows * cols) throw ArgumentError("DenseMatrix: size mismatch");
  }

  double& at(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  double at(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
  const double* row(std::size_t i) const { return data.data() + i * cols; }
  double* row(std::size_t i) { return data.data() + i * cols; }

  // out = M * x  (out: rows)
  void apply(const Vec& x, Vec& out) const {
    out.assign(rows, 0.0);
    for (std::size_t i = 0; i < rows; ++i)
      out[i] = kernels().dot(row(i), x.data(), cols);
  }
  // out = M^T * x  (out: cols)
  void apply_transpose(const Vec& x, Vec& out) const {
    out.assign(cols, 0.0);
    for (std::size_t i = 0; i < rows; ++i)
      kernels().axpy(x[i], row(i), out.data(), cols);
  }
};

// CSR with strictly increasing column indices per row and no stored zeros.
struct SparseRowMatrix {
  std::size_t rows = 0, cols = 0;
  std::vector<std::size_t> row_start;  // rows+1 offsets into idx/val
  std::vector<std::size_t> idx;
  Vec val;

  SparseRowMatrix() = default;
  SparseRowMatrix(std::size_t r, std::size_t c)
      : rows(r), cols(c), row_start(r + 1, 0) {}

  std::size_t nnz() const { return idx.size(); }

  double row_dot(std::size_t i, const Vec& x) const {
    double s = 0.0;
    for (std::size_t k = row_start[i]; k < row_start[i + 1]; ++k)
      s += val[k] * x[idx[k]];
    return s;
  }
  // out += alpha * row_i
  void add_row(std::size_t i, double alpha, double* out) const {
    for (std::size_t k = row_start[i]; k < row_start[i + 1]; ++k)
      out[idx[k]] += alpha * val[k];
  }
  double row_nrm2sq(std::size_t i) const {
    double s = 0.0;
    for (std::size_t k = row_start[i]; k < row_start[i + 1]; ++k)
      s += val[k] * val[k];
    return s;
  }
};

}  // namespace sling
