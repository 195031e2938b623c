#pragma once

#include "sling/types.hpp"

namespace sling {

// Full SVD of a small dense matrix by one-sided Jacobi. Quadratically
// convergent and accurate to ~1e-14 relative at the sizes we allow; this is
// the slow exact route that nuclear-ball membership and the oracle tests
// check the power-iteration LO against. Capped at 64x64 on purpose: the
// library never does a full SVD on problem-sized matrices.
struct SmallSvd {
  Vec sigma;      // descending
  DenseMatrix u;  // rows x k
  DenseMatrix v;  // cols x k, A = U diag(sigma) V^T, k = min(rows, cols)
};

inline constexpr std::size_t kSvdSmallMaxDim = 64;

SmallSvd svd_small(const DenseMatrix& a);

// Sum of singular values, the nuclear norm. Same 64x64 limit.
double nuclear_norm_small(const DenseMatrix& a);

}  // namespace sling
