#pragma once

#include "sling/rng.hpp"
#include "sling/types.hpp"

namespace sling {

struct SingularPair {
  double sigma = 0.0;
  Vec u;  // rows, unit norm, first nonzero entry nonnegative
  Vec v;  // cols, unit norm; G v ~ sigma u, G^T u ~ sigma v
  std::int64_t iterations = 0;
};

// Top singular triple by alternating power iteration on G^T G, i.e. repeated
// matvecs with G and G^T only, which is the whole cost of the nuclear-ball
// LO. Converges when both residuals ||G v - sigma u|| and ||G^T u - sigma v||
// drop below tol*sigma; throws NumericError (carrying the residual) if that
// does not happen within max_iter, in which case the caller may retry with a
// different rng.
SingularPair top_singular_pair(const DenseMatrix& g, double tol, std::int64_t max_iter,
                               RngState rng);
SingularPair top_singular_pair(const SparseRowMatrix& g, double tol,
                               std::int64_t max_iter, RngState rng);

inline constexpr double kTopSingularTol = 1e-8;
inline constexpr std::int64_t kTopSingularMaxIter = 2000;

}  // namespace sling
