#include "sling/feasible_set.hpp"

#include <cmath>

#include "sling/svd_small.hpp"
#include "sling/top_singular.hpp"

namespace sling {
namespace {

// Start seed for the nuclear LO's power iteration. lo_solve takes no rng, so
// the start vector is derived deterministically per call; a retry rotates it.
constexpr std::uint64_t kNuclearLoSeed = 0x5ECF01D5EEDULL;

}  // namespace

Vec NuclearFactor::densify(std::size_t rows, std::size_t cols) const {
  Vec out(rows * cols, 0.0);
  for (std::size_t i = 0; i < rows; ++i) {
    const double w = -tau * u[i];
    for (std::size_t j = 0; j < cols; ++j) out[i * cols + j] = w * v[j];
  }
  return out;
}

FeasibleSet FeasibleSet::simplex(std::size_t dim) {
  if (dim == 0) throw ArgumentError("simplex: dim must be positive");
  FeasibleSet s;
  s.kind_ = SetKind::Simplex;
  s.dim_ = dim;
  return s;
}

FeasibleSet FeasibleSet::l2_ball(std::size_t dim, double radius, Vec center) {
  if (dim == 0) throw ArgumentError("l2_ball: dim must be positive");
  if (radius <= 0.0) throw ArgumentError("l2_ball: radius must be positive");
  if (!center.empty() && center.size() != dim)
    throw ArgumentError("l2_ball: center/dim mismatch");
  FeasibleSet s;
  s.kind_ = SetKind::L2Ball;
  s.dim_ = dim;
  s.radius_ = radius;
  s.center_ = std::move(center);
  return s;
}

FeasibleSet FeasibleSet::nuclear_ball(std::size_t rows, std::size_t cols, double tau) {
  if (rows == 0 || cols == 0) throw ArgumentError("nuclear_ball: empty shape");
  if (tau <= 0.0) throw ArgumentError("nuclear_ball: tau must be positive");
  FeasibleSet s;
  s.kind_ = SetKind::NuclearBall;
  s.dim_ = rows * cols;
  s.rows_ = rows;
  s.cols_ = cols;
  s.radius_ = tau;
  return s;
}

double FeasibleSet::diameter() const {
  switch (kind_) {
    case SetKind::Simplex:
      return std::sqrt(2.0);
    case SetKind::L2Ball:
    case SetKind::NuclearBall:
      return 2.0 * radius_;
  }
  return 0.0;
}

void FeasibleSet::check_shape(const Vec& g) const {
  if (g.size() != dim_) throw ArgumentError("lo_solve: gradient shape mismatch");
  if (!all_finite(g)) throw ArgumentError("lo_solve: gradient has NaN/Inf");
}

Vec FeasibleSet::canonical_point() const {
  Vec p(dim_, 0.0);
  switch (kind_) {
    case SetKind::Simplex:
      p[0] = 1.0;
      break;
    case SetKind::L2Ball:
      if (!center_.empty()) p = center_;
      break;
    case SetKind::NuclearBall:
      break;  // zero matrix
  }
  return p;
}

Vec FeasibleSet::lo_solve(const Vec& g, OracleCounters& counters) const {
  check_shape(g);
  switch (kind_) {
    case SetKind::Simplex: {
      counters.add_lo();
      // vertex with the smallest gradient entry, lowest index on ties
      std::size_t best = 0;
      for (std::size_t i = 1; i < dim_; ++i)
        if (g[i] < g[best]) best = i;
      Vec p(dim_, 0.0);
      p[best] = 1.0;
      return p;
    }
    case SetKind::L2Ball: {
      counters.add_lo();
      const double norm = nrm2(g);
      if (norm == 0.0) return canonical_point();
      Vec p(dim_);
      const double w = -radius_ / norm;
      for (std::size_t i = 0; i < dim_; ++i)
        p[i] = (center_.empty() ? 0.0 : center_[i]) + w * g[i];
      return p;
    }
    case SetKind::NuclearBall:
      return lo_solve_factored(g, counters).densify(rows_, cols_);
  }
  throw ArgumentError("lo_solve: unknown set kind");
}

NuclearFactor FeasibleSet::lo_solve_factored(const Vec& g,
                                             OracleCounters& counters) const {
  if (kind_ != SetKind::NuclearBall)
    throw ArgumentError("lo_solve_factored: set is not a nuclear ball");
  check_shape(g);
  counters.add_lo();

  NuclearFactor f;
  f.tau = radius_;
  if (nrm2sq(g) == 0.0) {
    // degenerate gradient: zero matrix, expressed as tau=0
    f.tau = 0.0;
    f.u.assign(rows_, 0.0);
    f.v.assign(cols_, 0.0);
    return f;
  }
  const DenseMatrix gm(rows_, cols_, g);
  try {
    const SingularPair top =
        top_singular_pair(gm, nuclear_tol, nuclear_max_iter, RngState(kNuclearLoSeed));
    f.u = top.u;
    f.v = top.v;
    return f;
  } catch (const NumericError&) {
  }
  try {
    // retry from a rotated start before anything heavier
    const SingularPair top = top_singular_pair(
        gm, nuclear_tol, nuclear_max_iter, RngState(kNuclearLoSeed ^ 0xA5A5A5A5ULL));
    f.u = top.u;
    f.v = top.v;
    return f;
  } catch (const NumericError&) {
    // A cluster of nearly equal top singular values stalls the residual
    // certificate; at dense-SVD sizes the exact factorization settles it the
    // same way membership does. Above that limit the error propagates.
    if (rows_ > kSvdSmallMaxDim || cols_ > kSvdSmallMaxDim) throw;
  }
  const SmallSvd svd = svd_small(gm);
  f.u.assign(gm.rows, 0.0);
  f.v.assign(gm.cols, 0.0);
  for (std::size_t i = 0; i < gm.rows; ++i) f.u[i] = svd.u.at(i, 0);
  for (std::size_t j = 0; j < gm.cols; ++j) f.v[j] = svd.v.at(j, 0);
  return f;
}

bool FeasibleSet::contains(const Vec& p, double tol) const {
  if (p.size() != dim_) throw ArgumentError("contains: point shape mismatch");
  switch (kind_) {
    case SetKind::Simplex: {
      double sum = 0.0;
      for (double x : p) {
        if (x < -tol) return false;
        sum += x;
      }
      return std::abs(sum - 1.0) <= tol;
    }
    case SetKind::L2Ball: {
      double d2 = center_.empty() ? nrm2sq(p) : kernels().dist2sq(p.data(), center_.data(), dim_);
      return std::sqrt(d2) <= radius_ + tol;
    }
    case SetKind::NuclearBall: {
      if (rows_ > kSvdSmallMaxDim || cols_ > kSvdSmallMaxDim)
        throw ArgumentError(
            "contains: nuclear-ball membership is a dense-SVD check limited to 64x64");
      return nuclear_norm_small(DenseMatrix(rows_, cols_, p)) <= radius_ + tol;
    }
  }
  return false;
}

}  // namespace sling
