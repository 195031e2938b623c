#pragma once

#include <optional>

#include "sling/counters.hpp"
#include "sling/types.hpp"

namespace sling {

enum class SetKind { Simplex, L2Ball, NuclearBall };

// Rank-1 nuclear-ball LO answer kept in factored form so callers can delay
// the O(rows*cols) densification.
struct NuclearFactor {
  double tau = 0.0;
  Vec u;  // rows
  Vec v;  // cols; the LO point is -tau * u v^T
  Vec densify(std::size_t rows, std::size_t cols) const;
};

// A convex compact set exposing exactly two things the solvers need: a
// linear-optimization oracle and a diameter. Points are flat vectors; the
// nuclear ball reshapes them as rows x cols row-major.
class FeasibleSet {
 public:
  static FeasibleSet simplex(std::size_t dim);
  static FeasibleSet l2_ball(std::size_t dim, double radius, Vec center = {});
  static FeasibleSet nuclear_ball(std::size_t rows, std::size_t cols, double tau);

  SetKind kind() const { return kind_; }
  std::size_t dim() const { return dim_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  double radius() const { return radius_; }

  // Analytic diameters: sqrt(2) for the simplex, 2r for the ball, 2*tau for
  // the nuclear ball (Frobenius bound; the nuclear norm dominates it).
  double diameter() const;

  // argmin_{v in set} <v, g>; one LO counter tick. Exact for the simplex and
  // the ball; within the power-iteration tolerance for the nuclear ball.
  // g = 0 returns canonical_point().
  Vec lo_solve(const Vec& g, OracleCounters& counters) const;

  // Factored form of the nuclear-ball LO (throws for other kinds).
  NuclearFactor lo_solve_factored(const Vec& g, OracleCounters& counters) const;

  // Membership up to absolute tolerance. The nuclear-ball test runs a dense
  // SVD and is limited to 64x64 (desk-scale verification only).
  bool contains(const Vec& p, double tol) const;

  // Fixed reference point, also the LO answer at g = 0: vertex 0, ball
  // center, zero matrix.
  Vec canonical_point() const;

  // Power-iteration controls for the nuclear-ball LO.
  double nuclear_tol = 1e-8;
  std::int64_t nuclear_max_iter = 2000;

 private:
  FeasibleSet() = default;
  void check_shape(const Vec& g) const;

  SetKind kind_ = SetKind::Simplex;
  std::size_t dim_ = 0;
  std::size_t rows_ = 0, cols_ = 0;  // nuclear ball only
  double radius_ = 1.0;              // ball radius or nuclear tau
  Vec center_;                       // l2 ball only; empty = origin
};

}  // namespace sling
