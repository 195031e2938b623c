#include "sling/cndg.hpp"

#include <cmath>

namespace sling {

CndgResult cndg(const Vec& grad, const Vec& start, double beta, double gap_tol,
                const FeasibleSet& set, OracleCounters& counters,
                std::int64_t max_iter, std::vector<Vec>* iterate_log) {
  if (beta <= 0.0) throw ArgumentError("cndg: beta must be positive");
  if (gap_tol <= 0.0) throw ArgumentError("cndg: gap tolerance must be positive");
  if (grad.size() != set.dim() || start.size() != set.dim())
    throw ArgumentError("cndg: shape mismatch");

  if (max_iter <= 0) {
    const double d = set.diameter();
    const double bound = std::ceil(beta * d * d / gap_tol);
    max_iter = 10 * static_cast<std::int64_t>(std::min(bound, 9.0e17));
    if (max_iter < 10) max_iter = 10;
  }

  const std::size_t n = set.dim();
  Vec q = start;
  Vec g(n);     // grad + beta (q - start)
  Vec p;        // LO vertex
  double tau = 0.0;

  for (std::int64_t t = 1; t <= max_iter; ++t) {
    combine(g, beta, q, -beta, start);
    axpy(1.0, grad, g);
    p = set.lo_solve(g, counters);
    tau = dot(g, q) - dot(g, p);
    if (tau <= gap_tol) {
      CndgResult out;
      out.point = std::move(q);
      out.iterations = t;
      out.final_gap = tau;
      return out;
    }
    const double denom = kernels().dist2sq(q.data(), p.data(), n);
    const double step = denom > 0.0 ? std::min(1.0, tau / (beta * denom)) : 1.0;
    combine(q, 1.0 - step, q, step, p);
    if (iterate_log) iterate_log->push_back(q);
  }
  throw NumericError("cndg: Wolfe gap " + std::to_string(tau) + " above tolerance " +
                         std::to_string(gap_tol) + " after " +
                         std::to_string(max_iter) + " iterations",
                     tau);
}

}  // namespace sling
