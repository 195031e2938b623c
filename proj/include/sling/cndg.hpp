#pragma once

#include <vector>

#include "sling/feasible_set.hpp"

namespace sling {

struct CndgResult {
  Vec point;                    // q+, feasible
  std::int64_t iterations = 0;  // loop passes = LO calls
  double final_gap = 0.0;       // last Wolfe gap, <= gap_tol on success
};

// Frank-Wolfe loop for the prox subproblem
//     min_{u in set}  <grad, u> + (beta/2) ||u - start||^2
// run until the Wolfe gap tau_t = max_x <grad + beta(q_t - start), q_t - x>
// drops to gap_tol. One LO call per pass (the gap comes from the same call
// that produces the descent vertex). Steps use the exact line-search size
// min{1, tau_t / (beta ||q_t - p_t||^2)}, so the subproblem objective is
// nonincreasing.
//
// max_iter = 0 applies the safety cap of 10x the theoretical iteration bound
// ceil(beta * diam^2 / gap_tol); exceeding the cap throws NumericError with
// the last gap. `iterate_log`, when given, records q_t after every step
// (test instrumentation).
CndgResult cndg(const Vec& grad, const Vec& start, double beta, double gap_tol,
                const FeasibleSet& set, OracleCounters& counters,
                std::int64_t max_iter = 0, std::vector<Vec>* iterate_log = nullptr);

}  // namespace sling
