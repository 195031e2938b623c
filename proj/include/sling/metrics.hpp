#pragma once

#include "sling/saddle_problem.hpp"

namespace sling {

// Frank-Wolfe gap of a feasible pair:
//   G(x, y) = max_u <x - u, grad_x f> + max_v <y - v, -grad_y f>
// Exactly one FO call and two LO calls; upper-bounds the primal-dual gap and
// is nonnegative up to arithmetic. This is the metric traces report.
double fw_gap(const SaddleProblem& f, const Vec& x, const Vec& y,
              OracleCounters& counters);

// Desk-scale primal-dual gap oracle: max_y f(x, .) minus min_x f(., y), each
// side solved to accuracy/4 (closed forms are used when the problem has
// them, the inner maximizer via sliding otherwise, the minimizer by one LO
// when f(., y) is linear and by a certified Frank-Wolfe run otherwise). The
// returned value sits in [gap - accuracy/2, gap]: it never overestimates.
// Limited to 64 dimensions per side; its oracle calls are not counted
// anywhere (measurement, not solver work).
double primal_dual_gap(const SaddleProblem& f, const Vec& x, const Vec& y,
                       double accuracy);

inline constexpr double kGapOracleAccuracy = 1e-9;  // default for rate assertions

}  // namespace sling
