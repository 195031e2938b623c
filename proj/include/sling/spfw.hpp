#pragma once

#include "sling/saddle_problem.hpp"

namespace sling {

// Saddle-point Frank-Wolfe comparison baseline: one simultaneous FW step in
// both blocks with the conventional 2/(k+2) step, k counted from 0. Exactly
// one FO and two LO calls. No rate guarantee here (that is the point of the
// comparison); the gap is not even monotone.
void spfw_step(const SaddleProblem& f, Vec& x, Vec& y, std::int64_t k,
               OracleCounters& counters);

}  // namespace sling
