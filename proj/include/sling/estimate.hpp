#pragma once

#include "sling/saddle_problem.hpp"

namespace sling {

// A feasible point with some spread over the set; used for constant
// estimation and randomized certificates. Simplex: normalized exponentials;
// ball: Gaussian direction with radius^(1/d)-distributed magnitude; nuclear
// ball: Gaussian matrix scaled so sqrt(min(h,d)) * ||.||_F <= tau (a safe
// interior box since the nuclear norm is at most that multiple of Frobenius).
Vec random_feasible_point(const FeasibleSet& set, RngState& rng);

// Schedule constants for a problem. Analytic problems return their cached
// constants untouched unless force_empirical is set. Otherwise: smoothness
// from the largest sampled gradient-difference ratio inflated by 1.5x,
// strong concavity from the problem's analytic value, sigma from pilot
// per-component second moments (finite-sum form only; expectation-form
// problems keep their declared sigma).
ProblemConstants estimate_constants(const SaddleProblem& p, std::int64_t trials,
                                    RngState& rng, bool force_empirical = false);

}  // namespace sling
