#pragma once

#include "recsizer/sizing/problem.hpp"
#include "recsizer/sizing/solution.hpp"

namespace recsizer::sizing {

struct SolveOptions {
    double gap_tol = 1e-6;     // relative, |bound - incumbent| / max(1, |incumbent|)
    double time_limit_s = 0.0; // 0 disables
    long node_limit = 0;       // 0 disables
    int threads = 1;           // node LPs evaluated in deterministic waves
};

/// Branch-and-bound over the LP relaxation. Integer panel/unit counts are
/// branched first (most fractional), hour-level charge/discharge exclusivity
/// only where the relaxation violates complementarity. Node exploration is
/// best-bound; incumbents come from re-solving with the counts pinned to
/// integers, so reported objectives are exact for the returned sizing.
SizingSolution solve_bnb(const SizingProblem& problem, const SolveOptions& options = {});

} // namespace recsizer::sizing
