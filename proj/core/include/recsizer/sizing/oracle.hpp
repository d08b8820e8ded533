#pragma once

#include "recsizer/sizing/problem.hpp"
#include "recsizer/sizing/solution.hpp"

namespace recsizer::sizing {

struct OracleLimits {
    int max_participants = 2;
    int max_hours = 8;
    int max_panels = 3;
    int max_units = 1;
};

/// Exhaustive verification oracle for desk-scale instances: enumerates every
/// integer (panels, units) tuple and, for battery owners, every per-hour
/// charge-allowed/discharge-allowed pattern (the both-off pattern is
/// dominated by either single-sided one, so it adds nothing), solving the
/// remaining pure LP for each assignment with the full model. Throws
/// OracleLimitError outside the stated limits.
SizingSolution brute_force_oracle(const SizingProblem& problem, const OracleLimits& limits = {},
                                  int threads = 1);

} // namespace recsizer::sizing
