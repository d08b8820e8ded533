#pragma once

#include <string>
#include <vector>

#include "recsizer/dispatch.hpp"
#include "recsizer/sizing/problem.hpp"

namespace recsizer::sizing {

struct SolverStats {
    long nodes = 0;
    long lp_iterations = 0;
    double wall_seconds = 0.0;
    bool proven = true; // relative gap closed below the requested tolerance
};

struct SizingSolution {
    bool feasible = false;
    std::vector<int> n_panels;   // per participant
    std::vector<int> n_units;
    DispatchSolution dispatch;   // labeled flows incl. indicator values
    double objective_npv_eur = 0.0;
    double gap = 0.0;
    SolverStats stats;
};

/// One independently re-checked constraint violation.
struct SolutionViolation {
    std::string constraint;
    int participant = -1; // -1 for community-level rows
    int hour = -1;
    double residual = 0.0;
};

/// Re-validates a candidate against every constraint block independently of
/// the solver: power balances, sharing caps, charge/discharge caps and
/// non-simultaneity, SOC recursion/bounds, day-boundary periodicity
/// (tolerance 1e-9), integrality and fleet caps.
std::vector<SolutionViolation> check_solution(const SizingProblem& problem,
                                              const SizingSolution& solution,
                                              double tol = 1e-6);

} // namespace recsizer::sizing
