#include <cmath>

#include "recsizer/bess.hpp"
#include "recsizer/errors.hpp"
#include "recsizer/sizing/solution.hpp"

namespace recsizer::sizing {

namespace {

void check_flow_lengths(const SizingProblem& problem, const SizingSolution& sol) {
    const auto t = static_cast<std::size_t>(problem.n_hours());
    if (sol.dispatch.hours.size() != t || sol.dispatch.shared_kw.size() != t)
        throw StructureError("check_solution: horizon mismatch");
    if (sol.dispatch.participants.size() != static_cast<std::size_t>(problem.n_participants()) ||
        sol.n_panels.size() != sol.dispatch.participants.size() ||
        sol.n_units.size() != sol.dispatch.participants.size())
        throw StructureError("check_solution: participant count mismatch");
    for (const auto& p : sol.dispatch.participants) {
        if (p.p_self_kw.size() != t || p.p_sell_kw.size() != t || p.p_charge_kw.size() != t ||
            p.p_discharge_kw.size() != t || p.soc_kwh.size() != t + 1 ||
            p.charge_on.size() != t || p.discharge_on.size() != t)
            throw StructureError("check_solution: flow series length mismatch");
    }
}

} // namespace

std::vector<SolutionViolation> check_solution(const SizingProblem& problem,
                                              const SizingSolution& solution,
                                              double tol) {
    problem.check();
    check_flow_lengths(problem, solution);
    std::vector<SolutionViolation> out;
    auto flag = [&](const std::string& what, int n, int t, double residual) {
        if (residual > tol) out.push_back({what, n, t, residual});
    };

    const int n_part = problem.n_participants();
    const int n_hours = problem.n_hours();

    for (int n = 0; n < n_part; ++n) {
        const auto& d = solution.dispatch.participants[n];
        const int panels = solution.n_panels[n];
        const int units = solution.n_units[n];

        // Integer counts within their caps (panel-area and unit-cap rules).
        if (panels < 0 || panels > problem.participants[n].max_panels)
            out.push_back({"panel_count_bound", n, -1,
                           static_cast<double>(panels > problem.participants[n].max_panels
                                                   ? panels - problem.participants[n].max_panels
                                                   : -panels)});
        if (units < 0 || units > problem.bess.max_units)
            out.push_back({"unit_count_bound", n, -1,
                           static_cast<double>(units > problem.bess.max_units
                                                   ? units - problem.bess.max_units
                                                   : -units)});

        for (int t = 0; t < n_hours; ++t) {
            const double gen = problem.pv_per_panel_kw[t] * panels;
            const double demand = problem.participants[n].demand_kw[t];
            const double self = d.p_self_kw[t];
            const double sell = d.p_sell_kw[t];
            const double charge = d.p_charge_kw[t];
            const double discharge = d.p_discharge_kw[t];

            flag("nonnegative_self", n, t, -self);
            flag("nonnegative_sell", n, t, -sell);
            flag("nonnegative_charge", n, t, -charge);
            flag("nonnegative_discharge", n, t, -discharge);
            flag("sell_balance", n, t, std::abs(sell - (gen - self)));
            flag("self_below_generation", n, t, self - gen);
            flag("self_below_residual_demand", n, t, self - (demand + charge - discharge));
            flag("charge_from_pv_only", n, t, charge - gen);
            flag("charge_indicator", n, t,
                 charge - problem.bess.max_units * problem.bess.p_charge_max_kw * d.charge_on[t]);
            flag("discharge_indicator", n, t,
                 discharge -
                     problem.bess.max_units * problem.bess.p_discharge_max_kw * d.discharge_on[t]);
            flag("indicator_sum", n, t,
                 static_cast<double>(d.charge_on[t]) + d.discharge_on[t] - 1.0);
            flag("complementarity", n, t, charge * discharge);
        }

        // SOC recursion, power caps and SOC bounds via the battery model
        // (skipped when the unit count itself is already out of range).
        if (units >= 0 && units <= problem.bess.max_units) {
            for (const DispatchViolation& v :
                 validate_dispatch(d.soc_kwh, d.p_charge_kw, d.p_discharge_kw, units,
                                   problem.bess, problem.dt_hours, tol))
                out.push_back({"soc_" + v.constraint, n, static_cast<int>(v.step), v.residual});
        }

        // Day-boundary periodicity at 1e-9.
        for (int v = 1; v <= problem.n_days(); ++v) {
            const double first = d.soc_kwh[(v - 1) * problem.hours_per_day];
            const double last = d.soc_kwh[v * problem.hours_per_day];
            if (std::abs(last - first) > 1e-9)
                out.push_back({"soc_periodicity", n, v, std::abs(last - first)});
        }
    }

    for (int t = 0; t < n_hours; ++t) {
        const double shared = solution.dispatch.shared_kw[t];
        flag("nonnegative_shared", -1, t, -shared);
        double residual_demand = 0.0;
        double total_sold = 0.0;
        for (int n = 0; n < n_part; ++n) {
            const auto& d = solution.dispatch.participants[n];
            residual_demand += problem.participants[n].demand_kw[t] + d.p_charge_kw[t] -
                               d.p_discharge_kw[t] - d.p_self_kw[t];
            total_sold += d.p_sell_kw[t];
        }
        flag("shared_below_residual_demand", -1, t, shared - residual_demand);
        flag("shared_below_sold", -1, t, shared - total_sold);
    }

    return out;
}

} // namespace recsizer::sizing
