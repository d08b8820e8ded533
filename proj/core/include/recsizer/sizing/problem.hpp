#pragma once

#include <string>
#include <vector>

#include "recsizer/config.hpp"
#include "recsizer/dispatch.hpp"
#include "recsizer/lp/problem.hpp"

namespace recsizer::sizing {

struct SizingParticipant {
    std::string id;
    std::vector<double> demand_kw; // one value per horizon hour
    int max_panels = 0;            // floor(roof area / panel area)
    double zeta = 0.0;             // demand-proportional incentive share
    double annual_bill_eur = 0.0;
};

/// Column layout of the sizing MILP. Order:
///   [n_panels per participant] [n_units per participant]
///   [per participant, per hour: b_charge, b_discharge, p_self, p_sell,
///    p_charge, p_discharge, soc]
///   [initial soc per participant] [shared power per hour]
/// giving 2N + 7NT + N + T columns for N participants and T hours.
class VariableIndex {
public:
    VariableIndex(int n_participants, int n_hours)
        : n_(n_participants), t_(n_hours) {}

    int n_panels(int n) const { return n; }
    int n_units(int n) const { return n_ + n; }
    int b_charge(int n, int t) const { return block(n, t) + 0; }
    int b_discharge(int n, int t) const { return block(n, t) + 1; }
    int p_self(int n, int t) const { return block(n, t) + 2; }
    int p_sell(int n, int t) const { return block(n, t) + 3; }
    int p_charge(int n, int t) const { return block(n, t) + 4; }
    int p_discharge(int n, int t) const { return block(n, t) + 5; }
    int soc(int n, int t) const { return block(n, t) + 6; } // state at end of hour t
    int soc_start(int n) const { return 2 * n_ + 7 * n_ * t_ + n; }
    int shared(int t) const { return 2 * n_ + 7 * n_ * t_ + n_ + t; }

    int total() const { return 2 * n_ + 7 * n_ * t_ + n_ + t_; }
    int participants() const { return n_; }
    int hours() const { return t_; }

private:
    int block(int n, int t) const { return 2 * n_ + (n * t_ + t) * 7; }

    int n_, t_;
};

/// Periodic-horizon sizing problem over representative days: inputs, rates,
/// bounds and the discounted economic coefficients of the objective.
struct SizingProblem {
    std::vector<SizingParticipant> participants;
    std::vector<HourLabel> hours;       // calendar labels, n_days * hours_per_day
    int hours_per_day = 24;             // samples per periodic day
    double dt_hours = 1.0;

    std::vector<double> pv_per_panel_kw; // single-panel generation per hour
    std::vector<double> buy_rate;        // EUR/kWh per hour
    std::vector<double> sell_rate;
    double share_rate = 0.0;             // C^E + C^T

    PVSpec pv;
    BESSSpec bess;
    EconomicParams economics;

    /// sum over operating years of (1+r)^-y
    double operating_discount_sum = 0.0;
    /// full discounted lifetime cost of one panel / one battery unit
    double panel_cost_npv_eur = 0.0;
    double bess_unit_cost_npv_eur = 0.0;
    /// deterministic tie-break penalty per installed unit
    double unit_tiebreak_penalty = 1e-9;

    int n_participants() const { return static_cast<int>(participants.size()); }
    int n_hours() const { return static_cast<int>(hours.size()); }
    int n_days() const { return n_hours() / hours_per_day; }
    VariableIndex index() const { return {n_participants(), n_hours()}; }

    /// kWh-to-EUR factor of one operating hour flow over the whole horizon:
    /// dt * season_days * operating_discount_sum.
    double flow_scale() const;

    void check() const; // StructureError on inconsistent shapes
};

/// Number of rows of the full MILP: 12 per participant-hour, 2 per hour
/// (community sharing caps) and one periodicity row per participant-day.
int full_row_count(const SizingProblem& p);

/// Builds the complete linearized problem with binaries relaxed to [0,1]:
///   (16a) sell = generation - self       (equality)
///   (16b) self <= generation             (16c) self <= demand + charge - discharge
///   (16d) shared <= total residual demand (16e) shared <= total sold
///   (16f) charge <= generation
///   charge <= cap*b_c, charge <= cap*units (same for discharge), b_c+b_d <= 1,
///   SOC recursion, SOC within unit-scaled bounds, day-boundary periodicity.
/// Integer/binary restrictions are imposed by callers through the bounds.
lp::LinearProgram build_full_lp(const SizingProblem& p);

} // namespace recsizer::sizing
