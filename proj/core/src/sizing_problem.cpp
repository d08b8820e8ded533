#include "recsizer/sizing/problem.hpp"

#include <cmath>
#include <limits>

#include "recsizer/errors.hpp"

namespace recsizer::sizing {

double SizingProblem::flow_scale() const {
    return dt_hours * economics.season_days * operating_discount_sum;
}

void SizingProblem::check() const {
    const auto t = static_cast<std::size_t>(n_hours());
    if (t == 0) throw StructureError("sizing: empty horizon");
    if (hours_per_day <= 0 || n_hours() % hours_per_day != 0)
        throw StructureError("sizing: horizon must be whole periodic days");
    if (pv_per_panel_kw.size() != t || buy_rate.size() != t || sell_rate.size() != t)
        throw StructureError("sizing: per-hour series must match the horizon");
    if (participants.empty()) throw StructureError("sizing: no participants");
    for (const auto& p : participants) {
        if (p.demand_kw.size() != t)
            throw StructureError("sizing: demand of " + p.id + " does not match the horizon");
        if (p.max_panels < 0) throw StructureError("sizing: negative panel bound");
    }
}

int full_row_count(const SizingProblem& p) {
    return p.n_participants() * p.n_hours() * 12 + 2 * p.n_hours() +
           p.n_participants() * p.n_days();
}

lp::LinearProgram build_full_lp(const SizingProblem& p) {
    p.check();
    const int n_part = p.n_participants();
    const int n_hours = p.n_hours();
    const VariableIndex vi = p.index();
    const int cols = vi.total();
    const int rows = full_row_count(p);
    const double inf = std::numeric_limits<double>::infinity();

    lp::LinearProgram lp;
    lp.c = Eigen::VectorXd::Zero(cols);
    lp.a = Eigen::MatrixXd::Zero(rows, cols);
    lp.b = Eigen::VectorXd::Zero(rows);
    lp.senses.assign(rows, lp::Sense::LE);
    lp.lower = Eigen::VectorXd::Zero(cols);
    lp.upper = Eigen::VectorXd::Constant(cols, inf);

    const double charge_cap = p.bess.max_units * p.bess.p_charge_max_kw;  // big-M
    const double discharge_cap = p.bess.max_units * p.bess.p_discharge_max_kw;
    const double scale = p.flow_scale();

    // Objective: discounted lifetime value of every flow, minus unit costs.
    for (int n = 0; n < n_part; ++n) {
        lp.c[vi.n_panels(n)] = -p.panel_cost_npv_eur - p.unit_tiebreak_penalty;
        lp.c[vi.n_units(n)] = -p.bess_unit_cost_npv_eur - p.unit_tiebreak_penalty;
        for (int t = 0; t < n_hours; ++t) {
            lp.c[vi.p_sell(n, t)] = p.sell_rate[t] * scale;
            lp.c[vi.p_self(n, t)] = p.buy_rate[t] * scale;
        }
    }
    for (int t = 0; t < n_hours; ++t) lp.c[vi.shared(t)] = p.share_rate * scale;

    // Bounds.
    for (int n = 0; n < n_part; ++n) {
        lp.upper[vi.n_panels(n)] = p.participants[n].max_panels;
        lp.upper[vi.n_units(n)] = p.bess.max_units;
        lp.upper[vi.soc_start(n)] = p.bess.max_units * p.bess.soc_max_kwh;
        for (int t = 0; t < n_hours; ++t) {
            lp.upper[vi.b_charge(n, t)] = 1.0;
            lp.upper[vi.b_discharge(n, t)] = 1.0;
            lp.upper[vi.p_charge(n, t)] = charge_cap;
            lp.upper[vi.p_discharge(n, t)] = discharge_cap;
            lp.upper[vi.soc(n, t)] = p.bess.max_units * p.bess.soc_max_kwh;
        }
    }

    int row = 0;
    auto le = [&](double rhs) { lp.senses[row] = lp::Sense::LE; lp.b[row] = rhs; };
    auto ge = [&](double rhs) { lp.senses[row] = lp::Sense::GE; lp.b[row] = rhs; };
    auto eq = [&](double rhs) { lp.senses[row] = lp::Sense::EQ; lp.b[row] = rhs; };

    for (int n = 0; n < n_part; ++n) {
        for (int t = 0; t < n_hours; ++t) {
            const double gen = p.pv_per_panel_kw[t];
            const double demand = p.participants[n].demand_kw[t];

            // (16a) sell - gen*panels + self = 0
            eq(0.0);
            lp.a(row, vi.p_sell(n, t)) = 1.0;
            lp.a(row, vi.n_panels(n)) = -gen;
            lp.a(row, vi.p_self(n, t)) = 1.0;
            ++row;
            // (16b) self <= gen*panels
            le(0.0);
            lp.a(row, vi.p_self(n, t)) = 1.0;
            lp.a(row, vi.n_panels(n)) = -gen;
            ++row;
            // (16c) self - charge + discharge <= demand
            le(demand);
            lp.a(row, vi.p_self(n, t)) = 1.0;
            lp.a(row, vi.p_charge(n, t)) = -1.0;
            lp.a(row, vi.p_discharge(n, t)) = 1.0;
            ++row;
            // (16f) charge <= gen*panels
            le(0.0);
            lp.a(row, vi.p_charge(n, t)) = 1.0;
            lp.a(row, vi.n_panels(n)) = -gen;
            ++row;
            // charge <= big-M * b_charge ; charge <= per-unit cap * units
            le(0.0);
            lp.a(row, vi.p_charge(n, t)) = 1.0;
            lp.a(row, vi.b_charge(n, t)) = -charge_cap;
            ++row;
            le(0.0);
            lp.a(row, vi.p_charge(n, t)) = 1.0;
            lp.a(row, vi.n_units(n)) = -p.bess.p_charge_max_kw;
            ++row;
            // discharge twin
            le(0.0);
            lp.a(row, vi.p_discharge(n, t)) = 1.0;
            lp.a(row, vi.b_discharge(n, t)) = -discharge_cap;
            ++row;
            le(0.0);
            lp.a(row, vi.p_discharge(n, t)) = 1.0;
            lp.a(row, vi.n_units(n)) = -p.bess.p_discharge_max_kw;
            ++row;
            // b_charge + b_discharge <= 1
            le(1.0);
            lp.a(row, vi.b_charge(n, t)) = 1.0;
            lp.a(row, vi.b_discharge(n, t)) = 1.0;
            ++row;
            // SOC bounds scaled by the unit count
            ge(0.0);
            lp.a(row, vi.soc(n, t)) = 1.0;
            lp.a(row, vi.n_units(n)) = -p.bess.soc_min_kwh;
            ++row;
            le(0.0);
            lp.a(row, vi.soc(n, t)) = 1.0;
            lp.a(row, vi.n_units(n)) = -p.bess.soc_max_kwh;
            ++row;
            // SOC recursion
            eq(0.0);
            lp.a(row, vi.soc(n, t)) = 1.0;
            lp.a(row, t == 0 ? vi.soc_start(n) : vi.soc(n, t - 1)) = -1.0;
            lp.a(row, vi.p_charge(n, t)) = -p.bess.eta_charge * p.dt_hours;
            lp.a(row, vi.p_discharge(n, t)) = p.dt_hours / p.bess.eta_discharge;
            ++row;
        }
    }

    for (int t = 0; t < n_hours; ++t) {
        // (16d) shared + sum(self - charge + discharge) <= total demand
        double total_demand = 0.0;
        le(0.0);
        lp.a(row, vi.shared(t)) = 1.0;
        for (int n = 0; n < n_part; ++n) {
            total_demand += p.participants[n].demand_kw[t];
            lp.a(row, vi.p_self(n, t)) = 1.0;
            lp.a(row, vi.p_charge(n, t)) = -1.0;
            lp.a(row, vi.p_discharge(n, t)) = 1.0;
        }
        lp.b[row] = total_demand;
        ++row;
        // (16e) shared <= total sold
        le(0.0);
        lp.a(row, vi.shared(t)) = 1.0;
        for (int n = 0; n < n_part; ++n) lp.a(row, vi.p_sell(n, t)) = -1.0;
        ++row;
    }

    // Day-boundary SOC periodicity.
    for (int n = 0; n < n_part; ++n) {
        for (int v = 1; v <= p.n_days(); ++v) {
            eq(0.0);
            lp.a(row, vi.soc(n, v * p.hours_per_day - 1)) = 1.0;
            lp.a(row, v == 1 ? vi.soc_start(n) : vi.soc(n, (v - 1) * p.hours_per_day - 1)) = -1.0;
            ++row;
        }
    }

    if (row != rows) throw StructureError("build_full_lp: row count mismatch");
    return lp;
}

} // namespace recsizer::sizing
