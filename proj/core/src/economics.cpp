#include "recsizer/economics.hpp"

#include <cmath>

#include "recsizer/bess.hpp"
#include "recsizer/errors.hpp"
#include "recsizer/pv.hpp"

namespace recsizer {

std::vector<double> distribution_factors(const std::vector<std::vector<double>>& demands_kw,
                                         double dt_hours) {
    if (demands_kw.empty()) throw DegenerateDemandError("distribution_factors: no participants");
    std::vector<double> energy(demands_kw.size(), 0.0);
    double total = 0.0;
    for (std::size_t n = 0; n < demands_kw.size(); ++n) {
        for (double v : demands_kw[n]) energy[n] += v * dt_hours;
        total += energy[n];
    }
    if (total <= 0.0)
        throw DegenerateDemandError("distribution_factors: total demand is zero");
    for (double& e : energy) e /= total;
    return energy;
}

std::vector<double> distribution_factors(const std::vector<TimeSeries>& demands) {
    if (demands.empty()) throw DegenerateDemandError("distribution_factors: no participants");
    std::vector<std::vector<double>> values;
    values.reserve(demands.size());
    for (const TimeSeries& s : demands) values.push_back(s.values);
    return distribution_factors(values, demands.front().step_hours);
}

CashFlowLedger build_ledger(const CashFlowComponents& components, int n_panels, int n_units,
                            const PVSpec& pv, const BESSSpec& bess, const EconomicParams& econ,
                            double zeta) {
    const PVFleetCosts pv_cost = pv_costs(n_panels, pv);
    const BESSFleetCosts bess_cost = bess_costs(n_units, bess);

    CashFlowLedger ledger;
    ledger.investment_eur.assign(econ.horizon_years + 1, 0.0);
    ledger.operating_eur.assign(econ.horizon_years + 1, 0.0);

    ledger.investment_eur[0] = pv_cost.capex_eur + bess_cost.capex_eur;
    if (n_units > 0 && bess_cost.replacement_year <= econ.horizon_years)
        ledger.investment_eur[bess_cost.replacement_year] += bess_cost.capex_eur;

    const double annual_income =
        econ.season_days *
        (components.r_sell_eur + components.r_self_eur + zeta * components.i_sh_eur);
    const double annual_net =
        annual_income - pv_cost.omca_eur_per_year - bess_cost.omca_eur_per_year;
    const int first_operating_year = econ.operating_from_year_one ? 1 : 0;
    for (int y = first_operating_year; y <= econ.horizon_years; ++y)
        ledger.operating_eur[y] = annual_net;
    return ledger;
}

NPVTrajectory npv_from_ledger(const CashFlowLedger& ledger, double discount_rate) {
    if (discount_rate < 0.0) throw DomainError("npv_from_ledger: negative discount rate");
    NPVTrajectory traj;
    const int horizon = ledger.horizon_years();
    traj.npv_by_year_eur.resize(horizon + 1);
    double cumulative = 0.0;
    for (int y = 0; y <= horizon; ++y) {
        const double cash = -ledger.investment_eur[y] + ledger.operating_eur[y];
        cumulative += cash / std::pow(1.0 + discount_rate, y);
        traj.npv_by_year_eur[y] = cumulative;
    }
    traj.payback_years = payback(traj, horizon);
    return traj;
}

NPVTrajectory npv_trajectory(const CashFlowComponents& components, int n_panels, int n_units,
                             const PVSpec& pv, const BESSSpec& bess, const EconomicParams& econ,
                             double zeta) {
    return npv_from_ledger(build_ledger(components, n_panels, n_units, pv, bess, econ, zeta),
                           econ.discount_rate);
}

std::optional<int> payback(const NPVTrajectory& traj, int horizon_years) {
    const auto& npv = traj.npv_by_year_eur;
    if (npv.size() < static_cast<std::size_t>(horizon_years) + 1)
        throw StateError("payback: trajectory shorter than the horizon");
    // min { m : npv_m' >= 0 for all m' in [m, horizon] } -- a later dip
    // below zero disqualifies earlier candidates.
    std::optional<int> result;
    for (int m = horizon_years; m >= 0; --m) {
        if (npv[m] >= 0.0)
            result = m;
        else
            break;
    }
    return result;
}

double net_profit(const std::vector<NPVTrajectory>& trajectories) {
    double total = 0.0;
    for (const NPVTrajectory& t : trajectories) {
        if (t.npv_by_year_eur.empty()) throw StateError("net_profit: empty trajectory");
        total += t.npv_by_year_eur.back();
    }
    return total;
}

double bill_after(double bill_before_eur, const CashFlowComponents& components, double zeta,
                  int season_days) {
    return bill_before_eur -
           season_days *
               (components.r_sell_eur + components.r_self_eur + zeta * components.i_sh_eur);
}

} // namespace recsizer
