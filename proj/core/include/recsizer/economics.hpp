#pragma once

#include <optional>
#include <vector>

#include "recsizer/config.hpp"
#include "recsizer/tariff.hpp"
#include "recsizer/timeseries.hpp"

namespace recsizer {

/// Per-year investment and net operating cash flow of one participant,
/// indexed by year 0..horizon.
struct CashFlowLedger {
    std::vector<double> investment_eur;
    std::vector<double> operating_eur;

    int horizon_years() const { return static_cast<int>(investment_eur.size()) - 1; }
};

/// Cumulative discounted cash flow by year, plus the payback year when the
/// trajectory reaches and keeps a nonnegative value.
struct NPVTrajectory {
    std::vector<double> npv_by_year_eur; // index m = 0..horizon
    std::optional<int> payback_years;
};

/// Demand-proportional incentive shares: zeta_n = energy_n / total energy.
/// Throws DegenerateDemandError when total demand is zero.
std::vector<double> distribution_factors(const std::vector<std::vector<double>>& demands_kw,
                                         double dt_hours);
std::vector<double> distribution_factors(const std::vector<TimeSeries>& demands);

/// Investment at year 0 is PV plus BESS capex; the BESS is bought again at
/// its lifespan year. Operating years carry season_days * (representative-day
/// revenue + savings + zeta * incentive) minus the yearly OMCA of both fleets.
CashFlowLedger build_ledger(const CashFlowComponents& components, int n_panels, int n_units,
                            const PVSpec& pv, const BESSSpec& bess, const EconomicParams& econ,
                            double zeta);

/// Cumulative discounted sum of the ledger. Throws DomainError for r < 0.
NPVTrajectory npv_from_ledger(const CashFlowLedger& ledger, double discount_rate);

NPVTrajectory npv_trajectory(const CashFlowComponents& components, int n_panels, int n_units,
                             const PVSpec& pv, const BESSSpec& bess, const EconomicParams& econ,
                             double zeta);

/// First year from which the trajectory is nonnegative through the horizon.
std::optional<int> payback(const NPVTrajectory& traj, int horizon_years);

/// Community net profit: sum of terminal NPVs.
double net_profit(const std::vector<NPVTrajectory>& trajectories);

/// Annual bill after joining: bill_before - season_days * (representative-day
/// revenue + savings + zeta * incentive).
double bill_after(double bill_before_eur, const CashFlowComponents& components, double zeta,
                  int season_days);

} // namespace recsizer
