#pragma once

#include <vector>

#include "recsizer/config.hpp"
#include "recsizer/dispatch.hpp"

namespace recsizer {

/// Italian time-of-use bands: F1 peak, F2 shoulder, F3 off-peak.
enum class Band { F1 = 0, F2 = 1, F3 = 2 };

const char* to_string(Band b);

/// Band of a weekday/hour pair (hour 1..24):
///   Mon-Fri: 9..19 F1; 8 and 20..23 F2; 24 and 1..7 F3.
///   Sat:     8..23 F2; 24 and 1..7 F3.
///   Sun:     all F3.
Band band_of(Weekday day, int hour);

/// Band of a labeled hour; configured holiday dates rate as off-peak.
Band band_at(const HourLabel& label, const std::vector<CivilDate>& holidays);

enum class RateKind { Buy, Sell };

double rate_for(const TariffSchedule& schedule, RateKind kind, Band band);

/// Pointwise rate over a labeled span.
std::vector<double> rate_series(const TariffSchedule& schedule, RateKind kind,
                                const std::vector<HourLabel>& span);

/// Revenue, savings and community incentive accumulated over one accounting
/// span (here the representative-day horizon). i_sh is community-level and
/// identical across participants.
struct CashFlowComponents {
    double r_sell_eur = 0.0;
    double r_self_eur = 0.0;
    double i_sh_eur = 0.0;
};

/// Integrates rates over the dispatch:
///   r_sell = sum C^S_t * p_sell_t * dt, r_self = sum C^P_t * p_self_t * dt,
///   i_sh   = sum (C^E + C^T) * shared_t * dt.
std::vector<CashFlowComponents> period_cashflow(const DispatchSolution& dispatch,
                                                const TariffSchedule& schedule);

} // namespace recsizer
