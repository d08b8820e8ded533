#pragma once

#include <cstdint>
#include <vector>

#include "recsizer/calendar.hpp"

namespace recsizer {

/// Calendar label of one dispatch hour. Hours are 1..24; hour h of date D
/// covers the interval [h-1, h) o'clock and hour 24 (ending at midnight)
/// still belongs to D.
struct HourLabel {
    CivilDate date;
    int hour = 1;

    auto operator<=>(const HourLabel&) const = default;
};

/// The 24 labels of one calendar day, in order.
std::vector<HourLabel> day_hours(const CivilDate& date);

/// Per-participant flow variables over a dispatch horizon (kW), plus the
/// battery state (kWh) and the charge/discharge indicator values.
struct ParticipantDispatch {
    std::vector<double> p_self_kw;
    std::vector<double> p_sell_kw;
    std::vector<double> p_charge_kw;
    std::vector<double> p_discharge_kw;
    std::vector<double> soc_kwh;          // size T+1, initial state first
    std::vector<std::uint8_t> charge_on;  // b^c
    std::vector<std::uint8_t> discharge_on;
};

/// Flows for every participant over a labeled horizon, plus the
/// community-level shared power.
struct DispatchSolution {
    std::vector<HourLabel> hours;
    double dt_hours = 1.0;
    std::vector<ParticipantDispatch> participants;
    std::vector<double> shared_kw;
};

} // namespace recsizer
