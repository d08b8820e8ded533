#pragma once

#include <map>
#include <string>

#include "recsizer/config.hpp"
#include "recsizer/signal/repdays.hpp"
#include "recsizer/sizing/problem.hpp"

namespace recsizer::sizing {

/// Representative inputs of one sizing run: a demand profile set per
/// participant id plus the weather reduction.
struct SizingInputs {
    std::map<std::string, RepresentativeDays> demand;
    WeatherRepDays weather;
};

/// Builds the periodic-day problem from a validated config: stacks the four
/// seasonal days into one labeled horizon, derives per-panel generation from
/// the weather reduction, computes tariff rate series, distribution factors
/// and the discounted per-unit cost coefficients.
SizingProblem assemble(const RECConfig& config, const SizingInputs& inputs);

} // namespace recsizer::sizing
