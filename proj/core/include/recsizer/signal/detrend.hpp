#pragma once

#include <vector>

#include "recsizer/timeseries.hpp"

namespace recsizer {

struct DetrendResult {
    std::vector<double> residual; // y(t) = ln L(t) - T(t)
    std::vector<double> trend;    // T(t), in log space
};

/// Log-transforms the load and removes a slow trend estimated by a centered
/// moving average whose window approximates a 1/730 day^-1 lowpass. Edge
/// windows shrink symmetrically so the average stays centered. Samples below
/// floor_kwh are floored before the log; a nonpositive floor throws.
DetrendResult log_detrend(const TimeSeries& load, double floor_value = 1e-3);

/// Centered moving average with symmetric edge shrinking.
std::vector<double> moving_average_centered(const std::vector<double>& values,
                                            std::size_t window);

} // namespace recsizer
