#pragma once

#include <string>
#include <vector>

#include "recsizer/calendar.hpp"

namespace recsizer {

/// Uniformly sampled hourly series. Values are kW for power series and kWh
/// for energy series; the unit lives in the owning field's name.
struct TimeSeries {
    CivilTime start{};
    double step_hours = 1.0;
    std::vector<double> values;

    std::size_t size() const { return values.size(); }
    bool empty() const { return values.empty(); }

    /// Timestamp of sample i (hourly steps only).
    CivilTime timestamp_at(std::size_t i) const;

    /// Throws DomainError if step <= 0, values empty, or any value nonfinite.
    void check_valid(const std::string& name) const;
    /// check_valid plus all values >= 0.
    void check_nonnegative(const std::string& name) const;
};

/// True when both series share start, step and length.
bool aligned(const TimeSeries& a, const TimeSeries& b);

/// Throws SeriesMismatchError unless aligned.
void require_aligned(const TimeSeries& a, const TimeSeries& b, const std::string& what);

} // namespace recsizer
