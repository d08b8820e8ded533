#include "recsizer/timeseries.hpp"

#include <cmath>

#include "recsizer/errors.hpp"

namespace recsizer {

CivilTime TimeSeries::timestamp_at(std::size_t i) const {
    return add_hours(start, static_cast<std::int64_t>(std::llround(step_hours * i)));
}

void TimeSeries::check_valid(const std::string& name) const {
    if (step_hours <= 0.0) throw DomainError(name + ": step_hours must be > 0");
    if (values.empty()) throw DomainError(name + ": series must have at least one sample");
    for (double v : values) {
        if (!std::isfinite(v)) throw DomainError(name + ": series contains a nonfinite value");
    }
}

void TimeSeries::check_nonnegative(const std::string& name) const {
    check_valid(name);
    for (double v : values) {
        if (v < 0.0) throw DomainError(name + ": series contains a negative value");
    }
}

bool aligned(const TimeSeries& a, const TimeSeries& b) {
    return a.start == b.start && a.step_hours == b.step_hours && a.values.size() == b.values.size();
}

void require_aligned(const TimeSeries& a, const TimeSeries& b, const std::string& what) {
    if (!aligned(a, b)) throw SeriesMismatchError(what + ": series are not aligned");
}

} // namespace recsizer
