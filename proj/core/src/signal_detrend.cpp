#include "recsizer/signal/detrend.hpp"

#include <algorithm>
#include <cmath>

#include "recsizer/errors.hpp"

namespace recsizer {

std::vector<double> moving_average_centered(const std::vector<double>& values,
                                            std::size_t window) {
    const std::size_t n = values.size();
    std::vector<double> out(n);
    if (n == 0) return out;
    window = std::min(window, n);
    const std::size_t half = window / 2;

    std::vector<double> prefix(n + 1, 0.0);
    for (std::size_t i = 0; i < n; ++i) prefix[i + 1] = prefix[i] + values[i];

    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t h = std::min({half, i, n - 1 - i});
        const std::size_t lo = i - h;
        const std::size_t hi = i + h;
        out[i] = (prefix[hi + 1] - prefix[lo]) / static_cast<double>(hi - lo + 1);
    }
    return out;
}

DetrendResult log_detrend(const TimeSeries& load, double floor_value) {
    load.check_valid("log_detrend input");
    if (floor_value <= 0.0) throw DomainError("log_detrend: floor must be > 0");

    const std::size_t n = load.size();
    std::vector<double> log_load(n);
    for (std::size_t i = 0; i < n; ++i)
        log_load[i] = std::log(std::max(load.values[i], floor_value));

    // 731 days at the series' sampling rate, capped at the series length.
    const double samples_per_day = 24.0 / load.step_hours;
    const auto window = static_cast<std::size_t>(std::llround(731.0 * samples_per_day));

    DetrendResult result;
    result.trend = moving_average_centered(log_load, window);
    result.residual.resize(n);
    for (std::size_t i = 0; i < n; ++i) result.residual[i] = log_load[i] - result.trend[i];
    return result;
}

} // namespace recsizer
