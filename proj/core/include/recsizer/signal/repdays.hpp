#pragma once

#include <array>
#include <optional>
#include <vector>

#include "recsizer/signal/detrend.hpp"
#include "recsizer/signal/fista.hpp"
#include "recsizer/signal/fourier.hpp"
#include "recsizer/timeseries.hpp"

namespace recsizer {

/// Fitted multi-seasonal model of one load series in log space.
struct SeasonalModel {
    Eigen::VectorXd theta;
    RegressorSpec regressors;
    double trend_level = 0.0;     // mean of the trend series, used at reconstruction
    double lambda = 0.0;
    CivilTime series_start{};
    double step_hours = 1.0;
    std::size_t n_samples = 0;
    bool converged = true;
};

/// Four labeled 24-value daily profiles, one per season.
struct RepresentativeDays {
    std::array<CivilDate, kSeasonCount> dates{};
    std::array<std::array<double, 24>, kSeasonCount> values{};

    const std::array<double, 24>& season(Season s) const {
        return values[static_cast<int>(s)];
    }
};

struct FitOptions {
    RegressorSpec regressors;
    /// Fixed l1 weight; unset selects lambda_frac * lambda_max.
    std::optional<double> lambda;
    double lambda_frac = 0.1;
    /// Blocked k-fold cross-validation over a log grid instead of the fixed
    /// fraction.
    bool cross_validate = false;
    int cv_folds = 5;
    int cv_grid = 20;
    double load_floor = 1e-3;
    FistaOptions fista;
};

/// log-detrend -> tensor-product Fourier design -> l1-regularized fit.
SeasonalModel fit_seasonal_model(const TimeSeries& load, const FitOptions& options = {});

/// Model value exp(trend_level + F(t)) at an hour offset from the series start.
double reconstruct_at(const SeasonalModel& model, double t_hours);

/// The Wednesday nearest each season midpoint (Feb/May/Aug/Nov 15) within
/// the series' first year.
std::array<CivilDate, kSeasonCount> representative_dates(const CivilTime& start,
                                                         std::size_t n_samples,
                                                         double step_hours);

/// Reconstructs the fitted profile on the four season-representative days.
RepresentativeDays representative_days(const SeasonalModel& model);

/// Pair of per-season hour-of-day mean profiles. Requires at least one year
/// of data (throws InsufficientDataError otherwise).
struct WeatherRepDays {
    RepresentativeDays irradiance_kw_m2;
    RepresentativeDays ambient_c;
};

WeatherRepDays weather_rep_days(const TimeSeries& irradiance, const TimeSeries& ambient);

} // namespace recsizer
