#include "recsizer/signal/repdays.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "recsizer/errors.hpp"

namespace recsizer {

namespace {

Eigen::VectorXd to_vector(const std::vector<double>& v) {
    return Eigen::Map<const Eigen::VectorXd>(v.data(), static_cast<Eigen::Index>(v.size()));
}

double select_lambda_cv(const Eigen::MatrixXd& phi, const Eigen::VectorXd& y,
                        const FitOptions& options) {
    const double lmax = lambda_max(phi, y);
    if (lmax <= 0.0) return 0.0;
    const int folds = std::max(2, options.cv_folds);
    const int grid = std::max(2, options.cv_grid);
    const Eigen::Index n = phi.rows();

    // Log-spaced grid from lambda_max down four decades.
    std::vector<double> lambdas(grid);
    for (int g = 0; g < grid; ++g)
        lambdas[g] = lmax * std::pow(10.0, -4.0 * g / (grid - 1));

    double best_lambda = lambdas.front();
    double best_score = std::numeric_limits<double>::infinity();
    for (double lambda : lambdas) {
        double score = 0.0;
        for (int f = 0; f < folds; ++f) {
            // Contiguous blocks keep the validation fold temporally coherent.
            const Eigen::Index lo = n * f / folds;
            const Eigen::Index hi = n * (f + 1) / folds;
            const Eigen::Index held = hi - lo;
            Eigen::MatrixXd phi_train(n - held, phi.cols());
            Eigen::VectorXd y_train(n - held);
            phi_train.topRows(lo) = phi.topRows(lo);
            y_train.head(lo) = y.head(lo);
            phi_train.bottomRows(n - hi) = phi.bottomRows(n - hi);
            y_train.tail(n - hi) = y.tail(n - hi);
            const FistaResult fit = fista(phi_train, y_train, lambda, options.fista);
            score += (phi.middleRows(lo, held) * fit.theta - y.segment(lo, held)).squaredNorm();
        }
        if (score < best_score) {
            best_score = score;
            best_lambda = lambda;
        }
    }
    return best_lambda;
}

} // namespace

SeasonalModel fit_seasonal_model(const TimeSeries& load, const FitOptions& options) {
    const DetrendResult detrended = log_detrend(load, options.load_floor);
    const auto n = static_cast<int>(load.size());
    const Eigen::MatrixXd phi = build_regressors(n, options.regressors, 0.0, load.step_hours);
    const Eigen::VectorXd y = to_vector(detrended.residual);

    SeasonalModel model;
    model.regressors = options.regressors;
    model.series_start = load.start;
    model.step_hours = load.step_hours;
    model.n_samples = load.size();
    model.trend_level =
        std::accumulate(detrended.trend.begin(), detrended.trend.end(), 0.0) / load.size();

    if (options.lambda) {
        model.lambda = *options.lambda;
    } else if (options.cross_validate) {
        model.lambda = select_lambda_cv(phi, y, options);
    } else {
        model.lambda = options.lambda_frac * lambda_max(phi, y);
    }

    const FistaResult fit = fista(phi, y, model.lambda, options.fista);
    model.theta = fit.theta;
    model.converged = fit.converged;
    return model;
}

double reconstruct_at(const SeasonalModel& model, double t_hours) {
    const Eigen::VectorXd row = regressor_row(t_hours, model.regressors);
    return std::exp(model.trend_level + row.dot(model.theta));
}

std::array<CivilDate, kSeasonCount> representative_dates(const CivilTime& start,
                                                         std::size_t n_samples,
                                                         double step_hours) {
    const std::int64_t start_hour = hours_from_civil(start);
    const std::int64_t span_hours =
        static_cast<std::int64_t>(std::floor(step_hours * (n_samples > 0 ? n_samples - 1 : 0)));
    const std::int64_t first_day = hours_from_civil({start.date, 0}) / 24 + (start.hour > 0 ? 1 : 0);
    const std::int64_t last_day = (start_hour + span_hours + 1) / 24 - 1;

    std::array<CivilDate, kSeasonCount> dates{};
    for (int s = 0; s < kSeasonCount; ++s) {
        // Anchor at the season midpoint of the year(s) the series touches and
        // pick the nearest one that falls inside the span.
        const CivilDate start_date = civil_from_days(first_day);
        std::int64_t best = -1;
        std::int64_t best_dist = std::numeric_limits<std::int64_t>::max();
        for (int year = start_date.year - 1; year <= start_date.year + 2; ++year) {
            const std::int64_t mid = days_from_civil(season_midpoint(static_cast<Season>(s), year));
            if (mid < first_day || mid > last_day) continue;
            // Nearest Wednesday to the midpoint, still inside the span.
            for (std::int64_t offset = 0; offset <= 6; ++offset) {
                for (const std::int64_t cand : {mid + offset, mid - offset}) {
                    if (cand < first_day || cand > last_day) continue;
                    if (weekday_of(civil_from_days(cand)) != Weekday::Wed) continue;
                    const std::int64_t dist = std::abs(cand - mid);
                    if (dist < best_dist) {
                        best_dist = dist;
                        best = cand;
                    }
                }
                if (best >= 0) break;
            }
            if (best >= 0) break;
        }
        if (best < 0)
            throw InsufficientDataError(
                "representative_dates: series does not cover a full day near the " +
                std::string(to_string(static_cast<Season>(s))) + " midpoint");
        dates[s] = civil_from_days(best);
    }
    return dates;
}

RepresentativeDays representative_days(const SeasonalModel& model) {
    RepresentativeDays days;
    days.dates = representative_dates(model.series_start, model.n_samples, model.step_hours);
    const std::int64_t start_hour = hours_from_civil(model.series_start);
    for (int s = 0; s < kSeasonCount; ++s) {
        const std::int64_t day_start = hours_from_civil({days.dates[s], 0});
        for (int h = 0; h < 24; ++h) {
            const double t = static_cast<double>(day_start + h - start_hour);
            days.values[s][h] = reconstruct_at(model, t);
        }
    }
    return days;
}

WeatherRepDays weather_rep_days(const TimeSeries& irradiance, const TimeSeries& ambient) {
    require_aligned(irradiance, ambient, "weather_rep_days");
    irradiance.check_nonnegative("weather irradiance");
    ambient.check_valid("weather ambient");
    const double span_hours = irradiance.step_hours * static_cast<double>(irradiance.size());
    if (span_hours < 365.0 * 24.0)
        throw InsufficientDataError("weather_rep_days: need at least one year of data");

    WeatherRepDays result;
    result.irradiance_kw_m2.dates =
        representative_dates(irradiance.start, irradiance.size(), irradiance.step_hours);
    result.ambient_c.dates = result.irradiance_kw_m2.dates;

    std::array<std::array<double, 24>, kSeasonCount> irr_sum{}, amb_sum{};
    std::array<std::array<std::int64_t, 24>, kSeasonCount> count{};
    for (std::size_t i = 0; i < irradiance.size(); ++i) {
        const CivilTime stamp = irradiance.timestamp_at(i);
        const int s = static_cast<int>(season_of(stamp.date));
        irr_sum[s][stamp.hour] += irradiance.values[i];
        amb_sum[s][stamp.hour] += ambient.values[i];
        count[s][stamp.hour] += 1;
    }
    for (int s = 0; s < kSeasonCount; ++s) {
        for (int h = 0; h < 24; ++h) {
            if (count[s][h] == 0)
                throw InsufficientDataError("weather_rep_days: a season/hour cell is empty");
            result.irradiance_kw_m2.values[s][h] = irr_sum[s][h] / count[s][h];
            result.ambient_c.values[s][h] = amb_sum[s][h] / count[s][h];
        }
    }
    return result;
}

} // namespace recsizer
