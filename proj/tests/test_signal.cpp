#include <doctest.h>

#include <cmath>
#include <numbers>

#include "recsizer/errors.hpp"
#include "recsizer/signal/detrend.hpp"
#include "recsizer/signal/fourier.hpp"
#include "recsizer/signal/repdays.hpp"

using namespace recsizer;
using doctest::Approx;

namespace {

TimeSeries hourly_series(int n, const CivilTime& start = {{2023, 1, 1}, 0}) {
    TimeSeries s;
    s.start = start;
    s.step_hours = 1.0;
    s.values.resize(n);
    return s;
}

} // namespace

TEST_CASE("log detrend of a constant load") {
    TimeSeries load = hourly_series(24 * 40);
    for (double& v : load.values) v = 3.5;
    const DetrendResult r = log_detrend(load);
    for (std::size_t i = 0; i < load.size(); ++i) {
        CHECK(r.trend[i] == Approx(std::log(3.5)).epsilon(1e-12));
        CHECK(r.residual[i] == Approx(0.0).scale(1.0));
    }
}

TEST_CASE("log detrend recovers an exponential ramp") {
    TimeSeries load = hourly_series(24 * 200);
    for (std::size_t i = 0; i < load.size(); ++i)
        load.values[i] = std::exp(0.001 * static_cast<double>(i));
    const DetrendResult r = log_detrend(load);
    const std::size_t margin = load.size() / 10;
    for (std::size_t i = margin; i + margin < load.size(); ++i) {
        const double truth = 0.001 * static_cast<double>(i);
        CHECK(std::abs(r.trend[i] - truth) <= 0.05 * std::max(1.0, std::abs(truth)));
    }
}

TEST_CASE("log detrend of a daily sinusoid keeps the oscillation in the residual") {
    const int n = 24 * 365;
    TimeSeries load = hourly_series(n);
    for (int i = 0; i < n; ++i)
        load.values[i] = std::exp(0.5 + 0.3 * std::sin(2.0 * std::numbers::pi * i / 24.0));
    const DetrendResult r = log_detrend(load);
    for (int i = 1000; i < n - 1000; ++i) {
        CHECK(std::abs(r.trend[i] - 0.5) <= 0.01);
        CHECK(std::abs(r.residual[i] -
                       0.3 * std::sin(2.0 * std::numbers::pi * i / 24.0)) <= 0.02);
    }
}

TEST_CASE("nonpositive floor is rejected and zeros are floored") {
    TimeSeries load = hourly_series(48);
    load.values.assign(48, 0.0);
    CHECK_THROWS_AS(log_detrend(load, 0.0), DomainError);
    const DetrendResult r = log_detrend(load, 1e-3);
    CHECK(r.trend[0] == Approx(std::log(1e-3)));
}

TEST_CASE("regressor column counts follow the harmonic choices") {
    RegressorSpec spec;
    spec.n_yearly = 2;
    spec.n_weekly = 3;
    spec.n_daily = 0;
    CHECK(spec.product_columns() == 30);
    CHECK(build_regressors(10, spec).cols() == 30);

    spec.n_yearly = 1;
    spec.n_weekly = 1;
    CHECK(spec.product_columns() == 6);
    CHECK(build_regressors(10, spec).cols() == 6);

    spec.n_daily = 4;
    CHECK(spec.total_columns() == 6 + 8);
    CHECK(build_regressors(10, spec).cols() == 14);
}

TEST_CASE("first product column is the intercept") {
    RegressorSpec spec;
    const Eigen::MatrixXd phi = build_regressors(50, spec);
    for (int i = 0; i < 50; ++i) CHECK(phi(i, 0) == Approx(1.0));
}

TEST_CASE("distinct frequency columns are orthogonal on a full period grid") {
    RegressorSpec spec;
    spec.n_yearly = 2;
    spec.n_weekly = 2;
    spec.n_daily = 2;
    spec.period_yearly_hours = 240.0;
    spec.period_weekly_hours = 24.0;
    spec.period_daily_hours = 8.0;
    const int n = 240; // one full "yearly" period
    const Eigen::MatrixXd phi = build_regressors(n, spec);
    for (int i = 0; i < phi.cols(); ++i) {
        for (int j = i + 1; j < phi.cols(); ++j) {
            const double ni = phi.col(i).norm();
            const double nj = phi.col(j).norm();
            REQUIRE(ni > 0.0);
            REQUIRE(nj > 0.0);
            INFO("columns " << i << " and " << j);
            CHECK(std::abs(phi.col(i).dot(phi.col(j))) / (ni * nj) <= 1e-8);
        }
    }
}

TEST_CASE("lambda_max is the smallest all-zero-optimal weight") {
    SUBCASE("zero target gives zero") {
        const Eigen::MatrixXd phi = Eigen::MatrixXd::Random(20, 5);
        CHECK(lambda_max(phi, Eigen::VectorXd::Zero(20)) == 0.0);
    }
    SUBCASE("single all-ones column against the mean") {
        const int n = 16;
        Eigen::MatrixXd phi = Eigen::MatrixXd::Ones(n, 1);
        Eigen::VectorXd y(n);
        for (int i = 0; i < n; ++i) y[i] = 0.25 + 0.5 * std::sin(i * 1.7);
        const double mean = y.mean();
        CHECK(lambda_max(phi, y) == Approx(2.0 * std::abs(mean)).epsilon(1e-12));
    }
    SUBCASE("scaling the target scales lambda_max") {
        Eigen::MatrixXd phi = Eigen::MatrixXd::Random(30, 6);
        Eigen::VectorXd y = Eigen::VectorXd::Random(30);
        const double base = lambda_max(phi, y);
        CHECK(lambda_max(phi, Eigen::VectorXd(3.0 * y)) == Approx(3.0 * base).epsilon(1e-12));
        CHECK(lambda_max(phi, Eigen::VectorXd(-2.0 * y)) == Approx(2.0 * base).epsilon(1e-12));
    }
}

TEST_CASE("representative dates are Wednesdays near the season midpoints") {
    const CivilTime start{{2023, 1, 1}, 0};
    const auto dates = representative_dates(start, 24 * 365, 1.0);
    for (int s = 0; s < kSeasonCount; ++s) {
        CHECK(weekday_of(dates[s]) == Weekday::Wed);
        const auto mid = season_midpoint(static_cast<Season>(s), 2023);
        CHECK(std::abs(days_from_civil(dates[s]) - days_from_civil(mid)) <= 3);
    }
}

TEST_CASE("flat model reconstructs flat representative days") {
    SeasonalModel model;
    model.regressors = RegressorSpec{};
    model.theta = Eigen::VectorXd::Zero(model.regressors.total_columns());
    model.trend_level = std::log(2.0);
    model.series_start = {{2023, 1, 1}, 0};
    model.step_hours = 1.0;
    model.n_samples = 24 * 365;
    const RepresentativeDays days = representative_days(model);
    for (int s = 0; s < kSeasonCount; ++s)
        for (int h = 0; h < 24; ++h) CHECK(days.values[s][h] == Approx(2.0));
}

TEST_CASE("weather reduction averages by season and hour") {
    const int n = 24 * 366;
    TimeSeries irr = hourly_series(n);
    TimeSeries amb = hourly_series(n);
    SUBCASE("constant irradiance stays constant") {
        irr.values.assign(n, 0.5);
        amb.values.assign(n, 10.0);
        const WeatherRepDays w = weather_rep_days(irr, amb);
        for (int s = 0; s < kSeasonCount; ++s)
            for (int h = 0; h < 24; ++h) {
                CHECK(w.irradiance_kw_m2.values[s][h] == Approx(0.5));
                CHECK(w.ambient_c.values[s][h] == Approx(10.0));
            }
    }
    SUBCASE("night hours average to exactly zero") {
        for (int i = 0; i < n; ++i) {
            const int hour = i % 24;
            irr.values[i] = (hour >= 8 && hour <= 16) ? 0.7 : 0.0;
            amb.values[i] = 15.0;
        }
        const WeatherRepDays w = weather_rep_days(irr, amb);
        for (int s = 0; s < kSeasonCount; ++s) {
            CHECK(w.irradiance_kw_m2.values[s][2] == 0.0);
            CHECK(w.irradiance_kw_m2.values[s][23] == 0.0);
            CHECK(w.irradiance_kw_m2.values[s][12] == Approx(0.7));
        }
    }
    SUBCASE("clear-sky seasonal amplitudes are recovered") {
        for (int i = 0; i < n; ++i) {
            const int hour = i % 24;
            const int day = i / 24;
            // Seasonal amplitude peaking mid-year, zero at night.
            const double seasonal =
                0.6 + 0.4 * std::sin(2.0 * std::numbers::pi * (day - 81) / 365.25);
            const double diurnal = std::max(0.0, std::sin((hour - 6) * std::numbers::pi / 12.0));
            irr.values[i] = seasonal * diurnal;
            amb.values[i] = 12.0 + 10.0 * std::sin(2.0 * std::numbers::pi * (day - 105) / 365.25);
        }
        const WeatherRepDays w = weather_rep_days(irr, amb);
        // Summer noon beats winter noon by roughly the seasonal swing.
        const double summer_noon = w.irradiance_kw_m2.values[(int)Season::Summer][12];
        const double winter_noon = w.irradiance_kw_m2.values[(int)Season::Winter][12];
        CHECK(summer_noon > winter_noon * 1.5);
        // Hour-of-day means stay within 5% of the generator's seasonal mean.
        for (int s = 0; s < kSeasonCount; ++s) {
            double expected = 0.0;
            long count = 0;
            for (int i = 0; i < n; ++i) {
                if (i % 24 != 12) continue;
                if (static_cast<int>(season_of(irr.timestamp_at(i).date)) != s) continue;
                expected += irr.values[i];
                ++count;
            }
            expected /= static_cast<double>(count);
            CHECK(w.irradiance_kw_m2.values[s][12] == Approx(expected).epsilon(0.05));
        }
    }
    SUBCASE("less than a year of data is rejected") {
        TimeSeries short_irr = hourly_series(24 * 100);
        TimeSeries short_amb = hourly_series(24 * 100);
        short_irr.values.assign(24 * 100, 0.1);
        short_amb.values.assign(24 * 100, 5.0);
        CHECK_THROWS_AS(weather_rep_days(short_irr, short_amb), InsufficientDataError);
    }
}
