#pragma once

#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "recsizer/calendar.hpp"

// Writes a deterministic synthetic community fixture to disk: five
// households with one roofless participant, one year of hourly load and
// weather, and a config with the default component datasheet.
namespace testsupport {

struct FixtureFiles {
    std::filesystem::path config;
    std::filesystem::path loads;
    std::filesystem::path weather;
};

struct FixtureHousehold {
    std::string id;
    double base_kw;
    double roof_m2;
    double bill_eur;
};

inline std::vector<FixtureHousehold> fixture_households() {
    return {{"casa1", 1.1, 30.0, 1450.0},
            {"casa2", 0.8, 0.0, 1050.0},
            {"casa3", 1.5, 18.0, 1900.0},
            {"casa4", 0.6, 8.0, 820.0},
            {"casa5", 2.0, 45.0, 2600.0}};
}

inline double fixture_load_kw(const FixtureHousehold& h, std::int64_t hour_of_year,
                              recsizer::Weekday dow, double noise) {
    const int hour = static_cast<int>(hour_of_year % 24);
    const int day = static_cast<int>(hour_of_year / 24);
    // Morning and evening peaks, weekday structure, winter heating bump.
    const double daily = 0.55 + 0.45 * std::exp(-0.5 * std::pow((hour - 8.0) / 2.2, 2)) +
                         0.85 * std::exp(-0.5 * std::pow((hour - 19.5) / 2.8, 2));
    const bool weekend = dow == recsizer::Weekday::Sat || dow == recsizer::Weekday::Sun;
    const double weekly = weekend ? 1.18 : 1.0;
    const double seasonal =
        1.0 + 0.28 * std::cos(2.0 * std::numbers::pi * (day - 15) / 365.25);
    return h.base_kw * daily * weekly * seasonal * std::exp(noise);
}

inline double fixture_irradiance(std::int64_t hour_of_year) {
    const int hour = static_cast<int>(hour_of_year % 24);
    const int day = static_cast<int>(hour_of_year / 24);
    const double seasonal_peak =
        0.72 + 0.24 * std::sin(2.0 * std::numbers::pi * (day - 81) / 365.25);
    const double daylight = 12.0 + 3.2 * std::sin(2.0 * std::numbers::pi * (day - 81) / 365.25);
    const double sunrise = 13.0 - daylight / 2.0;
    const double pos = (hour + 0.5 - sunrise) / daylight;
    if (pos <= 0.0 || pos >= 1.0) return 0.0;
    return seasonal_peak * std::sin(pos * std::numbers::pi);
}

inline double fixture_ambient(std::int64_t hour_of_year) {
    const int hour = static_cast<int>(hour_of_year % 24);
    const int day = static_cast<int>(hour_of_year / 24);
    return 13.0 + 9.5 * std::sin(2.0 * std::numbers::pi * (day - 105) / 365.25) +
           3.5 * std::sin(2.0 * std::numbers::pi * (hour - 9) / 24.0);
}

inline FixtureFiles write_fixture(const std::filesystem::path& dir) {
    namespace fs = std::filesystem;
    fs::create_directories(dir);
    FixtureFiles files{dir / "rec.toml", dir / "loads.csv", dir / "weather.csv"};

    const auto households = fixture_households();
    const recsizer::CivilTime start{{2023, 1, 1}, 0};
    const int n_hours = 24 * 365;
    std::mt19937 rng(20230101);
    std::normal_distribution<double> noise(0.0, 0.08);

    {
        std::ofstream out(files.loads);
        out << "timestamp";
        for (const auto& h : households) out << ',' << h.id;
        out << "\n";
        std::vector<std::vector<double>> noises(households.size());
        for (auto& v : noises)
            for (int t = 0; t < n_hours; ++t) v.push_back(noise(rng));
        for (int t = 0; t < n_hours; ++t) {
            const recsizer::CivilTime stamp = recsizer::add_hours(start, t);
            out << recsizer::format_timestamp(stamp);
            const recsizer::Weekday dow = recsizer::weekday_of(stamp.date);
            for (std::size_t n = 0; n < households.size(); ++n) {
                char buf[24];
                std::snprintf(buf, sizeof buf, "%.5f",
                              fixture_load_kw(households[n], t, dow, noises[n][t]));
                out << ',' << buf;
            }
            out << "\n";
        }
    }
    {
        std::ofstream out(files.weather);
        out << "timestamp,irradiance_kw_m2,ambient_c\n";
        for (int t = 0; t < n_hours; ++t) {
            const recsizer::CivilTime stamp = recsizer::add_hours(start, t);
            char buf[48];
            std::snprintf(buf, sizeof buf, "%.5f,%.3f", fixture_irradiance(t),
                          fixture_ambient(t));
            out << recsizer::format_timestamp(stamp) << ',' << buf << "\n";
        }
    }
    {
        std::ofstream out(files.config);
        out << "[pv]\n"
               "rated_kw = 0.43\n"
               "panel_area_m2 = 2.4\n"
               "lifespan_years = 25.0\n"
               "gamma_pct_per_c = 0.043\n"
               "cost_per_kw_eur = 1200.0\n"
               "stc_irradiance_kw_m2 = 1.0\n"
               "stc_temp_c = 25.0\n"
               "noct_c = 45.0\n"
               "opex_per_kw_year_eur = 24.0\n"
               "ca_per_kw_year_eur = 1.0\n"
               "\n"
               "[bess]\n"
               "capacity_kwh = 5.0\n"
               "eta_charge = 0.9\n"
               "eta_discharge = 0.9\n"
               "p_charge_max_kw = 1.25\n"
               "p_discharge_max_kw = 1.25\n"
               "soc_min_kwh = 0.5\n"
               "soc_max_kwh = 4.5\n"
               "cost_per_kwh_eur = 250.0\n"
               "lifespan_years = 12\n"
               "opex_per_kwh_year_eur = 24.0\n"
               "ca_per_kwh_year_eur = 1.0\n"
               "max_units = 4\n"
               "\n"
               "[tariff]\n"
               "buy_f1_eur_kwh = 0.195\n"
               "buy_f2_eur_kwh = 0.165\n"
               "buy_f3_eur_kwh = 0.125\n"
               "sell_f1_eur_kwh = 0.075\n"
               "sell_f2_eur_kwh = 0.055\n"
               "sell_f3_eur_kwh = 0.035\n"
               "share_eur_kwh = 0.11\n"
               "transmission_eur_kwh = 0.00822\n"
               "\n"
               "[economics]\n"
               "discount_rate = 0.03\n"
               "horizon_years = 25\n"
               "season_days = 91\n"
               "\n";
        for (const auto& h : households) {
            out << "[[participants]]\n"
                << "id = \"" << h.id << "\"\n"
                << "roof_area_m2 = " << h.roof_m2 << "\n"
                << "annual_bill_eur = " << h.bill_eur << "\n\n";
        }
    }
    return files;
}

} // namespace testsupport
