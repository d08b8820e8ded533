#pragma once

#include <optional>
#include <string>
#include <vector>

#include "recsizer/timeseries.hpp"

namespace recsizer {

/// Single-panel PV characteristics and per-kW cost terms.
/// Defaults are a common crystalline rooftop module.
struct PVSpec {
    double rated_kw = 0.43;            // nameplate of one panel
    double panel_area_m2 = 2.4;        // footprint of one panel
    double lifespan_years = 25.0;
    double gamma_pct_per_c = 0.043;    // power temperature coefficient, %/degC
    double cost_per_kw_eur = 1200.0;   // procurement cost
    double stc_irradiance_kw_m2 = 1.0; // standard test conditions
    double stc_temp_c = 25.0;
    double noct_c = 45.0;              // nominal operating cell temperature
    double opex_per_kw_year_eur = 24.0;
    double ca_per_kw_year_eur = 1.0;   // facilitator contract-agreement fee

    /// Procurement cost of one panel (cost_per_kw * rated_kw).
    double panel_cost_eur() const { return cost_per_kw_eur * rated_kw; }
};

/// Single battery unit characteristics and per-kWh cost terms.
struct BESSSpec {
    double capacity_kwh = 5.0;
    double eta_charge = 0.9;
    double eta_discharge = 0.9;
    double p_charge_max_kw = 1.25;  // per unit
    double p_discharge_max_kw = 1.25;
    double soc_min_kwh = 0.5;       // per unit
    double soc_max_kwh = 4.5;
    double cost_per_kwh_eur = 250.0;
    int lifespan_years = 12;        // replacement happens at this year
    double opex_per_kwh_year_eur = 24.0;
    double ca_per_kwh_year_eur = 1.0;
    int max_units = 20;             // fleet cap per participant

    /// Procurement cost of one unit (cost_per_kwh * capacity).
    double unit_cost_eur() const { return cost_per_kwh_eur * capacity_kwh; }
};

struct ParticipantSpec {
    std::string id;
    double roof_area_m2 = 0.0;
    TimeSeries demand_kw;          // may be empty until loaded
    double annual_bill_eur = 0.0;  // electricity bill before joining
    std::string demand_csv;        // source path, informational
};

/// Time-of-use rates over the three Italian bands plus the community
/// sharing and transmission incentives.
struct TariffSchedule {
    double buy_f1_eur_kwh = 0.195;
    double buy_f2_eur_kwh = 0.165;
    double buy_f3_eur_kwh = 0.125;
    double sell_f1_eur_kwh = 0.075;
    double sell_f2_eur_kwh = 0.055;
    double sell_f3_eur_kwh = 0.035;
    double share_eur_kwh = 0.11;          // paid on energy shared inside the community
    double transmission_eur_kwh = 0.00822; // avoided-transmission incentive
    std::vector<CivilDate> holidays;       // extra dates rated off-peak, default none
};

struct EconomicParams {
    double discount_rate = 0.03;   // per year
    int horizon_years = 25;        // |Y|, years 0..horizon inclusive in sums
    int season_days = 91;          // days represented by one seasonal day
    std::optional<int> max_payback; // optional cap, years
    /// When false (default) operating cash flows enter the cumulative sum
    /// from year 0; when true they start at year 1.
    bool operating_from_year_one = false;
};

struct WeatherData {
    TimeSeries irradiance_kw_m2;
    TimeSeries ambient_c;
    std::string irradiance_csv;
    std::string ambient_csv;
};

struct RECConfig {
    std::vector<ParticipantSpec> participants;
    PVSpec pv;
    BESSSpec bess;
    TariffSchedule tariff;
    EconomicParams economics;
    WeatherData weather;
};

} // namespace recsizer
