#include "recsizer/sizing/assemble.hpp"

#include <cmath>

#include "recsizer/bess.hpp"
#include "recsizer/economics.hpp"
#include "recsizer/errors.hpp"
#include "recsizer/pv.hpp"
#include "recsizer/tariff.hpp"
#include "recsizer/validation.hpp"

namespace recsizer::sizing {

SizingProblem assemble(const RECConfig& config, const SizingInputs& inputs) {
    validated(config);

    SizingProblem problem;
    problem.pv = config.pv;
    problem.bess = config.bess;
    problem.economics = config.economics;
    problem.dt_hours = 1.0;
    problem.hours_per_day = 24;

    // Horizon: the four representative days in season order, labeled with
    // their calendar dates (bands follow the dates).
    const auto& dates = inputs.weather.irradiance_kw_m2.dates;
    for (int s = 0; s < kSeasonCount; ++s) {
        const auto day = day_hours(dates[s]);
        problem.hours.insert(problem.hours.end(), day.begin(), day.end());
    }

    problem.buy_rate = rate_series(config.tariff, RateKind::Buy, problem.hours);
    problem.sell_rate = rate_series(config.tariff, RateKind::Sell, problem.hours);
    problem.share_rate = config.tariff.share_eur_kwh + config.tariff.transmission_eur_kwh;

    // Single-panel generation per horizon hour from the seasonal weather.
    problem.pv_per_panel_kw.reserve(problem.hours.size());
    for (int s = 0; s < kSeasonCount; ++s) {
        for (int h = 0; h < 24; ++h) {
            const double irr = inputs.weather.irradiance_kw_m2.values[s][h];
            const double amb = inputs.weather.ambient_c.values[s][h];
            const double theta_c = cell_temperature(irr, amb, config.pv);
            problem.pv_per_panel_kw.push_back(panel_power_kw(irr, theta_c, config.pv));
        }
    }

    for (const ParticipantSpec& spec : config.participants) {
        const auto it = inputs.demand.find(spec.id);
        if (it == inputs.demand.end())
            throw StructureError("assemble: no representative days for participant " + spec.id);
        SizingParticipant part;
        part.id = spec.id;
        part.max_panels = max_panels(spec.roof_area_m2, config.pv);
        part.annual_bill_eur = spec.annual_bill_eur;
        for (int s = 0; s < kSeasonCount; ++s)
            part.demand_kw.insert(part.demand_kw.end(), it->second.values[s].begin(),
                                  it->second.values[s].end());
        problem.participants.push_back(std::move(part));
    }

    // Distribution factors from the representative-day demand.
    std::vector<std::vector<double>> demands;
    for (const auto& p : problem.participants) demands.push_back(p.demand_kw);
    const std::vector<double> zeta = distribution_factors(demands, problem.dt_hours);
    for (std::size_t n = 0; n < zeta.size(); ++n) problem.participants[n].zeta = zeta[n];

    // Discounted sums: operating flows run from year 0 (or 1) through the
    // horizon; investment sits at year 0 with a battery repurchase at its
    // lifespan year.
    const double r = config.economics.discount_rate;
    const int first_year = config.economics.operating_from_year_one ? 1 : 0;
    double discount_sum = 0.0;
    for (int y = first_year; y <= config.economics.horizon_years; ++y)
        discount_sum += std::pow(1.0 + r, -y);
    problem.operating_discount_sum = discount_sum;

    const PVFleetCosts pv_unit = pv_costs(1, config.pv);
    problem.panel_cost_npv_eur =
        pv_unit.capex_eur + pv_unit.omca_eur_per_year * discount_sum;
    const BESSFleetCosts bess_unit = bess_costs(1, config.bess);
    problem.bess_unit_cost_npv_eur =
        bess_unit.capex_eur + bess_unit.omca_eur_per_year * discount_sum;
    if (bess_unit.replacement_year <= config.economics.horizon_years)
        problem.bess_unit_cost_npv_eur +=
            bess_unit.capex_eur * std::pow(1.0 + r, -bess_unit.replacement_year);

    problem.check();
    return problem;
}

} // namespace recsizer::sizing
