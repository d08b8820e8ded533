#include "recsizer/pv.hpp"

#include <algorithm>
#include <cmath>

#include "recsizer/errors.hpp"

namespace recsizer {

double cell_temperature(double irradiance_kw_m2, double ambient_c, const PVSpec& spec) {
    if (irradiance_kw_m2 < 0.0) throw DomainError("cell_temperature: negative irradiance");
    return ambient_c +
           irradiance_kw_m2 / spec.stc_irradiance_kw_m2 * (spec.noct_c - spec.stc_temp_c);
}

double panel_power_kw(double irradiance_kw_m2, double cell_temp_c, const PVSpec& spec) {
    if (irradiance_kw_m2 < 0.0) throw DomainError("panel_power: negative irradiance");
    const double derate = 1.0 - spec.gamma_pct_per_c / 100.0 * (cell_temp_c - spec.stc_temp_c);
    const double p = spec.rated_kw * irradiance_kw_m2 / spec.stc_irradiance_kw_m2 * derate;
    return std::max(p, 0.0); // a panel cannot sink power
}

TimeSeries panel_generation(const TimeSeries& irradiance_kw_m2, const TimeSeries& ambient_c,
                            const PVSpec& spec) {
    require_aligned(irradiance_kw_m2, ambient_c, "panel_generation");
    TimeSeries out;
    out.start = irradiance_kw_m2.start;
    out.step_hours = irradiance_kw_m2.step_hours;
    out.values.resize(irradiance_kw_m2.size());
    for (std::size_t i = 0; i < out.values.size(); ++i) {
        const double theta_c =
            cell_temperature(irradiance_kw_m2.values[i], ambient_c.values[i], spec);
        out.values[i] = panel_power_kw(irradiance_kw_m2.values[i], theta_c, spec);
    }
    return out;
}

TimeSeries fleet_generation(const TimeSeries& irradiance_kw_m2, const TimeSeries& ambient_c,
                            int n_panels, const PVSpec& spec) {
    if (n_panels < 0) throw DomainError("fleet_generation: negative panel count");
    TimeSeries out = panel_generation(irradiance_kw_m2, ambient_c, spec);
    for (double& v : out.values) v *= n_panels;
    return out;
}

int max_panels(double roof_area_m2, const PVSpec& spec) {
    if (roof_area_m2 < 0.0) throw DomainError("max_panels: negative roof area");
    return static_cast<int>(std::floor(roof_area_m2 / spec.panel_area_m2));
}

PVFleetCosts pv_costs(int n_panels, const PVSpec& spec) {
    if (n_panels < 0) throw DomainError("pv_costs: negative panel count");
    PVFleetCosts costs;
    costs.capex_eur = n_panels * spec.panel_cost_eur();
    costs.omca_eur_per_year =
        n_panels * spec.rated_kw * (spec.opex_per_kw_year_eur + spec.ca_per_kw_year_eur);
    return costs;
}

} // namespace recsizer
