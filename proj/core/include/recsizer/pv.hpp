#pragma once

#include "recsizer/config.hpp"
#include "recsizer/timeseries.hpp"

namespace recsizer {

/// Procurement and yearly operating cost of a participant's panel fleet.
struct PVFleetCosts {
    double capex_eur = 0.0;
    double omca_eur_per_year = 0.0;
};

/// Cell temperature from ambient temperature and irradiance via the linear
/// NOCT model: theta_c = theta_a + (E/E_stc) * (noct - theta_stc).
double cell_temperature(double irradiance_kw_m2, double ambient_c, const PVSpec& spec);

/// Power of a single panel at the given irradiance and cell temperature,
/// derated by the temperature coefficient and clamped below at zero.
double panel_power_kw(double irradiance_kw_m2, double cell_temp_c, const PVSpec& spec);

/// Per-panel generation series from an irradiance/ambient pair.
TimeSeries panel_generation(const TimeSeries& irradiance_kw_m2, const TimeSeries& ambient_c,
                            const PVSpec& spec);

/// n_panels * single-panel generation, pointwise.
TimeSeries fleet_generation(const TimeSeries& irradiance_kw_m2, const TimeSeries& ambient_c,
                            int n_panels, const PVSpec& spec);

/// Largest whole number of panels that fits the roof: floor(area / panel_area).
int max_panels(double roof_area_m2, const PVSpec& spec);

PVFleetCosts pv_costs(int n_panels, const PVSpec& spec);

} // namespace recsizer
