#pragma once

#include <string>
#include <vector>

#include "recsizer/config.hpp"

namespace recsizer {

/// Aggregate operating envelope of a fleet of identical battery units.
struct BESSFleetBounds {
    double soc_min_kwh = 0.0;
    double soc_max_kwh = 0.0;
    double p_charge_max_kw = 0.0;
    double p_discharge_max_kw = 0.0;
};

struct BESSFleetCosts {
    double capex_eur = 0.0;
    double omca_eur_per_year = 0.0;
    int replacement_year = 0;
};

/// One violated dispatch constraint at one step.
struct DispatchViolation {
    std::size_t step;
    std::string constraint; // "charge_bound", "discharge_bound", "simultaneity",
                            // "soc_bound", "soc_recursion"
    double residual;
};

/// Energy-reservoir step: S' = S + (eta_c * p_charge - p_discharge / eta_d) * dt.
double soc_step(double soc_kwh, double p_charge_kw, double p_discharge_kw, double dt_hours,
                const BESSSpec& spec);

/// All bounds scale linearly with the unit count. Throws CapacityExceededError
/// when n_units exceeds spec.max_units.
BESSFleetBounds fleet_bounds(int n_units, const BESSSpec& spec);

BESSFleetCosts bess_costs(int n_units, const BESSSpec& spec);

/// Re-checks a dispatch against power bounds, non-simultaneity
/// (p_charge * p_discharge <= tol), SOC bounds and the SOC recursion.
/// soc has one more sample than the power series (initial state first).
std::vector<DispatchViolation> validate_dispatch(const std::vector<double>& soc_kwh,
                                                 const std::vector<double>& p_charge_kw,
                                                 const std::vector<double>& p_discharge_kw,
                                                 int n_units, const BESSSpec& spec,
                                                 double dt_hours, double tol = 1e-6);

} // namespace recsizer
