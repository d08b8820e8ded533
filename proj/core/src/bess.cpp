#include "recsizer/bess.hpp"

#include <cmath>

#include "recsizer/errors.hpp"

namespace recsizer {

double soc_step(double soc_kwh, double p_charge_kw, double p_discharge_kw, double dt_hours,
                const BESSSpec& spec) {
    if (p_charge_kw < 0.0 || p_discharge_kw < 0.0)
        throw DomainError("soc_step: charge/discharge power must be >= 0");
    return soc_kwh + (spec.eta_charge * p_charge_kw - p_discharge_kw / spec.eta_discharge) * dt_hours;
}

BESSFleetBounds fleet_bounds(int n_units, const BESSSpec& spec) {
    if (n_units < 0) throw DomainError("fleet_bounds: negative unit count");
    if (n_units > spec.max_units)
        throw CapacityExceededError("fleet_bounds: " + std::to_string(n_units) +
                                    " units exceed the cap of " + std::to_string(spec.max_units));
    BESSFleetBounds b;
    b.soc_min_kwh = n_units * spec.soc_min_kwh;
    b.soc_max_kwh = n_units * spec.soc_max_kwh;
    b.p_charge_max_kw = n_units * spec.p_charge_max_kw;
    b.p_discharge_max_kw = n_units * spec.p_discharge_max_kw;
    return b;
}

BESSFleetCosts bess_costs(int n_units, const BESSSpec& spec) {
    if (n_units < 0) throw DomainError("bess_costs: negative unit count");
    BESSFleetCosts costs;
    costs.capex_eur = n_units * spec.unit_cost_eur();
    costs.omca_eur_per_year =
        n_units * spec.capacity_kwh * (spec.opex_per_kwh_year_eur + spec.ca_per_kwh_year_eur);
    costs.replacement_year = spec.lifespan_years;
    return costs;
}

std::vector<DispatchViolation> validate_dispatch(const std::vector<double>& soc_kwh,
                                                 const std::vector<double>& p_charge_kw,
                                                 const std::vector<double>& p_discharge_kw,
                                                 int n_units, const BESSSpec& spec,
                                                 double dt_hours, double tol) {
    const std::size_t steps = p_charge_kw.size();
    if (p_discharge_kw.size() != steps || soc_kwh.size() != steps + 1)
        throw SeriesMismatchError("validate_dispatch: soc needs exactly one more sample than the "
                                  "power series");
    std::vector<DispatchViolation> violations;
    const BESSFleetBounds bounds = fleet_bounds(n_units, spec);
    for (std::size_t t = 0; t < steps; ++t) {
        const double pc = p_charge_kw[t];
        const double pd = p_discharge_kw[t];
        if (pc < -tol || pc > bounds.p_charge_max_kw + tol)
            violations.push_back({t, "charge_bound",
                                  pc < 0 ? -pc : pc - bounds.p_charge_max_kw});
        if (pd < -tol || pd > bounds.p_discharge_max_kw + tol)
            violations.push_back({t, "discharge_bound",
                                  pd < 0 ? -pd : pd - bounds.p_discharge_max_kw});
        if (pc * pd > tol) violations.push_back({t, "simultaneity", pc * pd});
        const double expected =
            soc_kwh[t] + (spec.eta_charge * pc - pd / spec.eta_discharge) * dt_hours;
        const double drift = std::abs(soc_kwh[t + 1] - expected);
        if (drift > tol) violations.push_back({t, "soc_recursion", drift});
    }
    for (std::size_t t = 0; t < soc_kwh.size(); ++t) {
        if (soc_kwh[t] < bounds.soc_min_kwh - tol || soc_kwh[t] > bounds.soc_max_kwh + tol) {
            const double r = soc_kwh[t] < bounds.soc_min_kwh ? bounds.soc_min_kwh - soc_kwh[t]
                                                             : soc_kwh[t] - bounds.soc_max_kwh;
            violations.push_back({t, "soc_bound", r});
        }
    }
    return violations;
}

} // namespace recsizer
