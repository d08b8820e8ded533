#pragma once

#include <cmath>
#include <random>
#include <vector>

#include "recsizer/sizing/problem.hpp"
#include "recsizer/tariff.hpp"

namespace testsupport {

// 2024-06-12 is a Wednesday; toy horizons hang off it.
inline recsizer::CivilDate toy_date() { return {2024, 6, 12}; }

// A desk-scale sizing problem with explicit per-hour data. hours_per_day
// equals the horizon, i.e. one periodic day.
inline recsizer::sizing::SizingProblem make_toy_problem(
    int n_participants, int n_hours, const std::vector<std::vector<double>>& demand,
    const std::vector<double>& gen_per_panel, const std::vector<double>& buy,
    const std::vector<double>& sell, double share_rate, const std::vector<int>& max_panels,
    int max_units, double panel_cost_npv, double bess_cost_npv) {
    using namespace recsizer;
    sizing::SizingProblem p;
    p.hours_per_day = n_hours;
    for (int t = 0; t < n_hours; ++t) p.hours.push_back({toy_date(), t + 1});
    p.dt_hours = 1.0;
    p.pv_per_panel_kw = gen_per_panel;
    p.buy_rate = buy;
    p.sell_rate = sell;
    p.share_rate = share_rate;
    p.bess.max_units = max_units;
    p.economics.season_days = 91;
    p.economics.horizon_years = 10;
    p.economics.discount_rate = 0.03;
    double discount = 0.0;
    for (int y = 0; y <= p.economics.horizon_years; ++y)
        discount += std::pow(1.0 + p.economics.discount_rate, -y);
    p.operating_discount_sum = discount;
    p.panel_cost_npv_eur = panel_cost_npv;
    p.bess_unit_cost_npv_eur = bess_cost_npv;

    double total_energy = 0.0;
    std::vector<double> energy(n_participants, 0.0);
    for (int n = 0; n < n_participants; ++n) {
        sizing::SizingParticipant part;
        part.id = "p" + std::to_string(n + 1);
        part.demand_kw = demand[n];
        part.max_panels = max_panels[n];
        p.participants.push_back(part);
        for (double d : demand[n]) energy[n] += d;
        total_energy += energy[n];
    }
    for (int n = 0; n < n_participants; ++n)
        p.participants[n].zeta = total_energy > 0 ? energy[n] / total_energy
                                                  : 1.0 / n_participants;
    p.check();
    return p;
}

// Random tiny instance within the brute-force oracle limits. Two-battery
// instances keep the horizon short so the pattern enumeration stays fast.
inline recsizer::sizing::SizingProblem random_tiny_problem(std::mt19937& rng) {
    std::uniform_int_distribution<int> part_dist(1, 2);
    std::uniform_int_distribution<int> unit_dist(0, 1);
    const int n_part = part_dist(rng);
    const int max_units = unit_dist(rng);
    std::uniform_int_distribution<int> hour_dist(4, n_part == 2 && max_units == 1 ? 5 : 8);
    const int n_hours = hour_dist(rng);

    std::uniform_real_distribution<double> demand_dist(0.0, 2.0);
    std::uniform_real_distribution<double> gen_dist(0.0, 1.5);
    std::uniform_real_distribution<double> buy_dist(0.10, 0.30);
    std::uniform_real_distribution<double> margin_dist(0.2, 0.9);
    std::uniform_real_distribution<double> share_dist(0.05, 0.15);
    std::uniform_real_distribution<double> panel_cost_dist(5.0, 120.0);
    std::uniform_real_distribution<double> bess_cost_dist(5.0, 80.0);
    std::uniform_int_distribution<int> panel_bound_dist(0, 3);

    std::vector<std::vector<double>> demand(n_part);
    for (auto& d : demand)
        for (int t = 0; t < n_hours; ++t) d.push_back(demand_dist(rng));
    std::vector<double> gen, buy, sell;
    for (int t = 0; t < n_hours; ++t) {
        gen.push_back(gen_dist(rng));
        const double b = buy_dist(rng);
        buy.push_back(b);
        sell.push_back(b * margin_dist(rng)); // sell below buy
    }
    std::vector<int> max_panels;
    for (int n = 0; n < n_part; ++n) max_panels.push_back(panel_bound_dist(rng));

    return make_toy_problem(n_part, n_hours, demand, gen, buy, sell, share_dist(rng),
                            max_panels, max_units, panel_cost_dist(rng), bess_cost_dist(rng));
}

// Direct, loop-based recomputation of the sizing objective from a dispatch;
// a second code path against the solver's own reported value.
inline double recompute_objective(const recsizer::sizing::SizingProblem& p,
                                  const recsizer::sizing::SizingSolution& s) {
    const double scale = p.flow_scale();
    double value = 0.0;
    for (int n = 0; n < p.n_participants(); ++n) {
        value -= s.n_panels[n] * p.panel_cost_npv_eur;
        value -= s.n_units[n] * p.bess_unit_cost_npv_eur;
        const auto& d = s.dispatch.participants[n];
        for (int t = 0; t < p.n_hours(); ++t) {
            value += p.sell_rate[t] * d.p_sell_kw[t] * scale;
            value += p.buy_rate[t] * d.p_self_kw[t] * scale;
        }
    }
    for (int t = 0; t < p.n_hours(); ++t)
        value += p.share_rate * s.dispatch.shared_kw[t] * scale;
    return value;
}

} // namespace testsupport
