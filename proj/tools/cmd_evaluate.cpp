#include <cmath>
#include <iostream>

#include "commands.hpp"
#include "recsizer/economics.hpp"
#include "recsizer/errors.hpp"
#include "recsizer/io/config_io.hpp"
#include "recsizer/io/json_io.hpp"
#include "recsizer/log.hpp"
#include "recsizer/validation.hpp"

namespace recsizer::cli {

int cmd_evaluate(const EvaluateArgs& args) {
    try {
        const RECConfig config = load_config(args.config_toml, /*load_series=*/false);
        const ValidationResult valid = validate_config(config);
        if (!valid.ok()) {
            std::cerr << "error: invalid config: " << valid.summary() << "\n";
            return kExitSchema;
        }
        const SolutionFile solution = solution_from_json(read_json_file(args.solution_json));
        const std::string config_hash = hash_file(args.config_toml);
        if (!solution.manifest.config_hash.empty() &&
            solution.manifest.config_hash != config_hash) {
            std::cerr << "error: solution was produced from a different config ("
                      << solution.manifest.config_hash << " != " << config_hash << ")\n";
            return kExitSchema;
        }
        if (solution.participant_ids.size() != config.participants.size()) {
            std::cerr << "error: participant count differs between config and solution\n";
            return kExitSchema;
        }

        const std::size_t n_part = solution.participant_ids.size();
        const std::vector<double> zeta =
            distribution_factors(solution.demand_kw, solution.solution.dispatch.dt_hours);
        const std::vector<CashFlowComponents> components =
            period_cashflow(solution.solution.dispatch, config.tariff);

        nlohmann::json participants = nlohmann::json::array();
        std::vector<NPVTrajectory> trajectories;
        for (std::size_t n = 0; n < n_part; ++n) {
            const NPVTrajectory traj = npv_trajectory(
                components[n], solution.solution.n_panels[n], solution.solution.n_units[n],
                config.pv, config.bess, config.economics, zeta[n]);
            trajectories.push_back(traj);
            const double bill_before = config.participants[n].annual_bill_eur;
            const double bill = bill_after(bill_before, components[n], zeta[n],
                                           config.economics.season_days);
            const auto& d = solution.solution.dispatch.participants[n];
            std::vector<double> generation(d.p_self_kw.size());
            for (std::size_t t = 0; t < generation.size(); ++t)
                generation[t] = d.p_self_kw[t] + d.p_sell_kw[t];
            nlohmann::json entry = {
                {"id", solution.participant_ids[n]},
                {"n_pv", solution.solution.n_panels[n]},
                {"n_bess", solution.solution.n_units[n]},
                {"zeta", zeta[n]},
                {"bill_before_eur", bill_before},
                {"bill_after_eur", bill},
                {"npv_by_year_eur", traj.npv_by_year_eur},
                {"incentive_eur_per_year",
                 config.economics.season_days * zeta[n] * components[n].i_sh_eur},
                {"dispatch",
                 {{"demand_kw", solution.demand_kw[n]},
                  {"generation_kw", generation},
                  {"p_self_kw", d.p_self_kw},
                  {"p_sell_kw", d.p_sell_kw},
                  {"p_charge_kw", d.p_charge_kw},
                  {"p_discharge_kw", d.p_discharge_kw},
                  {"soc_kwh", d.soc_kwh}}}};
            if (traj.payback_years)
                entry["payback_years"] = *traj.payback_years;
            else
                entry["payback_years"] = nullptr;
            participants.push_back(std::move(entry));
        }

        const double community_np = net_profit(trajectories);
        const double solver_np = solution.solution.objective_npv_eur;
        if (std::abs(community_np - solver_np) > 1e-6)
            REC_LOG_ERROR("solver objective " << solver_np
                                              << " differs from the economic recomputation "
                                              << community_np);

        nlohmann::json report;
        report["schema_version"] = kSchemaVersion;
        RunManifest manifest = RunManifest::make("evaluate");
        manifest.config_hash = config_hash;
        manifest.input_hashes[args.solution_json] = hash_file(args.solution_json);
        report["manifest"] = manifest.to_json();
        report["participants"] = participants;
        nlohmann::json hours = nlohmann::json::array();
        for (const HourLabel& h : solution.solution.dispatch.hours)
            hours.push_back({{"date", format_date(h.date)}, {"hour", h.hour}});
        report["community"] = {{"net_profit_eur", community_np},
                               {"solver_objective_eur", solver_np},
                               {"shared_energy_by_hour_kw", solution.solution.dispatch.shared_kw},
                               {"hours", hours}};
        write_json_file(args.output_json, report);
        std::cout << "net profit " << community_np << " EUR; wrote " << args.output_json
                  << "\n";
        return kExitOk;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitSchema;
    }
}

} // namespace recsizer::cli
