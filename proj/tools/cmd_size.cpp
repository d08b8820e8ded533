#include <cstdio>
#include <iostream>

#include "commands.hpp"
#include "recsizer/errors.hpp"
#include "recsizer/io/config_io.hpp"
#include "recsizer/io/json_io.hpp"
#include "recsizer/log.hpp"
#include "recsizer/sizing/assemble.hpp"
#include "recsizer/sizing/bnb.hpp"
#include "recsizer/sizing/oracle.hpp"
#include "recsizer/validation.hpp"

namespace recsizer::cli {

int cmd_size(const SizeArgs& args) {
    try {
        const RECConfig config = load_config(args.config_toml, /*load_series=*/false);
        const ValidationResult valid = validate_config(config);
        if (!valid.ok()) {
            std::cerr << "error: invalid config: " << valid.summary() << "\n";
            return kExitSchema;
        }

        const RepDaysFile repdays = repdays_from_json(read_json_file(args.repdays_json));
        sizing::SizingInputs inputs;
        inputs.weather = repdays.weather;
        for (const ParticipantSpec& p : config.participants) {
            const auto it = repdays.participants.find(p.id);
            if (it == repdays.participants.end())
                throw StructureError("no representative days for participant '" + p.id + "'");
            inputs.demand[p.id] = it->second;
        }
        const sizing::SizingProblem problem = sizing::assemble(config, inputs);

        sizing::SizingSolution solution;
        if (args.method == "oracle") {
            solution = sizing::brute_force_oracle(problem, {}, args.threads);
        } else if (args.method == "bnb") {
            sizing::SolveOptions options;
            options.gap_tol = args.gap;
            options.time_limit_s = args.time_limit_s;
            options.threads = args.threads;
            solution = sizing::solve_bnb(problem, options);
        } else {
            std::cerr << "error: unknown method '" << args.method << "'\n";
            return kExitSchema;
        }

        if (!solution.feasible) {
            std::cerr << "error: sizing problem is infeasible\n";
            return kExitInfeasible;
        }

        const auto violations = sizing::check_solution(problem, solution);
        for (const auto& v : violations)
            REC_LOG_ERROR("residual check: " << v.constraint << " participant " << v.participant
                                             << " hour " << v.hour << " residual " << v.residual);

        SolutionFile out;
        out.solution = solution;
        for (const auto& part : problem.participants) {
            out.participant_ids.push_back(part.id);
            out.demand_kw.push_back(part.demand_kw);
        }
        out.manifest = RunManifest::make("size");
        out.manifest.config_hash = hash_file(args.config_toml);
        out.manifest.input_hashes[args.repdays_json] = hash_file(args.repdays_json);
        out.manifest.solver_stats = {{"nodes", solution.stats.nodes},
                                     {"lp_iterations", solution.stats.lp_iterations},
                                     {"wall_seconds", solution.stats.wall_seconds},
                                     {"gap", solution.gap},
                                     {"proven", solution.stats.proven},
                                     {"method", args.method}};
        write_json_file(args.output_json, to_json(out));

        std::printf("%-12s %8s %8s\n", "participant", "pv", "bess");
        for (std::size_t n = 0; n < out.participant_ids.size(); ++n)
            std::printf("%-12s %8d %8d\n", out.participant_ids[n].c_str(),
                        solution.n_panels[n], solution.n_units[n]);
        std::printf("objective %.2f EUR  gap %.3g  nodes %ld  wall %.1fs\n",
                    solution.objective_npv_eur, solution.gap, solution.stats.nodes,
                    solution.stats.wall_seconds);
        std::printf("wrote %s\n", args.output_json.c_str());

        if (!solution.stats.proven) {
            std::cerr << "warning: stopped at limits with gap " << solution.gap << "\n";
            return kExitLimits;
        }
        return kExitOk;
    } catch (const OracleLimitError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitSchema;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitSchema;
    }
}

} // namespace recsizer::cli
