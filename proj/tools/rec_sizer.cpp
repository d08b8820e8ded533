#include <CLI11.hpp>

#include "commands.hpp"
#include "recsizer/io/manifest.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Renewable-energy-community PV and battery sizing toolkit"};
    app.set_version_flag("--version", recsizer::kToolVersion);
    app.require_subcommand(1);

    recsizer::cli::ExtractArgs extract;
    CLI::App* cmd_extract =
        app.add_subcommand("extract", "Fit seasonal models and write representative days");
    cmd_extract->add_option("--input", extract.input_csv,
                            "Hourly load CSV: timestamp,<participant>[,...]")
        ->required();
    cmd_extract->add_option("--weather", extract.weather_csv,
                            "Hourly weather CSV: timestamp,irradiance_kw_m2,ambient_c")
        ->required();
    cmd_extract->add_option("--output", extract.output_json, "Output repdays.json")->required();
    cmd_extract->add_option("--lambda", extract.lambda,
                            "L1 weight: a number, or 'auto' for cross-validation");
    cmd_extract->add_option("--ny", extract.n_yearly, "Yearly harmonics");
    cmd_extract->add_option("--nw", extract.n_weekly, "Weekly harmonics");
    cmd_extract->add_option("--nd", extract.n_daily, "Daily harmonics (0 disables)");

    recsizer::cli::SizeArgs size;
    CLI::App* cmd_size = app.add_subcommand("size", "Solve the community sizing problem");
    cmd_size->add_option("--config", size.config_toml, "Community config TOML")->required();
    cmd_size->add_option("--repdays", size.repdays_json, "Representative days JSON")->required();
    cmd_size->add_option("--out", size.output_json, "Output solution.json")->required();
    cmd_size->add_option("--method", size.method, "bnb or oracle");
    cmd_size->add_option("--gap", size.gap, "Relative optimality gap tolerance");
    cmd_size->add_option("--time-limit", size.time_limit_s, "Wall-clock limit in seconds");
    cmd_size->add_option("--threads", size.threads, "Worker threads");

    recsizer::cli::EvaluateArgs evaluate;
    CLI::App* cmd_evaluate =
        app.add_subcommand("evaluate", "Compute NPV, payback, bills and incentive shares");
    cmd_evaluate->add_option("--config", evaluate.config_toml, "Community config TOML")
        ->required();
    cmd_evaluate->add_option("--solution", evaluate.solution_json, "solution.json from size")
        ->required();
    cmd_evaluate->add_option("--out", evaluate.output_json, "Output report.json")->required();

    recsizer::cli::ReportArgs report;
    CLI::App* cmd_report = app.add_subcommand("report", "Emit plots and CSV tables");
    cmd_report->add_option("--in", report.input_json, "report.json from evaluate")->required();
    cmd_report->add_option("--outdir", report.outdir, "Output directory")->required();
    cmd_report->add_option("--format", report.format, "svg (with csv twins) or csv");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? recsizer::cli::kExitOk : recsizer::cli::kExitSchema;
    }

    if (cmd_extract->parsed()) return recsizer::cli::cmd_extract(extract);
    if (cmd_size->parsed()) return recsizer::cli::cmd_size(size);
    if (cmd_evaluate->parsed()) return recsizer::cli::cmd_evaluate(evaluate);
    if (cmd_report->parsed()) return recsizer::cli::cmd_report(report);
    return recsizer::cli::kExitUsage;
}
