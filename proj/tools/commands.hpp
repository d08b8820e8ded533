#pragma once

#include <optional>
#include <string>

namespace recsizer::cli {

// Exit codes shared by all subcommands.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;     // CLI11 parse failures
inline constexpr int kExitSchema = 2;    // malformed inputs, hash mismatches
inline constexpr int kExitShortData = 3; // insufficient input span
inline constexpr int kExitInfeasible = 4;
inline constexpr int kExitLimits = 5;    // limits hit without a proven gap

struct ExtractArgs {
    std::string input_csv;
    std::string weather_csv;
    std::string output_json;
    std::string lambda = "default"; // "default", "auto" (cross-validate) or a number
    int n_yearly = 2;
    int n_weekly = 3;
    int n_daily = 4;
};
int cmd_extract(const ExtractArgs& args);

struct SizeArgs {
    std::string config_toml;
    std::string repdays_json;
    std::string output_json;
    std::string method = "bnb"; // or "oracle"
    double gap = 1e-6;
    double time_limit_s = 0.0;
    int threads = 1;
};
int cmd_size(const SizeArgs& args);

struct EvaluateArgs {
    std::string config_toml;
    std::string solution_json;
    std::string output_json;
};
int cmd_evaluate(const EvaluateArgs& args);

struct ReportArgs {
    std::string input_json;
    std::string outdir;
    std::string format = "svg"; // "svg" (plus csv twins) or "csv"
};
int cmd_report(const ReportArgs& args);

} // namespace recsizer::cli
