#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "commands.hpp"
#include "recsizer/errors.hpp"
#include "recsizer/io/json_io.hpp"
#include "svg.hpp"

namespace recsizer::cli {

namespace {

void write_text(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError(path.string() + ": cannot open for writing");
    out << content;
}

std::string money(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

std::string energy(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return buf;
}

} // namespace

int cmd_report(const ReportArgs& args) {
    try {
        const nlohmann::json report = read_json_file(args.input_json);
        if (report.value("schema_version", 0) != kSchemaVersion)
            throw ParseError("report: unsupported schema_version");
        const auto& participants = report.at("participants");
        if (participants.empty()) throw ParseError("report: no participants");
        const auto& community = report.at("community");
        const bool with_svg = args.format == "svg";
        if (args.format != "svg" && args.format != "csv")
            throw ParseError("--format expects svg or csv");

        std::filesystem::create_directories(args.outdir);
        const std::filesystem::path outdir(args.outdir);
        const std::string provenance =
            "source " + args.input_json + " " + hash_file(args.input_json);

        // NPV trajectories.
        {
            std::vector<svg::Series> series;
            std::string csv = "# " + provenance + "\nyear";
            std::size_t horizon = 0;
            for (const auto& p : participants) {
                series.push_back({p.at("id").get<std::string>(),
                                  p.at("npv_by_year_eur").get<std::vector<double>>()});
                csv += "," + p.at("id").get<std::string>();
                horizon = std::max(horizon, series.back().values.size());
            }
            csv += "\n";
            for (std::size_t y = 0; y < horizon; ++y) {
                csv += std::to_string(y);
                for (const auto& s : series)
                    csv += "," + (y < s.values.size() ? money(s.values[y]) : "");
                csv += "\n";
            }
            write_text(outdir / "npv_trajectories.csv", csv);
            if (with_svg)
                write_text(outdir / "npv_trajectories.svg",
                           svg::line_chart("Net present value by year", "year", "EUR", series,
                                           provenance));
        }

        // Bills before/after.
        {
            std::vector<std::string> ids;
            svg::Series before{"before", {}}, after{"after", {}};
            std::string csv = "# " + provenance + "\nid,bill_before_eur,bill_after_eur\n";
            for (const auto& p : participants) {
                ids.push_back(p.at("id").get<std::string>());
                before.values.push_back(p.at("bill_before_eur").get<double>());
                after.values.push_back(p.at("bill_after_eur").get<double>());
                csv += ids.back() + "," + money(before.values.back()) + "," +
                       money(after.values.back()) + "\n";
            }
            write_text(outdir / "bills.csv", csv);
            if (with_svg)
                write_text(outdir / "bills.svg",
                           svg::bar_chart("Annual electricity bills before and after joining",
                                          ids, {before, after}, provenance));
        }

        // Incentive share per participant.
        {
            std::vector<std::string> ids;
            svg::Series incentive{"incentive", {}};
            std::string csv = "# " + provenance + "\nid,incentive_eur_per_year\n";
            for (const auto& p : participants) {
                ids.push_back(p.at("id").get<std::string>());
                incentive.values.push_back(p.at("incentive_eur_per_year").get<double>());
                csv += ids.back() + "," + money(incentive.values.back()) + "\n";
            }
            write_text(outdir / "incentives.csv", csv);
            if (with_svg)
                write_text(outdir / "incentives.svg",
                           svg::bar_chart("Annual shared-energy incentive per participant", ids,
                                          {incentive}, provenance));
        }

        // Shared energy profile over the horizon.
        {
            const auto shared = community.at("shared_energy_by_hour_kw").get<std::vector<double>>();
            const auto& hours = community.at("hours");
            std::string csv = "# " + provenance + "\nindex,date,hour,shared_kw\n";
            for (std::size_t t = 0; t < shared.size(); ++t) {
                csv += std::to_string(t) + "," +
                       hours.at(t).at("date").get<std::string>() + "," +
                       std::to_string(hours.at(t).at("hour").get<int>()) + "," +
                       energy(shared[t]) + "\n";
            }
            write_text(outdir / "shared_energy.csv", csv);
            if (with_svg)
                write_text(outdir / "shared_energy.svg",
                           svg::line_chart("Community shared energy over the representative days",
                                           "hour of horizon", "kW", {{"shared", shared}},
                                           provenance));
        }

        // Per-participant dispatch panels.
        for (const auto& p : participants) {
            const std::string id = p.at("id").get<std::string>();
            const auto& d = p.at("dispatch");
            const auto demand = d.at("demand_kw").get<std::vector<double>>();
            const auto generation = d.at("generation_kw").get<std::vector<double>>();
            const auto self = d.at("p_self_kw").get<std::vector<double>>();
            const auto sell = d.at("p_sell_kw").get<std::vector<double>>();
            const auto charge = d.at("p_charge_kw").get<std::vector<double>>();
            const auto discharge = d.at("p_discharge_kw").get<std::vector<double>>();

            std::string csv = "# " + provenance +
                              "\nindex,demand_kw,generation_kw,p_self_kw,p_sell_kw,"
                              "p_charge_kw,p_discharge_kw\n";
            for (std::size_t t = 0; t < demand.size(); ++t) {
                csv += std::to_string(t) + "," + energy(demand[t]) + "," +
                       energy(generation[t]) + "," + energy(self[t]) + "," + energy(sell[t]) +
                       "," + energy(charge[t]) + "," + energy(discharge[t]) + "\n";
            }
            write_text(outdir / ("dispatch_" + id + ".csv"), csv);
            if (with_svg) {
                std::vector<double> discharge_neg(discharge.size());
                for (std::size_t t = 0; t < discharge.size(); ++t)
                    discharge_neg[t] = -discharge[t];
                const std::vector<svg::Panel> panels = {
                    {"demand, generation and self-consumption",
                     {{"demand", demand}, {"generation", generation}, {"self", self}}},
                    {"battery charging (+) and discharging (-)",
                     {{"charge", charge}, {"discharge", discharge_neg}}},
                    {"power sold to the grid", {{"sold", sell}}}};
                write_text(outdir / ("dispatch_" + id + ".svg"),
                           svg::panel_chart("Dispatch for " + id, panels, provenance));
            }
        }

        std::cout << "wrote plots to " << args.outdir << "\n";
        return kExitOk;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: malformed report: " << e.what() << "\n";
        return kExitSchema;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitSchema;
    }
}

} // namespace recsizer::cli
