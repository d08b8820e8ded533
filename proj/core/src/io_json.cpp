#include "recsizer/io/json_io.hpp"

#include <fstream>

#include "recsizer/errors.hpp"

namespace recsizer {

namespace {

nlohmann::json profiles_to_json(const RepresentativeDays& days) {
    nlohmann::json j;
    for (int s = 0; s < kSeasonCount; ++s) {
        const auto season = static_cast<Season>(s);
        j[to_string(season)] = days.values[s];
    }
    return j;
}

RepresentativeDays profiles_from_json(const nlohmann::json& j,
                                      const std::array<CivilDate, kSeasonCount>& dates) {
    RepresentativeDays days;
    days.dates = dates;
    for (int s = 0; s < kSeasonCount; ++s) {
        const auto season = static_cast<Season>(s);
        const auto& arr = j.at(to_string(season));
        if (arr.size() != 24) throw ParseError("repdays: profile must have 24 values");
        for (int h = 0; h < 24; ++h) days.values[s][h] = arr.at(h).get<double>();
    }
    return days;
}

nlohmann::json hours_to_json(const std::vector<HourLabel>& hours) {
    nlohmann::json j = nlohmann::json::array();
    for (const HourLabel& h : hours) j.push_back({{"date", format_date(h.date)}, {"hour", h.hour}});
    return j;
}

std::vector<HourLabel> hours_from_json(const nlohmann::json& j) {
    std::vector<HourLabel> hours;
    for (const auto& item : j)
        hours.push_back({parse_date(item.at("date").get<std::string>()),
                         item.at("hour").get<int>()});
    return hours;
}

} // namespace

nlohmann::json to_json(const RepDaysFile& f) {
    nlohmann::json j;
    j["schema_version"] = kSchemaVersion;
    j["manifest"] = f.manifest.to_json();
    nlohmann::json dates;
    for (int s = 0; s < kSeasonCount; ++s)
        dates[to_string(static_cast<Season>(s))] =
            format_date(f.weather.irradiance_kw_m2.dates[s]);
    j["dates"] = dates;
    nlohmann::json participants;
    for (const auto& [id, days] : f.participants) participants[id] = profiles_to_json(days);
    j["participants"] = participants;
    j["weather"] = {{"irradiance_kw_m2", profiles_to_json(f.weather.irradiance_kw_m2)},
                    {"ambient_c", profiles_to_json(f.weather.ambient_c)}};
    return j;
}

RepDaysFile repdays_from_json(const nlohmann::json& j) {
    if (j.value("schema_version", 0) != kSchemaVersion)
        throw ParseError("repdays: unsupported schema_version");
    RepDaysFile f;
    f.manifest = RunManifest::from_json(j.at("manifest"));
    std::array<CivilDate, kSeasonCount> dates{};
    for (int s = 0; s < kSeasonCount; ++s)
        dates[s] = parse_date(j.at("dates").at(to_string(static_cast<Season>(s))).get<std::string>());
    for (const auto& [id, profiles] : j.at("participants").items())
        f.participants[id] = profiles_from_json(profiles, dates);
    f.weather.irradiance_kw_m2 =
        profiles_from_json(j.at("weather").at("irradiance_kw_m2"), dates);
    f.weather.ambient_c = profiles_from_json(j.at("weather").at("ambient_c"), dates);
    return f;
}

nlohmann::json to_json(const SolutionFile& f) {
    nlohmann::json j;
    j["schema_version"] = kSchemaVersion;
    j["manifest"] = f.manifest.to_json();
    j["feasible"] = f.solution.feasible;
    j["objective_npv_eur"] = f.solution.objective_npv_eur;
    j["gap"] = f.solution.gap;
    j["stats"] = {{"nodes", f.solution.stats.nodes},
                  {"lp_iterations", f.solution.stats.lp_iterations},
                  {"wall_seconds", f.solution.stats.wall_seconds},
                  {"proven", f.solution.stats.proven}};
    j["hours"] = hours_to_json(f.solution.dispatch.hours);
    j["dt_hours"] = f.solution.dispatch.dt_hours;
    j["shared_kw"] = f.solution.dispatch.shared_kw;
    nlohmann::json participants = nlohmann::json::array();
    for (std::size_t n = 0; n < f.participant_ids.size(); ++n) {
        const ParticipantDispatch& d = f.solution.dispatch.participants[n];
        participants.push_back({{"id", f.participant_ids[n]},
                                {"n_pv", f.solution.n_panels[n]},
                                {"n_bess", f.solution.n_units[n]},
                                {"demand_kw", f.demand_kw[n]},
                                {"p_self_kw", d.p_self_kw},
                                {"p_sell_kw", d.p_sell_kw},
                                {"p_charge_kw", d.p_charge_kw},
                                {"p_discharge_kw", d.p_discharge_kw},
                                {"soc_kwh", d.soc_kwh},
                                {"charge_on", d.charge_on},
                                {"discharge_on", d.discharge_on}});
    }
    j["participants"] = participants;
    return j;
}

SolutionFile solution_from_json(const nlohmann::json& j) {
    if (j.value("schema_version", 0) != kSchemaVersion)
        throw ParseError("solution: unsupported schema_version");
    SolutionFile f;
    f.manifest = RunManifest::from_json(j.at("manifest"));
    f.solution.feasible = j.at("feasible").get<bool>();
    f.solution.objective_npv_eur = j.at("objective_npv_eur").get<double>();
    f.solution.gap = j.at("gap").get<double>();
    f.solution.stats.nodes = j.at("stats").at("nodes").get<long>();
    f.solution.stats.lp_iterations = j.at("stats").at("lp_iterations").get<long>();
    f.solution.stats.wall_seconds = j.at("stats").at("wall_seconds").get<double>();
    f.solution.stats.proven = j.at("stats").at("proven").get<bool>();
    f.solution.dispatch.hours = hours_from_json(j.at("hours"));
    f.solution.dispatch.dt_hours = j.at("dt_hours").get<double>();
    f.solution.dispatch.shared_kw = j.at("shared_kw").get<std::vector<double>>();
    for (const auto& p : j.at("participants")) {
        f.participant_ids.push_back(p.at("id").get<std::string>());
        f.demand_kw.push_back(p.at("demand_kw").get<std::vector<double>>());
        f.solution.n_panels.push_back(p.at("n_pv").get<int>());
        f.solution.n_units.push_back(p.at("n_bess").get<int>());
        ParticipantDispatch d;
        d.p_self_kw = p.at("p_self_kw").get<std::vector<double>>();
        d.p_sell_kw = p.at("p_sell_kw").get<std::vector<double>>();
        d.p_charge_kw = p.at("p_charge_kw").get<std::vector<double>>();
        d.p_discharge_kw = p.at("p_discharge_kw").get<std::vector<double>>();
        d.soc_kwh = p.at("soc_kwh").get<std::vector<double>>();
        d.charge_on = p.at("charge_on").get<std::vector<std::uint8_t>>();
        d.discharge_on = p.at("discharge_on").get<std::vector<std::uint8_t>>();
        f.solution.dispatch.participants.push_back(std::move(d));
    }
    return f;
}

void write_json_file(const std::string& path, const nlohmann::json& j) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError(path + ": cannot open for writing");
    out << j.dump(2) << "\n";
}

nlohmann::json read_json_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError(path + ": cannot open");
    try {
        return nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(path + ": " + e.what());
    }
}

} // namespace recsizer
