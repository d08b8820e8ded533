#pragma once

#include <map>
#include <string>

#include <json.hpp>

#include "recsizer/io/manifest.hpp"
#include "recsizer/signal/repdays.hpp"
#include "recsizer/sizing/solution.hpp"

namespace recsizer {

/// Contents of repdays.json: per-participant seasonal profiles plus the
/// weather reduction, with the representative calendar dates recorded.
struct RepDaysFile {
    RunManifest manifest;
    std::map<std::string, RepresentativeDays> participants;
    WeatherRepDays weather;
};

nlohmann::json to_json(const RepDaysFile& f);
RepDaysFile repdays_from_json(const nlohmann::json& j);

/// Contents of solution.json: the sizing result plus everything evaluate
/// needs without re-reading the raw data (demand profiles, labels, hashes).
struct SolutionFile {
    RunManifest manifest;
    std::vector<std::string> participant_ids;
    std::vector<std::vector<double>> demand_kw; // per participant, horizon hours
    sizing::SizingSolution solution;
};

nlohmann::json to_json(const SolutionFile& f);
SolutionFile solution_from_json(const nlohmann::json& j);

void write_json_file(const std::string& path, const nlohmann::json& j);
nlohmann::json read_json_file(const std::string& path);

} // namespace recsizer
