#include "recsizer/io/manifest.hpp"

#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <sstream>

#include "recsizer/errors.hpp"

namespace recsizer {

std::uint64_t fnv1a64(const void* data, std::size_t size) {
    const auto* bytes = static_cast<const unsigned char*>(data);
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (std::size_t i = 0; i < size; ++i) {
        h ^= bytes[i];
        h *= 0x100000001b3ull;
    }
    return h;
}

std::string hash_hex(const std::string& bytes) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx",
                  static_cast<unsigned long long>(fnv1a64(bytes.data(), bytes.size())));
    return buf;
}

std::string hash_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError(path + ": cannot open for hashing");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return hash_hex(buffer.str());
}

RunManifest RunManifest::make(const std::string& command) {
    RunManifest m;
    m.command = command;
    std::time_t now = std::time(nullptr);
    if (const char* epoch = std::getenv("SOURCE_DATE_EPOCH"))
        now = static_cast<std::time_t>(std::strtoll(epoch, nullptr, 10));
    std::tm utc{};
    gmtime_r(&now, &utc);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &utc);
    m.timestamp_utc = buf;
    return m;
}

nlohmann::json RunManifest::to_json() const {
    nlohmann::json j;
    j["command"] = command;
    if (!config_hash.empty()) j["config_hash"] = config_hash;
    j["input_hashes"] = input_hashes;
    j["tool_version"] = tool_version;
    j["timestamp_utc"] = timestamp_utc;
    if (!solver_stats.is_null()) j["solver_stats"] = solver_stats;
    return j;
}

RunManifest RunManifest::from_json(const nlohmann::json& j) {
    RunManifest m;
    m.command = j.value("command", "");
    m.config_hash = j.value("config_hash", "");
    if (j.contains("input_hashes"))
        m.input_hashes = j.at("input_hashes").get<std::map<std::string, std::string>>();
    m.tool_version = j.value("tool_version", "");
    m.timestamp_utc = j.value("timestamp_utc", "");
    if (j.contains("solver_stats")) m.solver_stats = j.at("solver_stats");
    return m;
}

} // namespace recsizer
