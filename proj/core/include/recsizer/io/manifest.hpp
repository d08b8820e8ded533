#pragma once

#include <cstdint>
#include <map>
#include <string>

#include <json.hpp>

namespace recsizer {

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr int kSchemaVersion = 1;

/// FNV-1a over raw bytes, rendered as 16 hex digits.
std::uint64_t fnv1a64(const void* data, std::size_t size);
std::string hash_hex(const std::string& bytes);
std::string hash_file(const std::string& path);

/// Provenance block written into every output file. The timestamp honours
/// SOURCE_DATE_EPOCH so runs can be made byte-reproducible.
struct RunManifest {
    std::string command;
    std::string config_hash;                       // empty when no config involved
    std::map<std::string, std::string> input_hashes; // path -> hash
    std::string tool_version = kToolVersion;
    std::string timestamp_utc;
    nlohmann::json solver_stats;                   // command-specific extras

    static RunManifest make(const std::string& command);
    nlohmann::json to_json() const;
    static RunManifest from_json(const nlohmann::json& j);
};

} // namespace recsizer
