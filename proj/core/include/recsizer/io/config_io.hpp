#pragma once

#include <string>

#include "recsizer/config.hpp"

namespace recsizer {

/// Config from TOML text. discount_rate is mandatory; referenced CSV paths
/// are recorded but not loaded.
RECConfig config_from_toml(const std::string& text);

/// Canonical TOML form; config_from_toml(config_to_toml(c)) reproduces c
/// field for field (series excluded, their paths round-trip).
std::string config_to_toml(const RECConfig& config);

/// Reads a config file; when load_series is set, demand and weather CSVs are
/// loaded relative to the config file's directory.
RECConfig load_config(const std::string& path, bool load_series);

} // namespace recsizer
