#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "vanetsl/world.hpp"

namespace vanetsl {

// Parse or validation failure; message carries "line N:" or "env VAR:"
// context.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A sweep requested from the config file itself (fig presets are built in).
struct SweepRequest {
    std::string param;
    std::vector<std::string> values;
};

struct ParsedConfig {
    ScenarioConfig scenario;
    int repetitions = 1;
    std::optional<SweepRequest> sweep;
};

// Parses line-oriented `key=value` text. Blank lines and `#` comments are
// ignored; unknown keys, malformed values and constraint violations are
// rejected with line-numbered messages. An empty document yields defaults.
ParsedConfig parse_config(const std::string& text);

// parse_config on a file's contents, then environment overrides: for every
// config key KEY, a set VANETSL_KEY variable replaces the file value.
ParsedConfig load_config(const std::string& path, bool apply_env = true);

// The list of recognized config keys (used for env scanning and docs).
std::vector<std::string> config_keys();

}  // namespace vanetsl
