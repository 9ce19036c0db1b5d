#pragma once

#include "glider/sim.hpp"

#include <filesystem>
#include <map>
#include <stdexcept>
#include <string>

namespace glider {

/// Raised for any malformed or unknown configuration input; the CLI maps it
/// to exit code 2.
class ConfigError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Parsed INI-style text: `[section]` headers, `key = value` lines, `#` or
/// `;` comments.  Values keep their raw text until typed by build_scenario.
struct ParsedConfig {
    std::map<std::string, std::map<std::string, std::string>> sections;
};

ParsedConfig parse_config_text(const std::string& text);
ParsedConfig load_config_file(const std::filesystem::path& path);

/// Apply one `section.key=value` command-line override.
void apply_override(ParsedConfig& cfg, const std::string& assignment);

/// Build a validated ScenarioConfig.  Defaults come from the scenario kind
/// (which must be present); every other field is optional.  Unknown sections
/// or keys raise ConfigError.
ScenarioConfig build_scenario(const ParsedConfig& cfg);

/// One-paragraph grammar summary used in error messages.
std::string config_schema_help();

}  // namespace glider
