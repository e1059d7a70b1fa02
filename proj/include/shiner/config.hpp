#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include "shiner/types.hpp"

namespace shiner {

/// Config problem tied to a key and, when it came from a file, a line.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string key, std::size_t line, const std::string& message);

  const std::string& key() const { return key_; }
  std::size_t line() const { return line_; }

 private:
  std::string key_;
  std::size_t line_;
};

/// Everything a `simulate` invocation needs. Defaults reproduce the
/// 100-node, C1 = C2 = 0.1, r = 0.2, w = 20, s = 0.08 swarm.
struct RunConfig {
  SwarmParams params;
  std::uint64_t seed = 1;
  std::size_t steps = 70;
  std::size_t stride = 35;
  Box region;
  double eps = 0.15;
  std::string out_dir = ".";

  /// Throws ConfigError for any violated parameter constraint.
  void validate() const;

  bool operator==(const RunConfig&) const = default;
};

/// Parses `key = value` lines; `#` starts a comment. Absent keys keep
/// their defaults; unknown keys and bad values are rejected.
RunConfig parse_config(std::string_view text);

/// Applies one `key = value` assignment; shared by file parsing and
/// command-line overrides.
void apply_config_value(RunConfig& config, std::string_view key, std::string_view value,
                        std::size_t line = 0);

/// Writes every key in a form `parse_config` reads back exactly.
std::string emit_config(const RunConfig& config);

}  // namespace shiner
