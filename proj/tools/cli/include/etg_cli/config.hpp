#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "etg/vec3.hpp"

namespace etg::cli {

enum class Mode { map, elliptic, involutions, sqrt };

std::string_view to_string(Mode m);
/// Throws etg::Error(InvalidConfig) for unknown names.
Mode parse_mode(std::string_view name);

struct RunConfig {
  Vec3 delta{-0.05, 0.05, -0.05};
  Vec3 x0{1.0, 0.5, 0.5};
  int steps = 10;
  Mode mode = Mode::map;
  std::optional<double> nu1;
  std::optional<std::uint64_t> seed;
  std::map<std::string, double> tolerances;

  friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

/// Reporting tolerance used when a suite has no entry in RunConfig::tolerances:
/// $ETG_TOLERANCE if set, else 1e-8.
double default_tolerance();
double tolerance(const RunConfig& c, const std::string& name);

/// Throws etg::Error(InvalidConfig).
RunConfig parse_config(std::string_view json);
std::string serialize_config(const RunConfig& c);

RunConfig load_config(const std::string& path);

/// "a,b,c" -> Vec3. Throws etg::Error(InvalidConfig).
Vec3 parse_triple(std::string_view text);

/// Throws etg::Error(InvalidConfig) when steps < 0.
void validate(const RunConfig& c);

}  // namespace etg::cli
