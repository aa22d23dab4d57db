#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "orbires/rational.hpp"

namespace orbires {

inline constexpr const char* kEngineVersion = "1.0.0";

enum class Mode { kPoints, kAllZeros };
const char* to_string(Mode m) noexcept;
Mode parse_mode(std::string_view text);

struct OracleConfig {
  double epsilon = 1e-3;
  double radius = 1e-1;
  double newton_tolerance = 1e-12;
  double tolerance = 1e-6;  // accepted |numeric - exact|
  std::size_t starts = 0;
  std::uint64_t seed = 1;
};

/// Problem description read from a config file:
///
///   # comment
///   [space]
///   weights = 1, 1, 2
///   [field]
///   components = z1^2, z0^2, z0*z2
///   [pencil]              (instead of [field])
///   f = ...
///   g = ...
///   [points]
///   point = 0, 0, 1       (repeatable; homogeneous rational coordinates)
///   [invariant]
///   expr = 1/3*C1^2 + 2/3*C2
///   [oracle]
///   epsilon = 1e-3, radius = 0.1, newton_tolerance = 1e-12,
///   tolerance = 1e-6, starts = 0, seed = 1   (one key per line)
///   [run]
///   mode = points | all-zeros
struct Config {
  std::vector<std::int64_t> weights;
  std::vector<std::string> field;
  std::optional<std::pair<std::string, std::string>> pencil;
  std::vector<std::vector<Rational>> points;
  std::optional<std::string> invariant;
  OracleConfig oracle;
  std::optional<Mode> mode;
  std::uint64_t hash = 0;  // FNV-1a of the file text

  Mode effective_mode() const { return mode.value_or(points.empty() ? Mode::kAllZeros : Mode::kPoints); }
};

/// Throws InputError naming the offending line.
Config parse_config(std::string_view text);
Config load_config(const std::string& path);

std::uint64_t fnv1a(std::string_view text) noexcept;

/// "a, b/c, -d" -> rationals
std::vector<Rational> parse_rational_list(std::string_view text);

}  // namespace orbires
