#pragma once

#include <span>
#include <string>

#include "orbires/pipeline.hpp"

namespace orbires {

/// Text renderings of command results. Machine output is one record per
/// line: "record=<kind>" followed by space-separated key=value pairs, with
/// rationals as p/q, coordinate lists comma-separated and no spaces inside
/// values. See README.md for the schema.

std::string render_check(const Problem& problem, bool machine);
std::string render_index(const Problem& problem, const PointRecord& rec, bool machine);
std::string render_verification(const VerificationReport& rep, bool machine);
std::string render_resolution(const ResolutionReport& rep, std::uint64_t config_hash, bool machine);
std::string render_oracle(std::span<const OracleRecord> recs, const OracleConfig& settings, std::uint64_t config_hash,
                          bool machine);

std::string join_rationals(std::span<const Rational> v);
std::string hex_hash(std::uint64_t h);

}  // namespace orbires
