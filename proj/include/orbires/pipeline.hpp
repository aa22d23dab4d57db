#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "orbires/chern.hpp"
#include "orbires/config.hpp"
#include "orbires/exec.hpp"
#include "orbires/hirzebruch.hpp"
#include "orbires/oracle.hpp"
#include "orbires/residue.hpp"
#include "orbires/weighted_geometry.hpp"

namespace orbires {

struct InvariantSpec {
  std::string label;  // "C2", "C1^2", "P"
  InvariantPolynomial poly;
};

/// A validated config: the field on its space and the invariants to
/// evaluate (C_n always, C_1^2 when n = 2, the user polynomial if given).
struct Problem {
  Config config;
  OrbifoldField field;
  std::vector<InvariantSpec> invariants;
};

/// Throws InputError on any invalid ingredient. `invariant` overrides the
/// config's [invariant] expr.
Problem build_problem(const Config& config, const std::optional<std::string>& invariant = std::nullopt);

struct PointRecord {
  std::vector<Rational> point;
  bool is_zero = true;
  std::vector<Rational> section_values;  // lifted components, when not a zero
  std::size_t chart = 0;
  std::vector<Rational> cover;
  std::int64_t group_order = 1;
  std::int64_t multiplicity = 0;
  ResidueMethod method = ResidueMethod::kFastPath;
  std::vector<Rational> values;  // orbifold index per invariant
};

PointRecord evaluate_point(const Problem& problem, std::span<const Rational> point, Exec exec = Exec::kParallel);

struct TotalRecord {
  std::string label;
  Rational total;
  Rational expected;
  bool pass = false;
};

struct VerificationReport {
  Mode mode = Mode::kPoints;
  std::vector<std::int64_t> weights;
  std::int64_t degree = 0;
  std::vector<InvariantSpec> invariants;
  std::vector<PointRecord> points;  // point mode, sorted
  std::vector<ChartSum> charts;     // all-zeros mode
  std::vector<TotalRecord> totals;
  std::uint64_t config_hash = 0;
  std::uint64_t seed = 0;
  bool pass = false;
};

/// Group-weighted totals compared with the closed forms. Points are
/// evaluated concurrently under Exec::kParallel; the report does not depend
/// on the thread count.
VerificationReport run_verification(const Problem& problem, Mode mode, Exec exec = Exec::kParallel);

struct OracleRecord {
  std::vector<Rational> point;
  std::size_t chart = 0;
  std::string label;
  Rational exact;  // cover residue, before dividing by the group order
  std::complex<double> numeric;
  double error_estimate = 0;
  std::size_t zeros_found = 0;
  std::int64_t multiplicity = 0;
  bool reliable = false;
  bool pass = false;
};

/// Numeric cross-check of the cover residues at each point.
std::vector<OracleRecord> run_oracle(const Problem& problem, std::span<const std::vector<Rational>> points,
                                     const OracleConfig& settings, Exec exec = Exec::kParallel);

}  // namespace orbires
