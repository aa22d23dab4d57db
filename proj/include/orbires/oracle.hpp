#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "orbires/exec.hpp"
#include "orbires/polynomial.hpp"

namespace orbires {

/// Floating-point cross-check of an exact local residue. The system is
/// perturbed to f + eps L with seeded generic linear forms L vanishing at p,
/// which splits the zero at p into simple zeros; those inside the
/// localization ball are found by multi-start Newton and h / det J is
/// summed over them. Three levels eps0, eps0/2, eps0/4 give a Richardson
/// estimate of the eps -> 0 limit.
struct OracleSettings {
  double epsilon = 1e-3;
  double radius = 1e-1;
  double newton_tolerance = 1e-12;
  std::size_t starts = 0;  // 0: 200 times the Bezout bound of the system
  std::uint64_t seed = 1;
  double dedup_radius = 1e-6;
  Exec exec = Exec::kParallel;
};

struct OracleLevel {
  double epsilon = 0;
  std::vector<std::vector<std::complex<double>>> zeros;  // sorted lexicographically
  std::complex<double> sum;
};

struct NumericResidue {
  std::complex<double> value;  // extrapolated
  double error_estimate = 0;   // |second-order - first-order extrapolation|
  std::vector<OracleLevel> levels;
  bool reliable = true;  // same zero count at every level
  std::size_t zero_count() const { return levels.empty() ? 0 : levels.front().zeros.size(); }
};

/// Throws InputError for a malformed system, ComputationError when no zero
/// is found near p.
NumericResidue numeric_local_residue(std::span<const Polynomial> fields, const Polynomial& h,
                                     std::span<const Rational> p, const OracleSettings& settings = {});

}  // namespace orbires
