#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "orbires/polynomial.hpp"
#include "orbires/rational.hpp"
#include "orbires/residue.hpp"
#include "orbires/weighted_geometry.hpp"

namespace orbires {

/// A field on one of the two affine charts of the resolution of the cyclic
/// quotient singularity C^2 / Z_k: the total space of O(-k) over the
/// exceptional line D = {y = 0}.
///
/// Chart 1: x = u1 / u0, y = u0^k. Chart 2: x = u0 / u1, y = u1^k.
/// On the overlap the two are related by (x2, y2) = (1 / x1, x1^k y1).
struct ResolutionChartField {
  int chart = 1;  // 1 or 2
  std::shared_ptr<const VarList> vars;  // (x, y)
  Polynomial xdot;
  Polynomial ydot;

  std::vector<Polynomial> components() const { return {xdot, ydot}; }
};

/// Pullback of a Z_k-equivariant field (u0', u1') on the cover of the
/// singular point. Every monomial must have total degree = 1 mod k;
/// otherwise ComputationError. For a field of degree d on P(1,1,k) that
/// holds exactly when d = 1 mod k.
std::pair<ResolutionChartField, ResolutionChartField> pullback_to_resolution(std::span<const Polynomial> cover_field,
                                                                             std::int64_t k);
std::pair<ResolutionChartField, ResolutionChartField> pullback_to_resolution(const ChartLift& lift,
                                                                             std::int64_t k);

/// Checks that chart 1 maps onto chart 2 under (x2, y2) = (1/x1, x1^k y1),
/// exactly, as Laurent polynomials in x1.
bool transition_consistent(const ResolutionChartField& chart1, const ResolutionChartField& chart2, std::int64_t k);

/// A zero of the resolved field on D. Rational zeros carry their point and
/// exact index; the roots of a factor of x'(x, 0) without rational roots
/// are grouped in one record whose index is the sum over them.
struct ExceptionalZero {
  int chart = 1;
  std::optional<Rational> x;  // set for rational zeros
  Polynomial factor;          // minimal factor in x whose roots this record covers
  std::int64_t root_count = 1;
  std::int64_t root_multiplicity = 1;  // multiplicity as a root of x'(x, 0)
  std::optional<Rational> index;       // sum of tangent-field indices
  bool numeric_only = false;           // roots are not rational
};

/// Zeros on D: roots of x'(x, 0) in chart 1 plus x2 = 0 in chart 2. Throws
/// ComputationError if x'(x, 0) vanishes identically.
std::vector<ExceptionalZero> exceptional_zero_indices(
    const std::pair<ResolutionChartField, ResolutionChartField>& fields, const ResidueOptions& opts = {});

/// (d^2 + kd + k)(k - 1/k), recomputed as the formal resolution integral
/// (d^2 + kd + k) k minus the orbifold total on P(1,1,k).
struct LocalCorrection {
  Rational value;
  Rational formal_integral;
  Rational orbifold_total;
};
LocalCorrection local_chern_correction(std::int64_t k, std::int64_t d);

/// Both readings of the local identity at e_2 for a field on P(1,1,k).
///   A: orbifold index of C_2 at e_2 (0 when e_2 is not a zero or k = 1)
///   B: tangent-field indices of the resolved field along D
///   C: local correction
/// The literal reading asks B - A = C. The reading forced by the global
/// count asks that the indices along D sum to A + C. Only the global
/// identity formal - C = total is interpretation-free.
struct ResolutionReport {
  std::int64_t k = 1;
  std::int64_t degree = 0;
  bool vertex_is_zero = false;
  Rational a;
  std::optional<Rational> b;
  std::string b_note;  // why B is missing or partial
  Rational c;
  Rational implied_sum;  // A + C
  std::optional<bool> literal_holds;
  Rational formal_integral;
  Rational orbifold_total;  // residue engine, all zeros
  Rational away_sum;        // orbifold_total - A
  bool interpretation_free_holds = false;  // A + C == formal - away_sum
  std::vector<ExceptionalZero> exceptional;
};
ResolutionReport verify_resolution_identity(const OrbifoldField& field, const ResidueOptions& opts = {});

}  // namespace orbires
