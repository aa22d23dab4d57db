#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "orbires/chern.hpp"
#include "orbires/errors.hpp"
#include "orbires/exec.hpp"
#include "orbires/quotient_algebra.hpp"
#include "orbires/weighted_geometry.hpp"

namespace orbires {

/// Raised when a requested point is not a zero of the system or section.
/// Carries the values of the components there.
class NotAZeroError : public ComputationError {
 public:
  NotAZeroError(const std::string& what, std::vector<Rational> values)
      : ComputationError(what), values_(std::move(values)) {}
  const std::vector<Rational>& values() const noexcept { return values_; }

 private:
  std::vector<Rational> values_;
};

enum class ResidueMethod { kFastPath, kGroebner };
const char* to_string(ResidueMethod m) noexcept;

struct ResidueResult {
  Rational value;
  std::vector<Rational> point;  // cover point for orbifold indices
  std::int64_t multiplicity = 0;
  ResidueMethod method = ResidueMethod::kFastPath;
  std::int64_t group_order = 1;
  std::size_t chart = 0;
};

struct ResidueOptions {
  bool force_groebner = false;  // skip the nondegenerate shortcut
  Exec exec = Exec::kParallel;
};

/// Splits 1 = e + (1 - e) with e in K1/I and 1 - e in K2/I, for ideals
/// K1, K2 containing I with K1 + K2 = (1) and K1 cap K2 = I. Throws
/// ComputationError when the two subspaces are not complementary.
RationalVector crt_idempotent(const QuotientAlgebra& a, const GroebnerBasis& k1, const GroebnerBasis& k2);

/// e_p for a rational zero p of the algebra's ideal, via the saturations
/// J = I : m_p^inf and Q = I : J^inf, 1 = a + b with a in J, b in Q.
RationalVector local_idempotent(const QuotientAlgebra& a, std::span<const Rational> p);

/// e_p from the joint generalized eigenspaces of the multiplication
/// matrices (independent of any saturation); used as a cross-check.
RationalVector local_idempotent_spectral(const QuotientAlgebra& a, std::span<const Rational> p);

/// Idempotent of the components lying in {x_var = 0}, from the split
/// I = (I : x_var^inf) cap (I + x_var^mu).
RationalVector vanishing_idempotent(const QuotientAlgebra& a, std::size_t var);
/// Same for the components lying in {g = 0}.
RationalVector vanishing_idempotent(const QuotientAlgebra& a, const Polynomial& g);

/// Res_p[h dz / (f_1 ... f_n)]. Throws NotAZeroError when some f_i(p) != 0,
/// ComputationError when the system is not zero-dimensional.
ResidueResult local_residue(std::span<const Polynomial> fields, const Polynomial& h, std::span<const Rational> p,
                            const ResidueOptions& opts = {});

/// Local multiplicity mu_p = lambda(det J e_p).
std::int64_t multiplicity(std::span<const Polynomial> fields, std::span<const Rational> p,
                          const ResidueOptions& opts = {});

/// Numerator P(C_1(J xi), ..., C_n(J xi)) of a lifted field.
Polynomial invariant_numerator(std::span<const Polynomial> lifted, const InvariantPolynomial& p);

/// Chart of the first nonzero coordinate, and the cover point over a
/// projective point there (coordinate in the chart scaled to 1). Throws
/// InputError for the zero vector or when no rational cover point exists.
struct CoverPoint {
  std::size_t chart = 0;
  std::vector<Rational> coords;  // in the chart variables u_j, j != chart
  bool is_vertex = false;
};
CoverPoint cover_point(const WeightedSpace& space, std::span<const Rational> point);

/// (1/#G_p) Res_{p~}[P(J xi~) dz / (xi~_1 ... xi~_n)] at a projective point.
ResidueResult orbifold_index(const OrbifoldField& field, std::span<const Rational> point,
                             const InvariantPolynomial& p, const ResidueOptions& opts = {});

/// Residue sums over every zero of the section, each zero counted once in
/// the chart of its first nonzero coordinate. In chart i the zeros new to
/// the chart are the components of the lifted ideal inside
/// u_0 = ... = u_{i-1} = 0; their residues are summed with the global
/// functional and divided by w_i, which accounts for both free orbits and
/// fixed points.
struct ChartSum {
  std::size_t chart = 0;
  std::int64_t group_order = 1;
  std::int64_t cover_zeros = 0;       // with multiplicity
  std::vector<Rational> residue_sums;  // per invariant, before dividing by w_i
};
struct GlobalSum {
  std::vector<ChartSum> charts;
  std::vector<Rational> totals;  // per invariant
};
GlobalSum global_orbifold_sum(const OrbifoldField& field, std::span<const InvariantPolynomial> invariants,
                              const ResidueOptions& opts = {});

}  // namespace orbires
