#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "orbires/polynomial.hpp"
#include "orbires/rational.hpp"

namespace orbires {

/// Quasi-homogeneous polynomial of weighted degree n in C_1..C_n, where C_i
/// has weight i: sum_nu a_nu C_1^nu_1 ... C_n^nu_n with sum i nu_i = n.
class InvariantPolynomial {
 public:
  using Exponents = std::vector<std::uint32_t>;

  /// Throws InputError when some term violates the degree constraint or the
  /// polynomial is zero.
  InvariantPolynomial(std::size_t n, std::map<Exponents, Rational> terms);

  /// Parses an expression in C1..Cn, e.g. "(C1^2 + 2*C2)/3" is written
  /// "1/3*C1^2 + 2/3*C2".
  static InvariantPolynomial parse(std::string_view text, std::size_t n);
  /// C_n: Poincare-Hopf numerator.
  static InvariantPolynomial top_chern(std::size_t n);
  /// C_1^2 on surfaces: Baum-Bott numerator.
  static InvariantPolynomial baum_bott();

  std::size_t dimension() const noexcept { return n_; }
  const std::map<Exponents, Rational>& terms() const noexcept { return terms_; }

  Rational evaluate(std::span<const Rational> c) const;
  /// Substitutes polynomials for C_1..C_n.
  Polynomial evaluate(std::span<const Polynomial> c) const;

  std::string to_string() const;

  friend bool operator==(const InvariantPolynomial&, const InvariantPolynomial&) = default;

 private:
  std::size_t n_;
  std::map<Exponents, Rational> terms_;
};

/// j-th elementary symmetric function of the weights; C_0 = 1. Throws
/// InputError unless 0 <= j <= w.size().
Integer elementary_symmetric(std::span<const std::int64_t> w, std::size_t j);

/// gamma_j = sum_{i=0}^{j} C_i(w) (d-1)^{j-i}, j = 1..n.
std::vector<Rational> chern_gammas(std::span<const std::int64_t> w, std::int64_t d);

/// P(gamma_1, ..., gamma_n) / (w_0 ... w_n).
Rational chern_number(const InvariantPolynomial& p, std::span<const std::int64_t> w, std::int64_t d);

/// (1 / prod w) sum_{j=0}^{n} C_j(w) (d-1)^{n-j}.
Rational index_sum_rhs(std::span<const std::int64_t> w, std::int64_t d);

/// (d + |w| - 1)^2 / (w_0 w_1 w_2); n = 2 only.
Rational bb_sum_rhs(std::span<const std::int64_t> w, std::int64_t d);

/// Degrees for which every singularity can be radial on a weighted plane:
/// the roots of 3(d-1)^2 + 2C_1(d-1) + 4C_2 - C_1^2 = 0, that is
/// d = (3 - C_1 +- 2 sqrt(C_1^2 - 3C_2)) / 3.
struct RadialDegrees {
  Integer discriminant;                 // C_1^2 - 3 C_2
  std::optional<Rational> plus, minus;  // set when the discriminant is a perfect square
  bool rational() const noexcept { return plus.has_value(); }
};
RadialDegrees radial_degrees(std::span<const std::int64_t> w);

struct SingularityVerdict {
  bool by_degree = false;        // d >= 1, or n = 2 and d >= 0
  bool by_divisibility = false;  // d - 1 does not divide C_n(w)
  bool sections_exist = true;    // d > 1 - max_{i != j}(w_i + w_j)
  std::string reason;            // "inconclusive" when neither criterion fires
  bool forced() const noexcept { return by_degree || by_divisibility; }
};
SingularityVerdict must_have_singularity(std::span<const std::int64_t> w, std::int64_t d);

/// On P(1,1,k): true iff k does not divide d^2. Throws InputError for k <= 1.
bool vertex_singularity_forced(std::int64_t k, std::int64_t d);

/// A claim about the singular set of a foliation on a weighted plane.
enum class VertexClaim {
  kAllThreeVertices,  // Sing = {e_0, e_1, e_2}, all nondegenerate
  kOnlyLastVertex,    // Sing = {e_2}, nondegenerate
};
struct ClaimVerdict {
  bool inconsistent = false;
  std::string reason;
};
ClaimVerdict vertex_exclusive_check(std::span<const std::int64_t> w, std::int64_t d, VertexClaim claim);

}  // namespace orbires
