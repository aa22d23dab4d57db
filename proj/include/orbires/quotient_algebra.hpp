#pragma once

#include <memory>
#include <vector>

#include "orbires/exec.hpp"
#include "orbires/groebner.hpp"
#include "orbires/linalg.hpp"

namespace orbires {

/// Zero-dimensional quotient A = Q[z]/(f_1, ..., f_n) of a square system,
/// with its standard-monomial basis, multiplication matrices and the global
/// residue functional lambda(h) = sum over all zeros of Res[h dz / f].
///
/// lambda is obtained from the Bezoutian of the system: reducing the
/// Bezoutian determinant in both sets of variables gives a pair of dual
/// bases {m_a}, {b_a}; lambda(h) is the coefficient of the dual of 1 when h
/// is written in the basis {b_a}.
class QuotientAlgebra {
 public:
  /// Throws ComputationError for a unit ideal (no zeros) or a system that is
  /// not zero-dimensional, InputError unless there are exactly n generators
  /// in n variables.
  static QuotientAlgebra build(const Ideal& ideal, Exec exec = Exec::kParallel);

  const Ideal& ideal() const noexcept { return ideal_; }
  const GroebnerBasis& groebner() const noexcept { return groebner_; }
  const std::shared_ptr<const VarList>& vars() const noexcept { return ideal_.vars; }

  /// Standard monomials in ascending grevlex order; the first is 1.
  const std::vector<Monomial>& standard_monomials() const noexcept { return basis_; }
  std::size_t dimension() const noexcept { return basis_.size(); }
  /// Position of m in the standard basis, or dimension() if m is not standard.
  std::size_t index_of(const Monomial& m) const;

  /// Column b holds the coordinates of x_var * m_b.
  const RationalMatrix& multiplication_matrix(std::size_t var) const { return mult_.at(var); }
  /// lambda(m_b) for each standard monomial.
  const RationalVector& residue_values() const noexcept { return residues_; }
  /// Reduced Bezoutian: Delta = sum C(a, c) m_a(z) m_c(w) modulo I (x) I.
  const RationalMatrix& bezoutian() const noexcept { return bezoutian_; }

  RationalVector one() const;
  RationalVector coordinates(const Polynomial& p) const;
  Polynomial to_polynomial(const RationalVector& v) const;
  RationalVector multiply(const RationalVector& a, const RationalVector& b) const;
  /// Matrix of multiplication by a.
  RationalMatrix multiplication_by(const RationalVector& a) const;
  /// Coordinates of the ideal K/I for an ideal K containing I.
  std::vector<RationalVector> ideal_span(const GroebnerBasis& k) const;

  Rational residue(const RationalVector& v) const;
  Rational residue(const Polynomial& h) const { return residue(coordinates(h)); }

  /// G(a, b) = lambda(m_a m_b).
  RationalMatrix gram_matrix() const;

 private:
  QuotientAlgebra(Ideal ideal, GroebnerBasis gb) : ideal_(std::move(ideal)), groebner_(std::move(gb)) {}

  void build_multiplication(Exec exec);
  void build_residue();

  Ideal ideal_;
  GroebnerBasis groebner_;
  std::vector<Monomial> basis_;
  std::vector<RationalMatrix> mult_;
  RationalMatrix bezoutian_;
  RationalVector residues_;
};

/// Multiplication matrices only; `exec` selects the serial reference or the
/// OpenMP kernel. Exposed for benchmarking and kernel-equivalence tests.
std::vector<RationalMatrix> multiplication_matrices(const GroebnerBasis& gb, const std::vector<Monomial>& basis,
                                                   Exec exec);

/// Standard monomials of a zero-dimensional basis, ascending grevlex.
std::vector<Monomial> standard_monomials(const GroebnerBasis& gb);

/// Bezoutian determinant of a square system, in the variables of the system
/// followed by one primed copy of them.
Polynomial bezoutian_determinant(std::span<const Polynomial> system);

}  // namespace orbires
