#pragma once

#include <span>
#include <vector>

#include "orbires/polynomial.hpp"

namespace orbires {

/// Row-major matrix of polynomials over one shared variable list.
class PolyMatrix {
 public:
  PolyMatrix(std::size_t rows, std::size_t cols, std::shared_ptr<const VarList> vars);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const VarList& vars() const noexcept { return *vars_; }

  const Polynomial& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, Polynomial p);

  PolyMatrix operator*(const PolyMatrix& rhs) const;
  Polynomial trace() const;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::shared_ptr<const VarList> vars_;
  std::vector<Polynomial> entries_;
};

/// Entry (i, j) = d fields[i] / d vars[j]. Every field must live on `vars`.
PolyMatrix jacobian_matrix(std::span<const Polynomial> fields, const VarList& vars);

/// (C_1(M), ..., C_n(M)): the elementary symmetric functions of the
/// eigenvalues, i.e. det(t + M) = sum_i C_i t^(n-i). Faddeev-LeVerrier.
std::vector<Polynomial> char_coeffs(const PolyMatrix& m);

/// Determinant by cofactor expansion along the first row.
Polynomial determinant(const PolyMatrix& m);

}  // namespace orbires
