#include "orbires/poly_matrix.hpp"

#include <bit>

#include "orbires/errors.hpp"

namespace orbires {

PolyMatrix::PolyMatrix(std::size_t rows, std::size_t cols, std::shared_ptr<const VarList> vars)
    : rows_(rows), cols_(cols), vars_(std::move(vars)), entries_(rows * cols, Polynomial(vars_, {})) {}

void PolyMatrix::set(std::size_t r, std::size_t c, Polynomial p) {
  if (!(p.vars() == *vars_)) throw InputError("matrix entry on a different variable sequence");
  entries_[r * cols_ + c] = p.rebase(vars_);
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw InputError("matrix shapes do not conform");
  PolyMatrix out(rows_, rhs.cols_, vars_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < rhs.cols_; ++j) {
      Polynomial acc(vars_, {});
      for (std::size_t k = 0; k < cols_; ++k) {
        const auto& a = (*this)(i, k);
        const auto& b = rhs(k, j);
        if (!a.is_zero() && !b.is_zero()) acc += a * b;
      }
      out.entries_[i * out.cols_ + j] = std::move(acc);
    }
  return out;
}

Polynomial PolyMatrix::trace() const {
  if (rows_ != cols_) throw InputError("trace of a non-square matrix");
  Polynomial acc(vars_, {});
  for (std::size_t i = 0; i < rows_; ++i) acc += (*this)(i, i);
  return acc;
}

PolyMatrix jacobian_matrix(std::span<const Polynomial> fields, const VarList& vars) {
  auto shared = make_vars(vars);
  PolyMatrix jac(fields.size(), vars.size(), shared);
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (!(fields[i].vars() == vars)) throw InputError("field does not use the Jacobian variables");
    const Polynomial f = fields[i].rebase(shared);
    for (std::size_t j = 0; j < vars.size(); ++j) jac.set(i, j, f.differentiate(j));
  }
  return jac;
}

std::vector<Polynomial> char_coeffs(const PolyMatrix& m) {
  if (m.rows() != m.cols()) throw InputError("characteristic coefficients need a square matrix");
  const std::size_t n = m.rows();
  const auto vars = make_vars(m.vars());
  std::vector<Polynomial> a;  // det(t - M) = t^n + a_1 t^(n-1) + ... + a_n
  a.reserve(n);
  PolyMatrix mk(n, n, vars);  // M_0 = 0
  Polynomial prev = Polynomial::constant(m.vars(), 1);
  for (std::size_t k = 1; k <= n; ++k) {
    PolyMatrix next = m * mk;
    for (std::size_t i = 0; i < n; ++i) next.set(i, i, next(i, i) + prev);
    mk = next;
    Polynomial ak = (m * mk).trace() * ratio(-1, static_cast<long>(k));
    a.push_back(ak);
    prev = ak;
  }
  std::vector<Polynomial> c;
  c.reserve(n);
  for (std::size_t i = 0; i < n; ++i) c.push_back(i % 2 == 0 ? -a[i] : a[i]);
  return c;
}

Polynomial determinant(const PolyMatrix& m) {
  if (m.rows() != m.cols()) throw InputError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return Polynomial::constant(m.vars(), 1);
  if (n > 20) throw InputError("determinant size too large");
  const auto vars = make_vars(m.vars());
  // dp[mask]: signed sum over placements of the first popcount(mask) rows
  // onto the columns in mask.
  std::vector<Polynomial> dp(std::size_t{1} << n, Polynomial(vars, {}));
  dp[0] = Polynomial(vars, {{Monomial(n == 0 ? 0 : m.vars().size()), Rational(1)}});
  for (std::size_t mask = 0; mask < dp.size(); ++mask) {
    if (dp[mask].is_zero()) continue;
    const std::size_t row = static_cast<std::size_t>(std::popcount(mask));
    if (row == n) continue;
    for (std::size_t col = 0; col < n; ++col) {
      if (mask & (std::size_t{1} << col)) continue;
      const Polynomial& entry = m(row, col);
      if (entry.is_zero()) continue;
      const int inversions = std::popcount(mask >> (col + 1));
      Polynomial t = dp[mask] * entry.rebase(vars);
      if (inversions % 2) t = -t;
      dp[mask | (std::size_t{1} << col)] += t;
    }
  }
  return dp.back();
}

}  // namespace orbires
