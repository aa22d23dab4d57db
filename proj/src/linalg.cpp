#include "orbires/linalg.hpp"

#include <algorithm>

#include "orbires/errors.hpp"

namespace orbires {

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::from_columns(const std::vector<RationalVector>& columns, std::size_t rows) {
  RationalMatrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c)
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
  return m;
}

RationalVector RationalMatrix::column(std::size_t c) const {
  RationalVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw InputError("matrix shapes do not conform");
  RationalMatrix out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j)
        if (rhs(k, j) != 0) out(i, j) += a * rhs(k, j);
    }
  return out;
}

RationalVector RationalMatrix::operator*(const RationalVector& v) const {
  if (cols_ != v.size()) throw InputError("matrix-vector shapes do not conform");
  RationalVector out(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k)
      if (v[k] != 0 && (*this)(i, k) != 0) out[i] += (*this)(i, k) * v[k];
  return out;
}

RationalMatrix RationalMatrix::operator+(const RationalMatrix& rhs) const {
  RationalMatrix out(*this);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] += rhs.data_[i];
  return out;
}

RationalMatrix RationalMatrix::operator-(const RationalMatrix& rhs) const {
  RationalMatrix out(*this);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] -= rhs.data_[i];
  return out;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

RationalMatrix RationalMatrix::pow(unsigned e) const {
  RationalMatrix result = identity(rows_);
  RationalMatrix base(*this);
  while (e > 0) {
    if (e & 1u) result = result * base;
    e >>= 1u;
    if (e > 0) base = base * base;
  }
  return result;
}

bool RationalMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rational& q) { return q == 0; });
}

std::vector<std::size_t> RationalMatrix::rref() {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
    std::size_t sel = row;
    while (sel < rows_ && (*this)(sel, col) == 0) ++sel;
    if (sel == rows_) continue;
    if (sel != row)
      for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(sel, j), (*this)(row, j));
    const Rational inv = 1 / (*this)(row, col);
    for (std::size_t j = col; j < cols_; ++j) (*this)(row, j) *= inv;
    for (std::size_t r = 0; r < rows_; ++r) {
      if (r == row || (*this)(r, col) == 0) continue;
      const Rational f = (*this)(r, col);
      for (std::size_t j = col; j < cols_; ++j)
        if ((*this)(row, j) != 0) (*this)(r, j) -= f * (*this)(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::size_t RationalMatrix::rank() const {
  RationalMatrix copy(*this);
  return copy.rref().size();
}

std::optional<RationalVector> RationalMatrix::solve(const RationalVector& b) const {
  if (rows_ != b.size()) throw InputError("right-hand side has the wrong length");
  RationalMatrix aug(rows_, cols_ + 1);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) aug(i, j) = (*this)(i, j);
    aug(i, cols_) = b[i];
  }
  const auto pivots = aug.rref();
  if (!pivots.empty() && pivots.back() == cols_) return std::nullopt;
  if (pivots.size() != cols_) return std::nullopt;
  RationalVector x(cols_);
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug(i, cols_);
  return x;
}

std::optional<RationalMatrix> RationalMatrix::inverse() const {
  if (rows_ != cols_) return std::nullopt;
  const std::size_t n = rows_;
  RationalMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = (*this)(i, j);
    aug(i, n + i) = 1;
  }
  const auto pivots = aug.rref();
  if (pivots.size() < n || pivots[n - 1] != n - 1) return std::nullopt;
  RationalMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

std::vector<RationalVector> RationalMatrix::nullspace() const {
  RationalMatrix copy(*this);
  const auto pivots = copy.rref();
  std::vector<bool> is_pivot(cols_, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<RationalVector> basis;
  for (std::size_t free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    RationalVector v(cols_);
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -copy(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<RationalVector> RationalMatrix::column_basis() const {
  RationalMatrix copy(*this);
  const auto pivots = copy.rref();
  std::vector<RationalVector> basis;
  basis.reserve(pivots.size());
  for (auto p : pivots) basis.push_back(column(p));
  return basis;
}

std::vector<RationalVector> intersect_spans(const std::vector<RationalVector>& a,
                                            const std::vector<RationalVector>& b, std::size_t dim) {
  if (a.empty() || b.empty()) return {};
  // [A | -B] (x; y) = 0  =>  A x lies in both spans.
  RationalMatrix m(dim, a.size() + b.size());
  for (std::size_t c = 0; c < a.size(); ++c)
    for (std::size_t r = 0; r < dim; ++r) m(r, c) = a[c][r];
  for (std::size_t c = 0; c < b.size(); ++c)
    for (std::size_t r = 0; r < dim; ++r) m(r, a.size() + c) = -b[c][r];
  std::vector<RationalVector> vectors;
  for (const auto& x : m.nullspace()) {
    RationalVector v(dim);
    for (std::size_t c = 0; c < a.size(); ++c)
      if (x[c] != 0)
        for (std::size_t r = 0; r < dim; ++r) v[r] += x[c] * a[c][r];
    vectors.push_back(std::move(v));
  }
  if (vectors.empty()) return {};
  return RationalMatrix::from_columns(vectors, dim).column_basis();
}

std::optional<RationalVector> split_along(const std::vector<RationalVector>& a,
                                          const std::vector<RationalVector>& b,
                                          const RationalVector& target) {
  const std::size_t dim = target.size();
  std::vector<RationalVector> cols = a;
  cols.insert(cols.end(), b.begin(), b.end());
  if (cols.empty()) return is_zero(target) ? std::optional<RationalVector>(RationalVector(dim)) : std::nullopt;
  const RationalMatrix m = RationalMatrix::from_columns(cols, dim);
  const auto coeffs = m.solve(target);
  if (!coeffs) return std::nullopt;
  RationalVector x(dim);
  for (std::size_t c = 0; c < a.size(); ++c)
    if ((*coeffs)[c] != 0)
      for (std::size_t r = 0; r < dim; ++r) x[r] += (*coeffs)[c] * a[c][r];
  return x;
}

bool is_zero(const RationalVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& q) { return q == 0; });
}

}  // namespace orbires
