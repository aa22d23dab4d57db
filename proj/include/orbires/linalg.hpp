#pragma once

#include <optional>
#include <vector>

#include "orbires/rational.hpp"

namespace orbires {

using RationalVector = std::vector<Rational>;

/// Dense row-major matrix over Q.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static RationalMatrix identity(std::size_t n);
  /// Matrix whose columns are the given vectors.
  static RationalMatrix from_columns(const std::vector<RationalVector>& columns, std::size_t rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  RationalVector column(std::size_t c) const;
  RationalMatrix operator*(const RationalMatrix& rhs) const;
  RationalVector operator*(const RationalVector& v) const;
  RationalMatrix operator+(const RationalMatrix& rhs) const;
  RationalMatrix operator-(const RationalMatrix& rhs) const;
  RationalMatrix transpose() const;
  RationalMatrix pow(unsigned e) const;
  bool is_zero() const;

  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

  std::size_t rank() const;
  /// Unique solution of A x = b, or nullopt when A is singular or b is not
  /// in the column space.
  std::optional<RationalVector> solve(const RationalVector& b) const;
  std::optional<RationalMatrix> inverse() const;
  /// Basis of {x : A x = 0}.
  std::vector<RationalVector> nullspace() const;
  /// Basis of the column space, chosen among the original columns.
  std::vector<RationalVector> column_basis() const;

 private:
  /// Reduced row echelon form in place; returns pivot columns.
  std::vector<std::size_t> rref();

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Basis of the intersection of two subspaces given by spanning sets.
std::vector<RationalVector> intersect_spans(const std::vector<RationalVector>& a,
                                            const std::vector<RationalVector>& b, std::size_t dim);

/// Expresses target = x + y with x in span(a), y in span(b), assuming the two
/// spans are complementary. Returns x, or nullopt if not decomposable.
std::optional<RationalVector> split_along(const std::vector<RationalVector>& a,
                                          const std::vector<RationalVector>& b,
                                          const RationalVector& target);

bool is_zero(const RationalVector& v);

}  // namespace orbires
