#pragma once

#include <cstdint>
#include <functional>
#include <initializer_list>
#include <vector>

namespace orbires {

/// Exponent vector of a monomial, one entry per ambient variable.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  Monomial(std::initializer_list<std::uint32_t> exps) : exps_(exps) {}
  explicit Monomial(std::vector<std::uint32_t> exps) : exps_(std::move(exps)) {}

  std::size_t size() const noexcept { return exps_.size(); }
  std::uint32_t operator[](std::size_t i) const { return exps_[i]; }
  std::uint32_t& operator[](std::size_t i) { return exps_[i]; }
  const std::vector<std::uint32_t>& exponents() const noexcept { return exps_; }

  std::uint64_t degree() const noexcept;
  bool is_one() const noexcept;

  bool divides(const Monomial& other) const noexcept;
  Monomial operator*(const Monomial& other) const;
  /// Exact quotient; caller guarantees divisibility.
  Monomial operator/(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;
  bool coprime(const Monomial& other) const noexcept;

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<std::uint32_t> exps_;
};

/// Graded reverse lexicographic comparison: negative, zero or positive as
/// a <, ==, > b.
int grevlex_compare(const Monomial& a, const Monomial& b) noexcept;

/// Strict weak order placing larger monomials first (descending grevlex).
struct GrevlexDescending {
  bool operator()(const Monomial& a, const Monomial& b) const noexcept {
    return grevlex_compare(a, b) > 0;
  }
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

}  // namespace orbires
