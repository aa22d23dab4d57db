#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "orbires/monomial.hpp"
#include "orbires/rational.hpp"

namespace orbires {

using VarList = std::vector<std::string>;

/// Exact multivariate polynomial over Q on an ordered list of named
/// variables. Terms are kept in descending grevlex order; no stored
/// coefficient is ever zero.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, Rational, GrevlexDescending>;

  Polynomial();
  explicit Polynomial(VarList vars);
  Polynomial(std::shared_ptr<const VarList> vars, TermMap terms);

  static Polynomial constant(const VarList& vars, const Rational& c);
  static Polynomial variable(const VarList& vars, std::size_t index);
  static Polynomial variable(const VarList& vars, std::string_view name);
  static Polynomial term(const VarList& vars, const Monomial& m, const Rational& c);

  const VarList& vars() const noexcept { return *vars_; }
  const std::shared_ptr<const VarList>& shared_vars() const noexcept { return vars_; }
  std::size_t nvars() const noexcept { return vars_->size(); }
  std::size_t var_index(std::string_view name) const;

  const TermMap& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;
  Rational coefficient(const Monomial& m) const;
  Rational constant_term() const;

  /// Requires a nonzero polynomial.
  const Monomial& leading_monomial() const;
  const Rational& leading_coefficient() const;
  /// -1 for the zero polynomial.
  std::int64_t total_degree() const noexcept;

  /// Adds c·m in place, dropping the term if it cancels.
  void add_term(const Monomial& m, const Rational& c);

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Polynomial& rhs);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  Polynomial operator-() const;

  Polynomial pow(unsigned exponent) const;

  /// Same variable sequence and same terms.
  friend bool operator==(const Polynomial& a, const Polynomial& b);

  Polynomial differentiate(std::size_t var) const;
  Polynomial differentiate(std::string_view var) const;

  Rational evaluate(std::span<const Rational> point) const;

  /// Replaces variable i by images[i]; all images share one variable list,
  /// which becomes the variable list of the result.
  Polynomial substitute(std::span<const Polynomial> images) const;

  /// Re-expresses the polynomial over another variable list, matching
  /// variables by name. Variables absent from `target` must not occur.
  Polynomial rebase(const std::shared_ptr<const VarList>& target) const;

  /// Canonical text: descending terms, explicit '*' and '^', rationals as p/q.
  std::string to_string() const;

 private:
  void check_compatible(const Polynomial& other) const;

  std::shared_ptr<const VarList> vars_;
  TermMap terms_;
};

std::shared_ptr<const VarList> make_vars(VarList vars);
bool same_vars(const Polynomial& a, const Polynomial& b);

/// Parses text in the shared polynomial grammar:
///   expression := ['+'|'-'] term (('+'|'-') term)*
///   term       := factor ('*' factor)*
///   factor     := primary ('^' uint)*
///   primary    := rational | variable | '(' expression ')'
///   rational   := uint ('/' uint)?
/// Whitespace is insignificant; implicit multiplication is rejected.
Polynomial parse_polynomial(std::string_view text, const VarList& vars);
Polynomial parse_polynomial(std::string_view text, const std::shared_ptr<const VarList>& vars);

/// Weighted degree of a polynomial: uniform, mixed (not quasi-homogeneous),
/// or "any" for the zero polynomial.
class QuasiDegree {
 public:
  static QuasiDegree any() { return QuasiDegree(Kind::kAny, 0); }
  static QuasiDegree mixed() { return QuasiDegree(Kind::kMixed, 0); }
  static QuasiDegree of(std::int64_t d) { return QuasiDegree(Kind::kUniform, d); }

  bool is_any() const noexcept { return kind_ == Kind::kAny; }
  bool exists() const noexcept { return kind_ != Kind::kMixed; }
  bool is_uniform() const noexcept { return kind_ == Kind::kUniform; }
  std::int64_t value() const;
  /// True when the zero polynomial, or uniform with the given degree.
  bool compatible_with(std::int64_t d) const noexcept {
    return kind_ == Kind::kAny || (kind_ == Kind::kUniform && value_ == d);
  }

  friend bool operator==(const QuasiDegree&, const QuasiDegree&) = default;

 private:
  enum class Kind { kAny, kUniform, kMixed };
  QuasiDegree(Kind k, std::int64_t v) : kind_(k), value_(v) {}
  Kind kind_;
  std::int64_t value_;
};

QuasiDegree quasi_degree(const Polynomial& p, std::span<const std::int64_t> weights);

}  // namespace orbires
