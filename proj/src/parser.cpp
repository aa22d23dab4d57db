#include <cctype>
#include <limits>

#include "orbires/errors.hpp"
#include "orbires/polynomial.hpp"

namespace orbires {

namespace {

class PolynomialParser {
 public:
  PolynomialParser(std::string_view text, std::shared_ptr<const VarList> vars)
      : text_(text), vars_(std::move(vars)) {}

  Polynomial parse() {
    Polynomial p = expression();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial one() const { return Polynomial(vars_, {{Monomial(vars_->size()), Rational(1)}}); }

  Polynomial expression() {
    skip_space();
    bool negate = false;
    if (accept('-')) {
      negate = true;
    } else {
      accept('+');
    }
    Polynomial acc = term();
    if (negate) acc = -acc;
    while (true) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  Polynomial term() {
    Polynomial acc = factor();
    while (accept('*')) acc *= factor();
    skip_space();
    if (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (std::isalnum(static_cast<unsigned char>(c)) || c == '(' || c == '_')
        fail("implicit multiplication is not allowed");
    }
    return acc;
  }

  Polynomial factor() {
    Polynomial base = primary();
    while (accept('^')) {
      skip_space();
      const std::size_t start = pos_;
      const std::string digits = read_digits();
      if (digits.empty()) fail("expected an unsigned exponent");
      unsigned long e = 0;
      for (char c : digits) {
        e = e * 10 + static_cast<unsigned long>(c - '0');
        if (e > std::numeric_limits<std::uint16_t>::max()) throw ParseError("exponent too large", start);
      }
      base = base.pow(static_cast<unsigned>(e));
    }
    return base;
  }

  Polynomial primary() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial inner = expression();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return rational();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return variable();
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string read_digits() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  Polynomial rational() {
    const std::size_t start = pos_;
    std::string literal = read_digits();
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == '/') {
      ++pos_;
      skip_space();
      const std::string den = read_digits();
      if (den.empty()) throw ParseError("malformed rational literal", start);
      literal += "/" + den;
    }
    Rational value;
    try {
      value = parse_rational(literal);
    } catch (const InputError& e) {
      throw ParseError(e.what(), start);
    }
    return one() * value;
  }

  Polynomial variable() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    const std::string_view name = text_.substr(start, pos_ - start);
    for (std::size_t i = 0; i < vars_->size(); ++i) {
      if ((*vars_)[i] == name) {
        Monomial m(vars_->size());
        m[i] = 1;
        return Polynomial(vars_, {{m, Rational(1)}});
      }
    }
    throw ParseError("unknown variable '" + std::string(name) + "'", start);
  }

  std::string_view text_;
  std::shared_ptr<const VarList> vars_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const std::shared_ptr<const VarList>& vars) {
  return PolynomialParser(text, vars).parse();
}

Polynomial parse_polynomial(std::string_view text, const VarList& vars) {
  return parse_polynomial(text, make_vars(vars));
}

}  // namespace orbires
