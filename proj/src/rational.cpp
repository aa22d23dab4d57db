#include "orbires/rational.hpp"

#include <cctype>

#include "orbires/errors.hpp"

namespace orbires {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den))
    throw InputError("malformed rational literal '" + std::string(text) + "'");
  Integer d(std::string(den), 10);
  if (d == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
  Rational q(Integer(std::string(num), 10), d);
  q.canonicalize();
  return negative ? Rational(-q) : q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

bool exact_root(const Rational& q, unsigned k, Rational& root) {
  if (k == 0) return false;
  if (q < 0 && k % 2 == 0) return false;
  const bool negative = q < 0;
  Integer num = abs(q.get_num());
  Integer den = q.get_den();
  Integer rn, rd;
  if (!mpz_root(rn.get_mpz_t(), num.get_mpz_t(), k)) return false;
  if (!mpz_root(rd.get_mpz_t(), den.get_mpz_t(), k)) return false;
  root = Rational(negative ? Integer(-rn) : rn, rd);
  root.canonicalize();
  return true;
}

Rational pow(const Rational& base, unsigned exponent) {
  Rational result;
  mpz_pow_ui(result.get_num_mpz_t(), base.get_num_mpz_t(), exponent);
  mpz_pow_ui(result.get_den_mpz_t(), base.get_den_mpz_t(), exponent);
  return result;
}

}  // namespace orbires
