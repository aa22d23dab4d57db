#include "orbires/chern.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "orbires/errors.hpp"

namespace orbires {

namespace {

std::shared_ptr<const VarList> chern_vars(std::size_t n) {
  VarList v;
  for (std::size_t i = 1; i <= n; ++i) v.push_back("C" + std::to_string(i));
  return make_vars(std::move(v));
}

std::int64_t max_pair(std::span<const std::int64_t> w) {
  std::int64_t best = 0;
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j) best = std::max(best, w[i] + w[j]);
  return best;
}

Integer product(std::span<const std::int64_t> w) {
  Integer p = 1;
  for (auto x : w) p *= static_cast<long>(x);
  return p;
}

void check_weights(std::span<const std::int64_t> w) {
  if (w.size() < 2) throw InputError("need at least two weights");
  for (auto x : w)
    if (x <= 0) throw InputError("weights must be positive");
}

}  // namespace

InvariantPolynomial::InvariantPolynomial(std::size_t n, std::map<Exponents, Rational> terms) : n_(n) {
  if (n == 0) throw InputError("invariant polynomial needs n >= 1");
  for (auto& [nu, c] : terms) {
    if (c == 0) continue;
    if (nu.size() != n) throw InputError("exponent vector length differs from n");
    std::size_t deg = 0;
    for (std::size_t i = 0; i < n; ++i) deg += (i + 1) * nu[i];
    if (deg != n)
      throw InputError("invariant polynomial term has weighted degree " + std::to_string(deg) + ", expected " +
                       std::to_string(n));
    terms_.emplace(nu, c);
  }
  if (terms_.empty()) throw InputError("invariant polynomial is zero");
}

InvariantPolynomial InvariantPolynomial::parse(std::string_view text, std::size_t n) {
  const Polynomial p = parse_polynomial(text, chern_vars(n));
  std::map<Exponents, Rational> terms;
  for (const auto& [m, c] : p.terms()) terms.emplace(m.exponents(), c);
  return InvariantPolynomial(n, std::move(terms));
}

InvariantPolynomial InvariantPolynomial::top_chern(std::size_t n) {
  Exponents nu(n, 0);
  nu.at(n - 1) = 1;
  return InvariantPolynomial(n, {{nu, Rational(1)}});
}

InvariantPolynomial InvariantPolynomial::baum_bott() { return InvariantPolynomial(2, {{{2, 0}, Rational(1)}}); }

Rational InvariantPolynomial::evaluate(std::span<const Rational> c) const {
  if (c.size() != n_) throw InputError("invariant polynomial expects " + std::to_string(n_) + " values");
  Rational total = 0;
  for (const auto& [nu, coef] : terms_) {
    Rational t = coef;
    for (std::size_t i = 0; i < n_; ++i) t *= pow(c[i], nu[i]);
    total += t;
  }
  return total;
}

Polynomial InvariantPolynomial::evaluate(std::span<const Polynomial> c) const {
  if (c.size() != n_) throw InputError("invariant polynomial expects " + std::to_string(n_) + " polynomials");
  Polynomial total(c.front().shared_vars(), {});
  for (const auto& [nu, coef] : terms_) {
    Polynomial t = Polynomial::constant(c.front().vars(), coef).rebase(c.front().shared_vars());
    for (std::size_t i = 0; i < n_; ++i)
      if (nu[i] > 0) t *= c[i].pow(nu[i]);
    total += t;
  }
  return total;
}

std::string InvariantPolynomial::to_string() const {
  Polynomial p(chern_vars(n_), {});
  for (const auto& [nu, c] : terms_) p.add_term(Monomial(nu), c);
  return p.to_string();
}

Integer elementary_symmetric(std::span<const std::int64_t> w, std::size_t j) {
  if (j > w.size()) throw InputError("elementary symmetric index out of range");
  // e[k] after processing a prefix of w.
  std::vector<Integer> e(j + 1, 0);
  e[0] = 1;
  for (auto x : w)
    for (std::size_t k = j; k >= 1; --k) e[k] += e[k - 1] * static_cast<long>(x);
  return e[j];
}

std::vector<Rational> chern_gammas(std::span<const std::int64_t> w, std::int64_t d) {
  check_weights(w);
  const std::size_t n = w.size() - 1;
  std::vector<Rational> gamma(n);
  const Rational dm1(static_cast<long>(d - 1));
  for (std::size_t j = 1; j <= n; ++j) {
    Rational g = 0;
    for (std::size_t i = 0; i <= j; ++i) g += Rational(elementary_symmetric(w, i)) * pow(dm1, static_cast<unsigned>(j - i));
    gamma[j - 1] = g;
  }
  return gamma;
}

Rational chern_number(const InvariantPolynomial& p, std::span<const std::int64_t> w, std::int64_t d) {
  check_weights(w);
  if (p.dimension() != w.size() - 1)
    throw InputError("invariant polynomial has n = " + std::to_string(p.dimension()) + " but the space has n = " +
                     std::to_string(w.size() - 1));
  const auto gamma = chern_gammas(w, d);
  Rational r = p.evaluate(gamma) / Rational(product(w));
  r.canonicalize();
  return r;
}

Rational index_sum_rhs(std::span<const std::int64_t> w, std::int64_t d) {
  check_weights(w);
  const std::size_t n = w.size() - 1;
  Rational s = 0;
  for (std::size_t j = 0; j <= n; ++j)
    s += Rational(elementary_symmetric(w, j)) * pow(Rational(static_cast<long>(d - 1)), static_cast<unsigned>(n - j));
  Rational r = s / Rational(product(w));
  r.canonicalize();
  return r;
}

Rational bb_sum_rhs(std::span<const std::int64_t> w, std::int64_t d) {
  check_weights(w);
  if (w.size() != 3) throw InputError("Baum-Bott sum is defined for weighted planes (n = 2)");
  const std::int64_t s = d + w[0] + w[1] + w[2] - 1;
  Rational r = Rational(Integer(static_cast<long>(s)) * static_cast<long>(s)) / Rational(product(w));
  r.canonicalize();
  return r;
}

RadialDegrees radial_degrees(std::span<const std::int64_t> w) {
  check_weights(w);
  if (w.size() != 3) throw InputError("radial degrees are defined for weighted planes (n = 2)");
  const Integer c1 = elementary_symmetric(w, 1), c2 = elementary_symmetric(w, 2);
  RadialDegrees out;
  out.discriminant = c1 * c1 - 3 * c2;
  if (out.discriminant >= 0 && mpz_perfect_square_p(out.discriminant.get_mpz_t())) {
    Integer root;
    mpz_sqrt(root.get_mpz_t(), out.discriminant.get_mpz_t());
    Rational plus(Integer(3 - c1 + 2 * root), Integer(3));
    Rational minus(Integer(3 - c1 - 2 * root), Integer(3));
    plus.canonicalize();
    minus.canonicalize();
    out.plus = plus;
    out.minus = minus;
  }
  return out;
}

SingularityVerdict must_have_singularity(std::span<const std::int64_t> w, std::int64_t d) {
  check_weights(w);
  const std::size_t n = w.size() - 1;
  SingularityVerdict v;
  v.sections_exist = d > 1 - max_pair(w);
  v.by_degree = d >= 1 || (n == 2 && d >= 0);
  if (d != 1) {
    const Integer cn = elementary_symmetric(w, n);
    v.by_divisibility = !mpz_divisible_p(cn.get_mpz_t(), Integer(static_cast<long>(d - 1)).get_mpz_t());
  }
  std::vector<std::string> reasons;
  if (v.by_degree) reasons.push_back(n == 2 && d < 1 ? "n = 2 and d >= 0" : "d >= 1");
  if (v.by_divisibility) reasons.push_back("d - 1 does not divide C_n(w)");
  if (reasons.empty()) {
    v.reason = "inconclusive";
  } else {
    v.reason = reasons[0];
    for (std::size_t i = 1; i < reasons.size(); ++i) v.reason += "; " + reasons[i];
  }
  return v;
}

bool vertex_singularity_forced(std::int64_t k, std::int64_t d) {
  if (k <= 1) throw InputError("vertex criterion needs k > 1");
  return (d * d) % k != 0;
}

ClaimVerdict vertex_exclusive_check(std::span<const std::int64_t> w, std::int64_t d, VertexClaim claim) {
  check_weights(w);
  if (w.size() != 3) throw InputError("vertex claims are defined for weighted planes (n = 2)");
  // A nondegenerate zero at e_i contributes 1/w_i to the index sum.
  Rational claimed = 0;
  if (claim == VertexClaim::kAllThreeVertices) {
    for (auto x : w) claimed += Rational(1, static_cast<unsigned long>(x));
  } else {
    claimed = Rational(1, static_cast<unsigned long>(w[2]));
  }
  claimed.canonicalize();
  const Rational expected = index_sum_rhs(w, d);
  ClaimVerdict v;
  if (claimed != expected) {
    v.inconsistent = true;
    v.reason = "claimed index sum " + to_string(claimed) + " differs from " + to_string(expected);
  } else if (d <= 1 - max_pair(w)) {
    v.inconsistent = true;
    v.reason = "degree " + std::to_string(d) + " violates d > 1 - max(w_i + w_j)";
  } else {
    v.reason = "consistent with the index sum";
  }
  return v;
}

}  // namespace orbires
