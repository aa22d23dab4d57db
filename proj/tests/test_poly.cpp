#include <random>

#include "doctest.h"
#include "orbires/errors.hpp"
#include "orbires/linalg.hpp"
#include "orbires/poly_matrix.hpp"
#include "test_support.hpp"

using namespace orbires;
using namespace orbires::test;

namespace {

Polynomial random_poly(std::mt19937_64& rng, const std::shared_ptr<const VarList>& v, int terms, unsigned maxdeg) {
  std::uniform_int_distribution<int> coef(-9, 9), den(1, 5);
  std::uniform_int_distribution<unsigned> ex(0, maxdeg);
  Polynomial p(v, {});
  for (int t = 0; t < terms; ++t) {
    Monomial m(v->size());
    for (std::size_t k = 0; k < v->size(); ++k) m[k] = ex(rng);
    p.add_term(m, ratio(coef(rng), den(rng)));
  }
  return p;
}

}  // namespace

TEST_CASE("parse reads the grammar and merges exact coefficients") {
  auto v = vars({"z0", "z1", "z2"});
  Polynomial p = P("z0^2*z2 - 3*z1", v);
  CHECK(p.size() == 2);
  CHECK(p.coefficient(Monomial{2, 0, 1}) == 1);
  CHECK(p.coefficient(Monomial{0, 1, 0}) == -3);
  CHECK(P("0", v).is_zero());
  CHECK(P("1/2*z0 + 1/2*z0", v) == P("z0", v));
  CHECK(P("(z0+z1)^3", v) == P("z0^3 + 3*z0^2*z1 + 3*z0*z1^2 + z1^3", v));
}

TEST_CASE("parse errors carry positions") {
  auto v = vars({"z0", "z1"});
  CHECK_THROWS_AS(P("z0 z1", v), ParseError);
  CHECK_THROWS_AS(P("z0 + q7", v), ParseError);
  CHECK_THROWS_AS(P("1/0", v), InputError);
  CHECK_THROWS_AS(P("(z0", v), ParseError);
  CHECK_THROWS_AS(P("z0^", v), ParseError);
}

TEST_CASE("ring operations") {
  auto v = vars({"z0", "z1"});
  CHECK(P("z0+z1", v) * P("z0-z1", v) == P("z0^2-z1^2", v));
  CHECK(P("z0+z1", v) + Polynomial(v, {}) == P("z0+z1", v));
  CHECK(P("z0+z1", v).pow(3) == P("z0^3+3*z0^2*z1+3*z0*z1^2+z1^3", v));
  auto w = vars({"z0", "z2"});
  CHECK_THROWS(P("z0", v) + P("z0", w));
}

TEST_CASE("differentiate and evaluate") {
  auto v = vars({"z0", "z1", "z2"});
  CHECK(P("z0^2*z1", v).differentiate("z0") == P("2*z0*z1", v));
  CHECK(P("7", v).differentiate("z0").is_zero());
  CHECK(P("z0^3+z1^3-(z0+z1)*z2", v).differentiate("z2") == P("-z0-z1", v));
  CHECK_THROWS_AS(P("z0", v).differentiate("z9"), InputError);
  auto v2 = vars({"z0", "z1"});
  std::vector<Rational> pt{2, 3};
  CHECK(P("z0^2+z1", v2).evaluate(pt) == 7);
  std::vector<Rational> origin{0, 0, 0}, e2{0, 0, 1};
  CHECK(P("z0*z1 + 5/3", v).evaluate(origin) == ratio(5, 3));
  CHECK(P("z0^3+z1^3-(z0+z1)*z2", v).evaluate(e2) == 0);
  CHECK_THROWS(P("z0", v).evaluate(pt));
}

TEST_CASE("quasi degree") {
  auto v = vars({"z0", "z1", "z2"});
  std::vector<std::int64_t> w{1, 1, 2};
  CHECK(quasi_degree(P("z0^2*z2", v), w) == QuasiDegree::of(4));
  CHECK(quasi_degree(P("z0^2+z2", v), w) == QuasiDegree::of(2));
  CHECK(!quasi_degree(P("z0^2+z1", v), w).exists());
  CHECK(quasi_degree(P("0", v), w).is_any());
}

TEST_CASE("jacobian and characteristic coefficients") {
  auto v = vars({"z1", "z2"});
  auto f = Ps({"z1^2", "z2^2"}, v);
  PolyMatrix j = jacobian_matrix(f, *v);
  CHECK(j(0, 0) == P("2*z1", v));
  CHECK(j(0, 1).is_zero());
  auto c = char_coeffs(j);
  CHECK(c[0] == P("2*z1+2*z2", v));
  CHECK(c[1] == P("4*z1*z2", v));
  CHECK(determinant(j) == c[1]);

  auto swap = jacobian_matrix(Ps({"z2", "z1"}, v), *v);
  CHECK(swap(0, 1) == P("1", v));
  CHECK(swap(1, 0) == P("1", v));
  CHECK(char_coeffs(swap)[1] == P("-1", v));

  auto v3 = vars({"a", "b", "c"});
  auto id = jacobian_matrix(Ps({"a", "b", "c"}, v3), *v3);
  auto ci = char_coeffs(id);
  CHECK(ci[0] == P("3", v3));
  CHECK(ci[1] == P("3", v3));
  CHECK(ci[2] == P("1", v3));
}

TEST_CASE("char coeffs are similarity invariant") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> d(-4, 4);
  auto v = vars({"x"});
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 3;
    RationalMatrix m(n, n), s(n, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) {
        m(r, c) = d(rng);
        s(r, c) = d(rng);
      }
    auto sinv = s.inverse();
    if (!sinv) continue;
    RationalMatrix conj = s * m * *sinv;
    PolyMatrix pm(n, n, v), pc(n, n, v);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) {
        pm.set(r, c, Polynomial::constant(*v, m(r, c)).rebase(v));
        pc.set(r, c, Polynomial::constant(*v, conj(r, c)).rebase(v));
      }
    auto a = char_coeffs(pm), b = char_coeffs(pc);
    for (std::size_t i = 0; i < n; ++i) CHECK(a[i] == b[i]);
  }
}

TEST_CASE("product, Leibniz and degree properties on random polynomials") {
  std::mt19937_64 rng(11);
  auto v = vars({"z0", "z1", "z2"});
  std::uniform_int_distribution<int> pt(-5, 5);
  std::vector<std::int64_t> w{1, 2, 3};
  for (int trial = 0; trial < 50; ++trial) {
    Polynomial p = random_poly(rng, v, 4, 3), q = random_poly(rng, v, 4, 3);
    std::vector<Rational> x{ratio(pt(rng), 2), Rational(pt(rng)), ratio(pt(rng), 3)};
    CHECK((p * q).evaluate(x) == p.evaluate(x) * q.evaluate(x));
    for (std::size_t k = 0; k < 3; ++k)
      CHECK((p * q).differentiate(k) == p.differentiate(k) * q + p * q.differentiate(k));
    Polynomial hp = Polynomial::term(*v, Monomial{1, 1, 0}, 2) + Polynomial::term(*v, Monomial{0, 0, 1}, -1);
    Polynomial hq = Polynomial::term(*v, Monomial{trial % 3u, 0, 1}, 5);
    auto dp = quasi_degree(hp, w), dq = quasi_degree(hq, w);
    REQUIRE(dp.is_uniform());
    CHECK(quasi_degree(hp * hq, w) == QuasiDegree::of(dp.value() + dq.value()));
  }
}

TEST_CASE("render then parse is the identity on 1000 random polynomials") {
  std::mt19937_64 rng(2024);
  auto v = vars({"z0", "z1", "z2"});
  for (int trial = 0; trial < 1000; ++trial) {
    Polynomial p = random_poly(rng, v, 1 + trial % 6, 4);
    CHECK(parse_polynomial(p.to_string(), v) == p);
  }
}
