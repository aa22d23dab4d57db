#include "doctest.h"
#include "orbires/errors.hpp"
#include "orbires/groebner.hpp"
#include "orbires/poly_matrix.hpp"
#include "orbires/quotient_algebra.hpp"
#include "test_support.hpp"

using namespace orbires;
using namespace orbires::test;

TEST_CASE("reduced groebner bases") {
  auto v = vars({"z1", "z2"});
  auto g = groebner_basis(Ideal(Ps({"z1^2", "z2^2"}, v), v));
  CHECK(g.elements().size() == 2);
  CHECK(g.is_zero_dimensional());

  auto h = groebner_basis(Ideal(Ps({"z2 - z1^2", "z1*z2"}, v), v));
  CHECK(h.contains(P("z1^3", v)));
  // grevlex makes z1^2 the leading term of z2 - z1^2
  CHECK(h == groebner_basis(Ideal(Ps({"z1^2 - z2", "z1*z2", "z2^2"}, v), v)));
  CHECK(h.elements().size() == 3);

  auto v1 = vars({"z1"});
  auto u = groebner_basis(Ideal(Ps({"z1", "z1+1"}, v1), v1));
  CHECK(u.is_unit());
}

TEST_CASE("groebner basis is independent of generator order and scaling") {
  auto v = vars({"x", "y", "z"});
  auto a = groebner_basis(Ideal(Ps({"x^2 + y*z - 2", "y^2 - x*z", "x*y*z - 1"}, v), v));
  auto b = groebner_basis(Ideal(Ps({"3*x*y*z - 3", "x^2 + y*z - 2", "-y^2 + x*z"}, v), v));
  CHECK(a == b);
  for (const auto& e : a.elements()) CHECK(e.leading_coefficient() == 1);
}

TEST_CASE("intersection and quotients") {
  auto v = vars({"x", "y"});
  Ideal i(Ps({"x"}, v), v), j(Ps({"y"}, v), v);
  auto ij = intersect(i, j);
  CHECK(ij.elements().size() == 1);
  CHECK(ij.elements()[0] == P("x*y", v));

  Ideal k(Ps({"x^2*y", "y^3"}, v), v);
  auto q = ideal_quotient(k, P("y", v));
  CHECK(q == groebner_basis(Ideal(Ps({"x^2", "y^2"}, v), v)));

  Ideal m(Ps({"x", "y"}, v), v);
  Ideal two_points(Ps({"x*(x-1)", "y"}, v), v);
  auto sat = saturate(two_points, m);
  CHECK(sat == groebner_basis(Ideal(Ps({"x-1", "y"}, v), v)));

  CHECK(divide_exact(P("x^2-y^2", v), P("x+y", v)) == P("x-y", v));
  CHECK_THROWS_AS(divide_exact(P("x^2+1", v), P("x+y", v)), ComputationError);
}

TEST_CASE("quotient algebra of monomial systems") {
  auto v = vars({"z1", "z2"});
  auto a = QuotientAlgebra::build(Ideal(Ps({"z1^2", "z2^2"}, v), v));
  REQUIRE(a.dimension() == 4);
  CHECK(a.standard_monomials()[0].is_one());
  CHECK(a.residue(P("z1*z2", v)) == 1);
  CHECK(a.residue(P("1", v)) == 0);
  CHECK(a.residue(P("z1", v)) == 0);
  CHECK(a.residue(P("z2", v)) == 0);
  CHECK(a.residue(P("4*z1*z2", v)) == 4);

  auto b = QuotientAlgebra::build(Ideal(Ps({"z1", "z2"}, v), v));
  CHECK(b.dimension() == 1);
  CHECK(b.residue(P("1", v)) == 1);

  auto c = QuotientAlgebra::build(Ideal(Ps({"z1^2", "z2^3"}, v), v));
  CHECK(c.residue(P("z1*z2^2", v)) == 1);
  CHECK(c.residue(P("z1*z2", v)) == 0);
}

TEST_CASE("bezoutian of a square monomial system") {
  auto v = vars({"z1", "z2"});
  auto f = Ps({"z1^2", "z2^2"}, v);
  auto w = vars({"z1", "z2", "z1'", "z2'"});
  auto plain = vars({"a", "b", "c", "d"});
  CHECK(bezoutian_determinant(f) == Polynomial(w, P("(a+c)*(b+d)", plain).terms()));
}

TEST_CASE("zero-dimensionality and unit ideals are rejected") {
  auto v = vars({"z1", "z2"});
  CHECK_THROWS_AS(QuotientAlgebra::build(Ideal(Ps({"z1*z2", "z1^2"}, v), v)), ComputationError);
  CHECK_THROWS_AS(QuotientAlgebra::build(Ideal(Ps({"z1", "z1+1"}, v), v)), ComputationError);
  CHECK_THROWS_AS(QuotientAlgebra::build(Ideal(Ps({"z1"}, v), v)), InputError);
}

namespace {

// Sum of h/det J over a list of simple zeros.
Rational simple_zero_sum(const std::vector<Polynomial>& f, const Polynomial& h,
                         const std::vector<std::vector<Rational>>& zeros) {
  Polynomial det = determinant(jacobian_matrix(f, f.front().vars()));
  Rational total = 0;
  for (const auto& z : zeros) total += h.evaluate(z) / det.evaluate(z);
  return total;
}

}  // namespace

TEST_CASE("global residue equals the sum over simple rational zeros") {
  auto v = vars({"z1", "z2"});
  auto f = Ps({"z1^2 - 1", "z2^2 - 3*z2 + 2 + z1 - 1"}, v);
  // zeros: z1 = 1 -> z2 in {1, 2}; z1 = -1 -> z2^2 - 3 z2 = 0 -> z2 in {0, 3}
  std::vector<std::vector<Rational>> zeros{{1, 1}, {1, 2}, {-1, 0}, {-1, 3}};
  for (const auto& z : zeros)
    for (const auto& g : f) CHECK(g.evaluate(z) == 0);
  auto a = QuotientAlgebra::build(Ideal(f, v));
  CHECK(a.dimension() == 4);
  for (const char* h : {"1", "z1", "z2", "z1*z2", "z2^3 + 7*z1", "5*z1^3*z2^2 - z2"}) {
    Polynomial hp = P(h, v);
    CHECK(a.residue(hp) == simple_zero_sum(f, hp, zeros));
  }
}

TEST_CASE("three-variable residue against simple zeros") {
  auto v = vars({"x", "y", "z"});
  auto f = Ps({"x^2 - x", "y^2 - 4", "z - x*y - 1"}, v);
  std::vector<std::vector<Rational>> zeros{{0, 2, 1}, {0, -2, 1}, {1, 2, 3}, {1, -2, -1}};
  auto a = QuotientAlgebra::build(Ideal(f, v));
  CHECK(a.dimension() == 4);
  for (const char* h : {"1", "x*y*z", "z^2 + y", "x^3*z"}) {
    Polynomial hp = P(h, v);
    CHECK(a.residue(hp) == simple_zero_sum(f, hp, zeros));
  }
}

TEST_CASE("residue algebra invariants on a degenerate system") {
  auto v = vars({"z1", "z2"});
  auto f = Ps({"z1^2 - z2", "z2^2"}, v);
  auto a = QuotientAlgebra::build(Ideal(f, v));
  CHECK(a.dimension() == 4);
  Polynomial det = determinant(jacobian_matrix(f, *v));
  CHECK(a.residue(det) == 4);
  CHECK(a.gram_matrix().rank() == a.dimension());
  // lambda vanishes on the ideal
  CHECK(a.residue(f[0] * P("z1 + 3", v)) == 0);
  CHECK(a.residue(f[1] * P("z2^2 - z1", v)) == 0);
}

TEST_CASE("serial and parallel multiplication kernels agree") {
  auto v = vars({"x", "y", "z"});
  Ideal i(Ps({"x^3 - y*z", "y^2 - x + z", "z^3 - x*y - 1"}, v), v);
  auto gb = groebner_basis(i);
  auto basis = standard_monomials(gb);
  CHECK(multiplication_matrices(gb, basis, Exec::kSerial) == multiplication_matrices(gb, basis, Exec::kParallel));
  auto a = QuotientAlgebra::build(i, Exec::kSerial), b = QuotientAlgebra::build(i, Exec::kParallel);
  CHECK(a.residue_values() == b.residue_values());
}
