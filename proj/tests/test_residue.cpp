#include "doctest.h"
#include "orbires/errors.hpp"
#include "orbires/poly_matrix.hpp"
#include "orbires/residue.hpp"
#include "test_support.hpp"

using namespace orbires;
using namespace orbires::test;

namespace {

using Point = std::vector<Rational>;

OrbifoldField field(const WeightedSpace& s, std::initializer_list<const char*> comps) {
  return OrbifoldField::make(Ps(comps, s.ambient_vars()), s);
}

Rational residue_at(std::initializer_list<const char*> sys, const char* h, Point p,
                    std::initializer_list<const char*> names = {"z1", "z2"}) {
  auto v = vars(names);
  auto f = Ps(sys, v);
  return local_residue(f, P(h, v), p).value;
}

}  // namespace

TEST_CASE("local idempotents") {
  auto v1 = vars({"z"});
  auto a = QuotientAlgebra::build(Ideal(Ps({"z*(z-1)"}, v1), v1));
  CHECK(a.to_polynomial(local_idempotent(a, Point{0})) == P("1 - z", v1));
  CHECK(a.to_polynomial(local_idempotent(a, Point{1})) == P("z", v1));

  auto v = vars({"z1", "z2"});
  auto single = QuotientAlgebra::build(Ideal(Ps({"z1^2", "z2^2"}, v), v));
  CHECK(local_idempotent(single, Point{0, 0}) == single.one());

  auto two = QuotientAlgebra::build(Ideal(Ps({"z1^2 - z1", "z2"}, v), v));
  CHECK(two.to_polynomial(local_idempotent(two, Point{0, 0})) == P("1 - z1", v));

  CHECK_THROWS_AS(local_idempotent(two, Point{2, 0}), NotAZeroError);
}

TEST_CASE("local residues") {
  CHECK(residue_at({"z1", "z2"}, "1", {0, 0}) == 1);
  CHECK(residue_at({"z1^2", "z2^3"}, "z1*z2^2", {0, 0}) == 1);
  CHECK(residue_at({"z1^2", "z2^2"}, "4*z1*z2", {0, 0}) == 4);

  auto v = vars({"z1", "z2"});
  auto f = Ps({"z1^2", "z2^2"}, v);
  auto r = local_residue(f, P("4*z1*z2", v), Point{0, 0});
  CHECK(r.method == ResidueMethod::kGroebner);
  CHECK(r.multiplicity == 4);
  auto simple = local_residue(Ps({"z1", "z2"}, v), P("1", v), Point{0, 0});
  CHECK(simple.method == ResidueMethod::kFastPath);

  CHECK_THROWS_AS(local_residue(f, P("1", v), Point{1, 0}), NotAZeroError);
  CHECK_THROWS_AS(local_residue(Ps({"z1*z2", "z1^2"}, v), P("1", v), Point{0, 0}), ComputationError);
}

TEST_CASE("degenerate residues match the perturbation oracle") {
  // frozen outputs of tests/oracles/orbifold_oracle.py
  CHECK(residue_at({"z1^2 - z2", "z2^2"}, "1", {0, 0}) == 0);
  CHECK(residue_at({"z1^2 - z2", "z2^2"}, "z1", {0, 0}) == 0);
  CHECK(residue_at({"z1^2 - z2", "z2^2"}, "z2", {0, 0}) == 0);
  CHECK(residue_at({"z1^2 - z2", "z2^2"}, "z1*z2", {0, 0}) == 1);
  CHECK(residue_at({"z1^2 - z2", "z2^2"}, "z1^3", {0, 0}) == 1);
  CHECK(residue_at({"z1^2 - z2", "z2^2"}, "z1^2*z2 + 7*z2", {0, 0}) == 0);
  CHECK(residue_at({"z1^2", "z2^3"}, "2*z1*3*z2^2", {0, 0}) == 6);

  // mu = 5 zero at (1, 0) alongside other zeros (0, +-1) elsewhere
  std::initializer_list<const char*> sys{"(z1 - 1)^3 + z2^2", "z2*(z1 - 1) + z2^3"};
  CHECK(residue_at(sys, "1", {1, 0}) == 0);
  CHECK(residue_at(sys, "z1*z2", {1, 0}) == 0);
  CHECK(residue_at(sys, "z2^2", {1, 0}) == -1);
  CHECK(residue_at(sys, "(z1 - 1)^2", {1, 0}) == 0);
  auto v = vars({"z1", "z2"});
  CHECK(multiplicity(Ps(sys, v), Point{1, 0}) == 5);
}

TEST_CASE("multiplicities") {
  auto v = vars({"z1", "z2"});
  CHECK(multiplicity(Ps({"z1", "z2"}, v), Point{0, 0}) == 1);
  CHECK(multiplicity(Ps({"z1^2", "z2^2"}, v), Point{0, 0}) == 4);
  CHECK(multiplicity(Ps({"z1^2 - z2", "z2^2"}, v), Point{0, 0}) == 4);
}

namespace {

struct MixedSystem {
  std::shared_ptr<const VarList> v = vars({"z1", "z2"});
  std::vector<Polynomial> f = Ps({"z1^2*(z1 - 1)", "z2^2 - z1*z2"}, v);
  std::vector<Point> zeros{{0, 0}, {1, 0}, {1, 1}};
  std::vector<std::int64_t> mult{4, 1, 1};
};

}  // namespace

TEST_CASE("idempotent partition, orthogonality and multiplicity identity") {
  MixedSystem m;
  auto a = QuotientAlgebra::build(Ideal(m.f, m.v));
  REQUIRE(a.dimension() == 6);
  const Polynomial det = determinant(jacobian_matrix(m.f, *m.v));
  RationalVector sum(a.dimension());
  std::vector<RationalVector> es;
  for (std::size_t k = 0; k < m.zeros.size(); ++k) {
    auto e = local_idempotent(a, m.zeros[k]);
    CHECK(e == local_idempotent_spectral(a, m.zeros[k]));
    CHECK(a.multiply(e, e) == e);
    CHECK(a.residue(a.multiply(a.coordinates(det), e)) == m.mult[k]);
    CHECK(a.multiplication_by(e).rank() == static_cast<std::size_t>(m.mult[k]));
    for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += e[i];
    es.push_back(e);
  }
  CHECK(sum == a.one());
  for (std::size_t i = 0; i < es.size(); ++i)
    for (std::size_t j = i + 1; j < es.size(); ++j) CHECK(is_zero(a.multiply(es[i], es[j])));
}

TEST_CASE("local residues sum to the global residue") {
  MixedSystem m;
  auto a = QuotientAlgebra::build(Ideal(m.f, m.v));
  for (const char* h : {"1", "z1", "z2^2 + 3*z1*z2", "z1^4 - z2", "7"}) {
    Polynomial hp = P(h, m.v);
    Rational local = 0;
    for (const auto& p : m.zeros) local += local_residue(m.f, hp, p).value;
    CHECK(local == a.residue(hp));
  }
}

TEST_CASE("local plus remainder equals the global residue when some zeros are irrational") {
  auto v = vars({"z1", "z2"});
  auto f = Ps({"(z1^2 - 2)*z1", "z2 - z1"}, v);  // zeros z1 in {0, +-sqrt 2}
  auto a = QuotientAlgebra::build(Ideal(f, v));
  auto e0 = local_idempotent(a, Point{0, 0});
  auto rest = a.one();
  for (std::size_t i = 0; i < rest.size(); ++i) rest[i] -= e0[i];
  for (const char* h : {"1", "z1^2", "z1*z2 + 5", "z2^3"}) {
    Polynomial hp = P(h, v);
    const auto hv = a.coordinates(hp);
    CHECK(a.residue(a.multiply(hv, e0)) + a.residue(a.multiply(hv, rest)) == a.residue(hp));
    CHECK(a.residue(a.multiply(hv, e0)) == local_residue(f, hp, Point{0, 0}).value);
  }
}

TEST_CASE("fast path agrees with the groebner path at simple zeros") {
  MixedSystem m;
  ResidueOptions slow;
  slow.force_groebner = true;
  for (const Point& p : {Point{1, 0}, Point{1, 1}}) {
    for (const char* h : {"1", "z1*z2", "z2^3 - 2"}) {
      auto fast = local_residue(m.f, P(h, m.v), p);
      auto grob = local_residue(m.f, P(h, m.v), p, slow);
      CHECK(fast.method == ResidueMethod::kFastPath);
      CHECK(grob.method == ResidueMethod::kGroebner);
      CHECK(fast.value == grob.value);
      CHECK(grob.multiplicity == 1);
    }
  }
}

TEST_CASE("numerator reduction order is immaterial") {
  MixedSystem m;
  auto a = QuotientAlgebra::build(Ideal(m.f, m.v));
  Polynomial h = P("z1^5*z2 + 3*z2^4 - z1", m.v);
  Polynomial reduced = a.groebner().reduce(h);
  CHECK(local_residue(m.f, h, Point{0, 0}).value == local_residue(m.f, reduced, Point{0, 0}).value);
}

TEST_CASE("orbifold indices at vertices") {
  auto s = WeightedSpace::make({1, 1, 2});
  auto diag = field(s, {"2*z0", "3*z1", "5*z2"});
  auto r = orbifold_index(diag, Point{0, 0, 1}, InvariantPolynomial::top_chern(2));
  CHECK(r.value == ratio(1, 2));
  CHECK(r.group_order == 2);
  CHECK(r.chart == 2);
  CHECK(r.method == ResidueMethod::kFastPath);

  auto radial = field(s, {"z0*z2 + z1^3", "z1*z2 + z0^3", "0"});
  CHECK(orbifold_index(radial, Point{0, 0, 1}, InvariantPolynomial::top_chern(2)).value == ratio(1, 2));
  CHECK(orbifold_index(radial, Point{0, 0, 1}, InvariantPolynomial::baum_bott()).value == 2);

  auto s123 = WeightedSpace::make({1, 2, 3});
  auto d123 = field(s123, {"z0", "3*z1", "7*z2"});
  CHECK(orbifold_index(d123, Point{1, 0, 0}, InvariantPolynomial::top_chern(2)).value == 1);
  CHECK(orbifold_index(d123, Point{0, 1, 0}, InvariantPolynomial::top_chern(2)).value == ratio(1, 2));
  CHECK(orbifold_index(d123, Point{0, 0, 1}, InvariantPolynomial::top_chern(2)).value == ratio(1, 3));
  // oracle values for Baum-Bott at the vertices of this field
  CHECK(orbifold_index(d123, Point{0, 1, 0}, InvariantPolynomial::baum_bott()).value == ratio(-8, 5));
  CHECK(orbifold_index(d123, Point{0, 0, 1}, InvariantPolynomial::baum_bott()).value == ratio(27, 20));
}

TEST_CASE("degenerate orbifold index matches the oracle") {
  auto s = WeightedSpace::make({1, 1, 2});
  auto general = field(s, {"z1^2", "z0^2", "z0*z2"});
  auto ph = orbifold_index(general, Point{0, 0, 1}, InvariantPolynomial::top_chern(2));
  CHECK(ph.value == 2);
  CHECK(ph.multiplicity == 4);
  CHECK(ph.method == ResidueMethod::kGroebner);
  CHECK(orbifold_index(general, Point{0, 0, 1}, InvariantPolynomial::baum_bott()).value == ratio(-9, 14));
  CHECK(orbifold_index(general, Point{0, 0, 1}, InvariantPolynomial::parse("1/3*C1^2 + 2/3*C2", 2)).value ==
        ratio(47, 42));

  auto rational = field(s, {"z0*(z0 + 2*z1)", "z1*(3*z0 - z1)", "z2*(z0 + 5*z1)"});
  CHECK(orbifold_index(rational, Point{0, 0, 1}, InvariantPolynomial::baum_bott()).value == ratio(1, 14));
  CHECK(orbifold_index(rational, Point{0, 1, 0}, InvariantPolynomial::baum_bott()).value == ratio(100, 21));
}

TEST_CASE("nondegenerate zeros on P2 have index one") {
  auto s = WeightedSpace::make({1, 1, 1});
  auto f = field(s, {"0", "z1*(z0 + 2*z1 - z2)", "z2*(3*z0 - z1 + 2*z2)"});
  const std::vector<Point> zeros{{3, -5, -7}, {2, -1, 0}, {2, 0, -3}, {1, 0, 0}, {0, 1, 0}, {0, 1, 1}, {0, 0, 1}};
  for (const auto& p : zeros) {
    auto r = orbifold_index(f, p, InvariantPolynomial::top_chern(2));
    CHECK(r.value == 1);
    CHECK(r.multiplicity == 1);
  }
}

TEST_CASE("points that are not zeros are reported") {
  auto s = WeightedSpace::make({1, 1, 2});
  auto z = s.ambient_vars();
  auto x = pencil_field(P("z0^3 + z1^3 - (z0 + z1)*z2", z), P("z0^2 + z1^2 + z2", z), s);
  try {
    orbifold_index(x, Point{0, 0, 1}, InvariantPolynomial::top_chern(2));
    FAIL("expected NotAZeroError");
  } catch (const NotAZeroError& e) {
    REQUIRE(e.values().size() == 2);
    CHECK(e.values()[0] == -1);
    CHECK(e.values()[1] != 0);
  }
}

TEST_CASE("cover points") {
  auto s = WeightedSpace::make({1, 1, 2});
  auto cp = cover_point(s, Point{0, 3, 9});
  CHECK(cp.chart == 1);
  CHECK(cp.coords == Point{0, 1});
  CHECK(!cp.is_vertex);
  CHECK(cover_point(s, Point{0, 0, 4}).is_vertex);
  CHECK_THROWS_AS(cover_point(s, Point{0, 0, 0}), InputError);
  CHECK_THROWS_AS(cover_point(s, Point{0, 0, 2}), InputError);
  CHECK_THROWS_AS(cover_point(s, Point{0, 0, -1}), InputError);
}

TEST_CASE("residues are equal along an orbit of the chart group") {
  // [1 : 0 : 1] on P(1,1,2) has preimages (1, 0) and (-1, 0) in chart 2
  auto s = WeightedSpace::make({1, 1, 2});
  auto g = field(s, {"2*z0", "5*z1", "3*z2 + z0^2"});
  auto lg = lift_to_chart(g, 2);
  auto num = invariant_numerator(lg.components, InvariantPolynomial::baum_bott());
  auto a = local_residue(lg.components, num, Point{1, 0});
  auto b = local_residue(lg.components, num, Point{-1, 0});
  CHECK(a.value == b.value);
  auto via_chart0 = orbifold_index(g, Point{1, 0, 1}, InvariantPolynomial::baum_bott());
  CHECK(via_chart0.chart == 0);
  CHECK(via_chart0.value == ratio(-4, 3));
  CHECK(a.value == via_chart0.value);
}

namespace {

struct TotalFixture {
  std::vector<std::int64_t> weights;
  std::vector<const char*> field;
  const char* c2;
  const char* c1sq;
  const char* mixed;
};

Rational q(const char* s) {
  Rational r(s);
  r.canonicalize();
  return r;
}

}  // namespace

TEST_CASE("global sums over all zeros match the oracle totals") {
  // frozen from tests/oracles/orbifold_oracle.py
  const std::vector<TotalFixture> fixtures{
      {{1, 1, 2}, {"z1^2", "z0^2", "z0*z2"}, "5", "25/2", "15/2"},
      {{1, 1, 2}, {"z0*(z0 + 2*z1)", "z1*(3*z0 - z1)", "z2*(z0 + 5*z1)"}, "5", "25/2", "15/2"},
      {{1, 1, 2}, {"z0*z2 + z1^3", "z1*z2 + z0^3", "0"}, "17/2", "18", "35/3"},
      {{1, 2, 3}, {"z0", "3*z1", "7*z2"}, "11/6", "6", "29/9"},
      {{1, 1, 2}, {"2*z0", "3*z1", "5*z2"}, "5/2", "8", "13/3"},
      {{1, 1, 2}, {"2*z0", "5*z1", "3*z2 + z0^2"}, "5/2", "8", "13/3"},
      {{1, 1, 1}, {"1", "2", "3"}, "1", "4", "2"},
      {{1, 1, 1}, {"z0", "2*z1", "3*z2"}, "3", "9", "5"},
      {{1, 1, 1}, {"0", "z1*(z0 + 2*z1 - z2)", "z2*(3*z0 - z1 + 2*z2)"}, "7", "16", "10"},
      {{1, 1, 1},
       {"0", "z1*(z0 - z1)*(z0 + z1 - 2*z2)", "z2*(z0 + 2*z1 - z2)*(2*z0 - z1 + 3*z2)"},
       "13",
       "25",
       "17"},
  };
  const std::vector<InvariantPolynomial> inv{InvariantPolynomial::top_chern(2), InvariantPolynomial::baum_bott(),
                                             InvariantPolynomial::parse("1/3*C1^2 + 2/3*C2", 2)};
  for (const auto& fx : fixtures) {
    auto s = WeightedSpace::make(fx.weights);
    std::vector<Polynomial> comps;
    for (const char* c : fx.field) comps.push_back(P(c, s.ambient_vars()));
    auto f = OrbifoldField::make(comps, s);
    auto g = global_orbifold_sum(f, inv);
    CAPTURE(fx.field[1]);
    CHECK(g.totals[0] == q(fx.c2));
    CHECK(g.totals[1] == q(fx.c1sq));
    CHECK(g.totals[2] == q(fx.mixed));
    CHECK(g.totals[0] == index_sum_rhs(fx.weights, f.degree()));
    CHECK(g.totals[1] == bb_sum_rhs(fx.weights, f.degree()));
    for (std::size_t k = 0; k < inv.size(); ++k) CHECK(g.totals[k] == chern_number(inv[k], fx.weights, f.degree()));
  }
}

TEST_CASE("global sum agrees with point mode when all zeros are supplied") {
  auto s = WeightedSpace::make({1, 1, 2});
  auto f = field(s, {"z0*(z0 + 2*z1)", "z1*(3*z0 - z1)", "z2*(z0 + 5*z1)"});
  const auto bb = InvariantPolynomial::baum_bott();
  const std::vector<InvariantPolynomial> inv{bb};
  Rational by_points = 0;
  // chart 0 cover points [0,0] and [2/3,0]; chart 1 vertex; chart 2 vertex
  for (const Point& p : {Point{1, 0, 0}, Point{1, ratio(2, 3), 0}, Point{0, 1, 0}, Point{0, 0, 1}})
    by_points += orbifold_index(f, p, bb).value;
  CHECK(by_points == global_orbifold_sum(f, inv).totals[0]);
  CHECK(orbifold_index(f, Point{1, 0, 0}, bb).value == ratio(-1, 2));
  CHECK(orbifold_index(f, Point{1, ratio(2, 3), 0}, bb).value == ratio(49, 6));
}
