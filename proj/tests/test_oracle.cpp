#include "doctest.h"
#include "orbires/errors.hpp"
#include "orbires/oracle.hpp"
#include "orbires/poly_matrix.hpp"
#include "orbires/residue.hpp"
#include "test_support.hpp"

using namespace orbires;
using namespace orbires::test;

namespace {

using Point = std::vector<Rational>;

void agrees(std::initializer_list<const char*> sys, const char* h, Point p, std::size_t mu) {
  auto v = vars({"z1", "z2"});
  auto f = Ps(sys, v);
  const Polynomial num = std::string(h) == "det" ? determinant(jacobian_matrix(f, *v)) : P(h, v);
  const Rational exact = local_residue(f, num, p).value;
  auto r = numeric_local_residue(f, num, p);
  CAPTURE(h);
  CHECK(r.reliable);
  CHECK(r.zero_count() == mu);
  CHECK(std::abs(r.value - std::complex<double>(exact.get_d(), 0)) < 1e-6);
}

}  // namespace

TEST_CASE("oracle agrees with exact residues") {
  agrees({"z1^2", "z2^2"}, "4*z1*z2", {0, 0}, 4);
  agrees({"z1", "z2"}, "1", {0, 0}, 1);
  agrees({"z1^2 - z2", "z2^2"}, "det", {0, 0}, 4);
  agrees({"z1^2 - z2", "z2^2"}, "z1^3", {0, 0}, 4);
  agrees({"z1^2", "z2^3"}, "z1*z2^2", {0, 0}, 6);
  agrees({"(z1 - 1)^3 + z2^2", "z2*(z1 - 1) + z2^3"}, "z2^2", {1, 0}, 5);
  agrees({"(z1 - 1)^3 + z2^2", "z2*(z1 - 1) + z2^3"}, "det", {1, 0}, 5);
}

TEST_CASE("oracle matches the fast path at simple zeros") {
  auto v = vars({"z1", "z2"});
  auto f = Ps({"z1^2*(z1 - 1)", "z2^2 - z1*z2"}, v);
  for (const Point& p : {Point{1, 0}, Point{1, 1}}) {
    auto h = P("3 + z1*z2 - z2^3", v);
    const double exact = local_residue(f, h, p).value.get_d();
    auto r = numeric_local_residue(f, h, p);
    CHECK(r.zero_count() == 1);
    CHECK(std::abs(r.value - exact) <= 1e-9 * std::max(1.0, std::abs(exact)));
  }
}

TEST_CASE("oracle is deterministic under a fixed seed") {
  auto v = vars({"z1", "z2"});
  auto f = Ps({"z1^2 - z2", "z2^2"}, v);
  auto h = P("z1^3 + 2*z1*z2", v);
  OracleSettings s;
  s.seed = 42;
  auto a = numeric_local_residue(f, h, Point{0, 0}, s);
  auto b = numeric_local_residue(f, h, Point{0, 0}, s);
  s.exec = Exec::kSerial;
  auto c = numeric_local_residue(f, h, Point{0, 0}, s);
  CHECK(a.value == b.value);
  CHECK(a.value == c.value);
  CHECK(a.error_estimate == c.error_estimate);
  for (std::size_t l = 0; l < a.levels.size(); ++l) {
    CHECK(a.levels[l].zeros == c.levels[l].zeros);
    CHECK(a.levels[l].sum == c.levels[l].sum);
  }
  s.seed = 43;
  auto d = numeric_local_residue(f, h, Point{0, 0}, s);
  CHECK(std::abs(d.value - a.value) < 1e-6);
}

TEST_CASE("oracle input errors") {
  auto v = vars({"z1", "z2"});
  auto f = Ps({"z1^2", "z2^2"}, v);
  CHECK_THROWS_AS(numeric_local_residue(f, P("1", v), Point{0}), InputError);
  OracleSettings bad;
  bad.epsilon = 0;
  CHECK_THROWS_AS(numeric_local_residue(f, P("1", v), Point{0, 0}, bad), InputError);
  CHECK_THROWS_AS(numeric_local_residue(f, P("1", v), Point{5, 5}), ComputationError);
}
