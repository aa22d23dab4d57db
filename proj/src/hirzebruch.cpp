#include "orbires/hirzebruch.hpp"

#include <algorithm>
#include <map>

#include "orbires/errors.hpp"
#include "orbires/poly_matrix.hpp"
#include "orbires/quotient_algebra.hpp"

namespace orbires {
namespace {

// Dense univariate polynomials over Q, lowest degree first, no trailing zeros.
using UPoly = std::vector<Rational>;

void trim(UPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

UPoly derivative(const UPoly& p) {
  UPoly d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * Rational(static_cast<long>(i)));
  trim(d);
  return d;
}

// Quotient and remainder; b must be nonzero.
std::pair<UPoly, UPoly> divmod(UPoly a, const UPoly& b) {
  trim(a);
  if (a.size() < b.size()) return {UPoly{}, a};
  const std::size_t nb = b.size();
  UPoly q(a.size() - nb + 1);
  for (std::size_t len = a.size(); len >= nb; --len) {
    const std::size_t shift = len - nb;
    const Rational c = a[len - 1] / b.back();
    q[shift] = c;
    for (std::size_t j = 0; j < nb; ++j) a[shift + j] -= c * b[j];
    if (len == nb) break;
  }
  trim(a);
  trim(q);
  return {q, a};
}

UPoly monic(UPoly p) {
  trim(p);
  if (p.empty()) return p;
  const Rational lead = p.back();
  for (auto& c : p) c /= lead;
  return p;
}

UPoly gcd(UPoly a, UPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    UPoly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

UPoly sub(const UPoly& a, const UPoly& b) {
  UPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

bool is_one(const UPoly& p) { return p.size() == 1; }

// Yun's square-free decomposition: f = c * prod a_i^i.
std::vector<std::pair<UPoly, std::int64_t>> square_free(const UPoly& poly) {
  std::vector<std::pair<UPoly, std::int64_t>> out;
  const UPoly f = monic(poly);
  const UPoly fd = derivative(f);
  const UPoly a0 = gcd(f, fd);
  UPoly b = divmod(f, a0).first;
  UPoly c = divmod(fd, a0).first;
  UPoly d = sub(c, derivative(b));
  for (std::int64_t i = 1; !is_one(b); ++i) {
    UPoly a = gcd(b, d);
    if (!is_one(a)) out.emplace_back(a, i);
    b = divmod(b, a).first;
    c = divmod(d, a).first;
    d = sub(c, derivative(b));
  }
  return out;
}

Rational evaluate(const UPoly& p, const Rational& x) {
  Rational v = 0;
  for (std::size_t i = p.size(); i-- > 0;) v = v * x + p[i];
  return v;
}

std::vector<Integer> positive_divisors(Integer n) {
  if (n < 0) n = -n;
  if (n > Integer("1000000000000"))
    throw ComputationError("coefficient too large for the rational root search");
  std::vector<Integer> small, large;
  for (Integer d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d * d != n) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

// Rational roots of a square-free polynomial, by the rational root test.
std::vector<Rational> rational_roots(const UPoly& p) {
  std::vector<Rational> roots;
  UPoly f = p;
  std::size_t low = 0;
  while (low < f.size() && f[low] == 0) ++low;
  if (low > 0) {
    roots.push_back(0);
    f.erase(f.begin(), f.begin() + static_cast<std::ptrdiff_t>(low));
  }
  if (f.size() <= 1) return roots;
  Integer den = 1;
  for (const auto& c : f) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  const Integer a0 = Rational(f.front() * den).get_num();
  const Integer an = Rational(f.back() * den).get_num();
  for (const auto& num : positive_divisors(a0))
    for (const auto& dd : positive_divisors(an))
      for (int sign : {1, -1}) {
        Rational r(Integer(sign * num), dd);
        r.canonicalize();
        if (r.get_den() != dd) continue;  // already tried in lowest terms
        if (evaluate(f, r) == 0) roots.push_back(r);
      }
  std::sort(roots.begin(), roots.end());
  return roots;
}

UPoly restrict_to_divisor(const Polynomial& p) {
  UPoly u;
  for (const auto& [m, c] : p.terms()) {
    if (m[1] != 0) continue;
    if (u.size() <= m[0]) u.resize(m[0] + 1);
    u[m[0]] += c;
  }
  trim(u);
  return u;
}

Polynomial from_upoly(const UPoly& u, const std::shared_ptr<const VarList>& vars) {
  Polynomial p(vars, {});
  for (std::size_t i = 0; i < u.size(); ++i)
    if (u[i] != 0) p.add_term(Monomial{static_cast<std::uint32_t>(i), 0}, u[i]);
  return p;
}

std::shared_ptr<const VarList> resolution_vars() {
  static const auto v = make_vars({"x", "y"});
  return v;
}

using Laurent = std::map<std::pair<std::int64_t, std::int64_t>, Rational>;

void add(Laurent& l, std::int64_t xe, std::int64_t ye, const Rational& c) {
  auto& slot = l[{xe, ye}];
  slot += c;
  if (slot == 0) l.erase({xe, ye});
}

}  // namespace

std::pair<ResolutionChartField, ResolutionChartField> pullback_to_resolution(std::span<const Polynomial> cover_field,
                                                                             std::int64_t k) {
  if (k < 1) throw InputError("resolution order k must be positive");
  if (cover_field.size() != 2 || cover_field[0].nvars() != 2 || cover_field[1].nvars() != 2)
    throw InputError("resolution pullback needs a field (u0', u1') in two variables");
  const auto vars = resolution_vars();
  ResolutionChartField c1{1, vars, Polynomial(vars, {}), Polynomial(vars, {})};
  ResolutionChartField c2{2, vars, Polynomial(vars, {}), Polynomial(vars, {})};
  const auto kk = Rational(static_cast<long>(k));

  for (std::size_t comp = 0; comp < 2; ++comp) {
    for (const auto& [m, c] : cover_field[comp].terms()) {
      const std::int64_t a = m[0];
      const std::int64_t b = m[1];
      if ((a + b - 1) % k != 0 || a + b == 0) {
        if (a + b == 0)
          throw ComputationError("field does not vanish at the resolved point; its pullback has a pole along D");
        throw ComputationError("cover field is not Z_" + std::to_string(k) + "-equivariant (monomial of degree " +
                               std::to_string(a + b) + ")");
      }
      const auto e = static_cast<std::uint32_t>((a + b - 1) / k);
      const auto ua = static_cast<std::uint32_t>(a);
      const auto ub = static_cast<std::uint32_t>(b);
      if (comp == 0) {
        // u0' : chart 1 sees -x u0'/u0 in x' and k y u0'/u0 in y'; chart 2 sees u0'/u1 in x'
        c1.xdot.add_term(Monomial{ub + 1, e}, -c);
        c1.ydot.add_term(Monomial{ub, e + 1}, kk * c);
        c2.xdot.add_term(Monomial{ua, e}, c);
      } else {
        c1.xdot.add_term(Monomial{ub, e}, c);
        c2.xdot.add_term(Monomial{ua + 1, e}, -c);
        c2.ydot.add_term(Monomial{ua, e + 1}, kk * c);
      }
    }
  }
  return {std::move(c1), std::move(c2)};
}

std::pair<ResolutionChartField, ResolutionChartField> pullback_to_resolution(const ChartLift& lift, std::int64_t k) {
  if (lift.group_order != k)
    throw InputError("chart group order " + std::to_string(lift.group_order) + " differs from k = " +
                     std::to_string(k));
  return pullback_to_resolution(lift.components, k);
}

bool transition_consistent(const ResolutionChartField& chart1, const ResolutionChartField& chart2, std::int64_t k) {
  // chart 2 written in chart 1 coordinates: x2^p y2^q -> x^(kq - p) y^q
  auto pushed = [k](const Polynomial& p) {
    Laurent l;
    for (const auto& [m, c] : p.terms())
      add(l, k * static_cast<std::int64_t>(m[1]) - static_cast<std::int64_t>(m[0]), m[1], c);
    return l;
  };
  // x2' = -x'/x^2, y2' = k x^(k-1) y x' + x^k y'
  Laurent want_x, want_y;
  for (const auto& [m, c] : chart1.xdot.terms()) {
    add(want_x, static_cast<std::int64_t>(m[0]) - 2, m[1], -c);
    add(want_y, static_cast<std::int64_t>(m[0]) + k - 1, static_cast<std::int64_t>(m[1]) + 1,
        Rational(static_cast<long>(k)) * c);
  }
  for (const auto& [m, c] : chart1.ydot.terms()) add(want_y, static_cast<std::int64_t>(m[0]) + k, m[1], c);
  return pushed(chart2.xdot) == want_x && pushed(chart2.ydot) == want_y;
}

std::vector<ExceptionalZero> exceptional_zero_indices(
    const std::pair<ResolutionChartField, ResolutionChartField>& fields, const ResidueOptions& opts) {
  const auto& [c1, c2] = fields;
  const UPoly on_d = restrict_to_divisor(c1.xdot);
  if (on_d.empty()) throw ComputationError("x' vanishes identically on the exceptional divisor");
  const auto sys1 = c1.components();
  const Polynomial det1 = determinant(jacobian_matrix(sys1, *c1.vars));

  std::vector<ExceptionalZero> out;
  std::optional<QuotientAlgebra> algebra;
  RationalVector on_divisor;
  for (auto& [factor, mult] : square_free(on_d)) {
    UPoly rest = factor;
    for (const Rational& r : rational_roots(factor)) {
      ExceptionalZero z;
      z.chart = 1;
      z.x = r;
      z.factor = from_upoly(UPoly{-r, Rational(1)}, c1.vars);
      z.root_multiplicity = mult;
      const std::vector<Rational> pt{r, Rational(0)};
      z.index = local_residue(sys1, det1, pt, opts).value;
      out.push_back(std::move(z));
      rest = divmod(rest, UPoly{-r, Rational(1)}).first;
    }
    if (rest.size() <= 1) continue;
    ExceptionalZero z;
    z.chart = 1;
    z.factor = from_upoly(monic(rest), c1.vars);
    z.root_count = static_cast<std::int64_t>(rest.size() - 1);
    z.root_multiplicity = mult;
    z.numeric_only = true;
    try {
      if (!algebra) {
        algebra.emplace(QuotientAlgebra::build(Ideal(sys1, c1.vars), opts.exec));
        on_divisor = vanishing_idempotent(*algebra, 1);
      }
      const auto& a = *algebra;
      const RationalVector e = a.multiply(on_divisor, vanishing_idempotent(a, z.factor));
      z.index = a.residue(a.multiply(a.coordinates(det1), e));
    } catch (const ComputationError&) {
      // index left unset; the roots still count toward the degree bookkeeping
    }
    out.push_back(std::move(z));
  }

  const std::vector<Rational> origin{Rational(0), Rational(0)};
  const auto sys2 = c2.components();
  if (c2.xdot.evaluate(origin) == 0) {
    ExceptionalZero z;
    z.chart = 2;
    z.x = Rational(0);
    z.factor = Polynomial::variable(*c2.vars, 0).rebase(c2.vars);
    const UPoly on_d2 = restrict_to_divisor(c2.xdot);
    std::int64_t low = 0;
    while (static_cast<std::size_t>(low) < on_d2.size() && on_d2[static_cast<std::size_t>(low)] == 0) ++low;
    z.root_multiplicity = low;
    const Polynomial det2 = determinant(jacobian_matrix(sys2, *c2.vars));
    z.index = local_residue(sys2, det2, origin, opts).value;
    out.push_back(std::move(z));
  }
  return out;
}

LocalCorrection local_chern_correction(std::int64_t k, std::int64_t d) {
  if (k < 1) throw InputError("k must be at least 1");
  const Rational base = Rational(static_cast<long>(d * d + k * d + k));
  const Rational kk(static_cast<long>(k));
  LocalCorrection lc;
  lc.value = base * (kk - 1 / kk);
  lc.formal_integral = base * kk;
  const std::vector<std::int64_t> w{1, 1, k};
  lc.orbifold_total = index_sum_rhs(w, d);
  if (lc.formal_integral - lc.orbifold_total != lc.value)
    throw ComputationError("local correction disagrees with the global count");
  return lc;
}

ResolutionReport verify_resolution_identity(const OrbifoldField& field, const ResidueOptions& opts) {
  const auto& w = field.space().weights();
  if (w.size() != 3 || w[0] != 1 || w[1] != 1)
    throw InputError("resolution diagnostics need a field on P(1,1,k)");
  ResolutionReport r;
  r.k = w[2];
  r.degree = field.degree();
  const LocalCorrection lc = local_chern_correction(r.k, r.degree);
  r.c = lc.value;
  r.formal_integral = lc.formal_integral;

  const ChartLift lift = lift_to_chart(field, 2);
  const std::vector<Rational> origin{Rational(0), Rational(0)};
  r.vertex_is_zero = lift.components[0].evaluate(origin) == 0 && lift.components[1].evaluate(origin) == 0;
  const auto c2 = InvariantPolynomial::top_chern(2);
  if (r.k > 1 && r.vertex_is_zero) r.a = orbifold_index(field, std::vector<Rational>{0, 0, 1}, c2, opts).value;
  r.implied_sum = r.a + r.c;

  const std::vector<InvariantPolynomial> inv{c2};
  r.orbifold_total = global_orbifold_sum(field, inv, opts).totals[0];
  r.away_sum = r.orbifold_total - r.a;
  r.interpretation_free_holds = r.implied_sum == r.formal_integral - r.away_sum;

  if (r.k == 1) {
    r.b_note = "k = 1: no singular point to resolve";
  } else if (((r.degree - 1) % r.k + r.k) % r.k != 0) {
    r.b_note = "cover field is not equivariant of degree 1 mod k (needs d = 1 mod k)";
  } else {
    try {
      r.exceptional = exceptional_zero_indices(pullback_to_resolution(lift, r.k), opts);
      Rational b = 0;
      bool complete = true;
      for (const auto& z : r.exceptional) {
        if (z.index) b += *z.index;
        else complete = false;
      }
      if (complete) {
        r.b = b;
        r.literal_holds = b - r.a == r.c;
      } else {
        r.b_note = "some zeros on D have no exact index";
      }
    } catch (const ComputationError& e) {
      r.b_note = e.what();
    }
  }
  return r;
}

}  // namespace orbires
