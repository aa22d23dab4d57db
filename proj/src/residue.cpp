#include "orbires/residue.hpp"

#include <bit>
#include <optional>

#include "orbires/errors.hpp"
#include "orbires/poly_matrix.hpp"

namespace orbires {

const char* to_string(ResidueMethod m) noexcept { return m == ResidueMethod::kFastPath ? "fast-path" : "groebner"; }

namespace {

void check_zero(std::span<const Polynomial> fields, std::span<const Rational> p, const char* what) {
  std::vector<Rational> values;
  bool zero = true;
  for (const auto& f : fields) {
    values.push_back(f.evaluate(p));
    zero &= values.back() == 0;
  }
  if (!zero) throw NotAZeroError(what, std::move(values));
}

// Projection to the idempotent locus; e <- 3e^2 - 2e^3 converges
// quadratically to an idempotent when e is close to one.
RationalVector refine_idempotent(const QuotientAlgebra& a, RationalVector e) {
  const unsigned rounds = std::bit_width(a.dimension()) + 2;
  for (unsigned r = 0; r <= rounds; ++r) {
    const RationalVector e2 = a.multiply(e, e);
    if (e2 == e) return e;
    const RationalVector e3 = a.multiply(e2, e);
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = 3 * e2[i] - 2 * e3[i];
  }
  throw ComputationError("local idempotent did not stabilise");
}

Ideal maximal_ideal(const std::shared_ptr<const VarList>& vars, std::span<const Rational> p) {
  std::vector<Polynomial> gens;
  for (std::size_t k = 0; k < vars->size(); ++k)
    gens.push_back(Polynomial::variable(*vars, k).rebase(vars) - Polynomial::constant(*vars, p[k]).rebase(vars));
  return Ideal(std::move(gens), vars);
}

}  // namespace

RationalVector crt_idempotent(const QuotientAlgebra& a, const GroebnerBasis& k1, const GroebnerBasis& k2) {
  const auto s1 = a.ideal_span(k1);
  const auto s2 = a.ideal_span(k2);
  if (s1.size() + s2.size() != a.dimension())
    throw ComputationError("ideal split is not a direct sum (dimensions " + std::to_string(s1.size()) + " + " +
                           std::to_string(s2.size()) + " vs " + std::to_string(a.dimension()) + ")");
  auto e = split_along(s1, s2, a.one());
  if (!e) throw ComputationError("1 does not split along the ideal decomposition");
  return refine_idempotent(a, std::move(*e));
}

RationalVector local_idempotent(const QuotientAlgebra& a, std::span<const Rational> p) {
  if (p.size() != a.vars()->size()) throw InputError("point dimension differs from the number of variables");
  check_zero(a.ideal().generators, p, "point is not a zero of the ideal");
  const GroebnerBasis away = saturate(a.ideal(), maximal_ideal(a.vars(), p));
  const GroebnerBasis primary = saturate(a.ideal(), to_ideal(away));
  return crt_idempotent(a, away, primary);
}

RationalVector local_idempotent_spectral(const QuotientAlgebra& a, std::span<const Rational> p) {
  const std::size_t n = a.vars()->size();
  const std::size_t mu = a.dimension();
  if (p.size() != n) throw InputError("point dimension differs from the number of variables");
  std::vector<RationalMatrix> nil;
  for (std::size_t k = 0; k < n; ++k) {
    RationalMatrix m = a.multiplication_matrix(k);
    for (std::size_t i = 0; i < mu; ++i) m(i, i) -= p[k];
    nil.push_back(m.pow(static_cast<unsigned>(mu)));
  }
  RationalMatrix stacked(n * mu, mu);
  std::vector<RationalVector> images;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t r = 0; r < mu; ++r) {
      for (std::size_t c = 0; c < mu; ++c) stacked(k * mu + r, c) = nil[k](r, c);
    }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t c = 0; c < mu; ++c) images.push_back(nil[k].column(c));
  const auto local = stacked.nullspace();
  if (local.empty()) throw ComputationError("point is not a zero of the ideal");
  const auto rest = RationalMatrix::from_columns(images, mu).column_basis();
  auto e = split_along(local, rest, a.one());
  if (!e) throw ComputationError("generalized eigenspaces do not split");
  return refine_idempotent(a, std::move(*e));
}

RationalVector vanishing_idempotent(const QuotientAlgebra& a, std::size_t var) {
  return vanishing_idempotent(a, Polynomial::variable(*a.vars(), var).rebase(a.vars()));
}

RationalVector vanishing_idempotent(const QuotientAlgebra& a, const Polynomial& g) {
  const auto& vars = a.vars();
  const Polynomial gg = g.rebase(vars);
  const GroebnerBasis off = saturate(a.ideal(), Ideal({gg}, vars));
  std::vector<Polynomial> gens = a.ideal().generators;
  gens.push_back(gg.pow(static_cast<unsigned>(a.dimension())));
  const GroebnerBasis on = groebner_basis(Ideal(std::move(gens), vars));
  if (on.is_unit()) return RationalVector(a.dimension());
  if (off.is_unit()) return a.one();
  return crt_idempotent(a, off, on);
}

ResidueResult local_residue(std::span<const Polynomial> fields, const Polynomial& h, std::span<const Rational> p,
                            const ResidueOptions& opts) {
  if (fields.empty()) throw InputError("empty system");
  const auto& vars = fields.front().shared_vars();
  const std::size_t n = vars->size();
  if (fields.size() != n) throw InputError("residue needs n functions in n variables");
  if (p.size() != n) throw InputError("point dimension differs from the number of variables");
  for (const auto& f : fields)
    if (!same_vars(f, fields.front())) throw InputError("system components use different variables");
  const Polynomial num = h.rebase(vars);
  check_zero(fields, p, "point is not a zero of the system");

  const Polynomial det = determinant(jacobian_matrix(fields, *vars));
  ResidueResult r;
  r.point.assign(p.begin(), p.end());
  const Rational detp = det.evaluate(p);
  if (detp != 0 && !opts.force_groebner) {
    r.value = num.evaluate(p) / detp;
    r.multiplicity = 1;
    r.method = ResidueMethod::kFastPath;
    return r;
  }

  std::vector<Polynomial> shift;
  for (std::size_t k = 0; k < n; ++k)
    shift.push_back(Polynomial::variable(*vars, k).rebase(vars) + Polynomial::constant(*vars, p[k]).rebase(vars));
  std::vector<Polynomial> moved;
  for (const auto& f : fields) moved.push_back(f.substitute(shift));
  const QuotientAlgebra a = QuotientAlgebra::build(Ideal(std::move(moved), vars), opts.exec);
  const std::vector<Rational> origin(n, Rational(0));
  const RationalVector e = local_idempotent(a, origin);
  r.value = a.residue(a.multiply(a.coordinates(num.substitute(shift)), e));
  const Rational mu = a.residue(a.multiply(a.coordinates(det.substitute(shift)), e));
  if (mu.get_den() != 1) throw ComputationError("non-integral multiplicity " + to_string(mu));
  r.multiplicity = mu.get_num().get_si();
  r.method = ResidueMethod::kGroebner;
  return r;
}

std::int64_t multiplicity(std::span<const Polynomial> fields, std::span<const Rational> p, const ResidueOptions& opts) {
  if (fields.empty()) throw InputError("empty system");
  const Polynomial det = determinant(jacobian_matrix(fields, fields.front().vars()));
  return local_residue(fields, det, p, opts).multiplicity;
}

Polynomial invariant_numerator(std::span<const Polynomial> lifted, const InvariantPolynomial& p) {
  if (lifted.empty()) throw InputError("empty lifted field");
  if (p.dimension() != lifted.size())
    throw InputError("invariant polynomial is for n = " + std::to_string(p.dimension()) + " but the field has n = " +
                     std::to_string(lifted.size()));
  const auto coeffs = char_coeffs(jacobian_matrix(lifted, lifted.front().vars()));
  return p.evaluate(coeffs);
}

CoverPoint cover_point(const WeightedSpace& space, std::span<const Rational> point) {
  const std::size_t m = space.dimension() + 1;
  if (point.size() != m)
    throw InputError("point has " + std::to_string(point.size()) + " coordinates, expected " + std::to_string(m));
  std::size_t chart = m;
  for (std::size_t i = 0; i < m; ++i)
    if (point[i] != 0) {
      chart = i;
      break;
    }
  if (chart == m) throw InputError("the zero vector is not a point of weighted projective space");
  Rational r;
  if (!exact_root(point[chart], static_cast<unsigned>(space.weight(chart)), r))
    throw InputError("coordinate " + to_string(point[chart]) + " has no rational " +
                     std::to_string(space.weight(chart)) + "-th root; choose another representative");
  CoverPoint cp;
  cp.chart = chart;
  cp.is_vertex = true;
  for (std::size_t j = 0; j < m; ++j) {
    if (j == chart) continue;
    cp.coords.push_back(point[j] / pow(r, static_cast<unsigned>(space.weight(j))));
    if (point[j] != 0) cp.is_vertex = false;
  }
  return cp;
}

ResidueResult orbifold_index(const OrbifoldField& field, std::span<const Rational> point,
                             const InvariantPolynomial& p, const ResidueOptions& opts) {
  const CoverPoint cp = cover_point(field.space(), point);
  const ChartLift lift = lift_to_chart(field, cp.chart);
  const Polynomial num = invariant_numerator(lift.components, p);
  ResidueResult r;
  try {
    r = local_residue(lift.components, num, cp.coords, opts);
  } catch (const NotAZeroError& e) {
    throw NotAZeroError("not a zero of the section", e.values());
  }
  r.chart = cp.chart;
  r.group_order = cp.is_vertex ? field.space().weight(cp.chart) : 1;
  r.value /= Rational(static_cast<long>(r.group_order));
  return r;
}

GlobalSum global_orbifold_sum(const OrbifoldField& field, std::span<const InvariantPolynomial> invariants,
                              const ResidueOptions& opts) {
  const WeightedSpace& space = field.space();
  GlobalSum out;
  out.totals.assign(invariants.size(), Rational(0));
  for (std::size_t chart = 0; chart < space.weights().size(); ++chart) {
    const ChartLift lift = lift_to_chart(field, chart);
    ChartSum cs;
    cs.chart = chart;
    cs.group_order = space.weight(chart);
    cs.residue_sums.assign(invariants.size(), Rational(0));

    std::optional<QuotientAlgebra> algebra;
    try {
      algebra.emplace(QuotientAlgebra::build(Ideal(lift.components, lift.vars), opts.exec));
    } catch (const EmptyVarietyError&) {
      out.charts.push_back(std::move(cs));
      continue;
    }
    const QuotientAlgebra& a = *algebra;
    // u_j for j < chart keeps index j among the chart variables
    RationalVector e = a.one();
    for (std::size_t j = 0; j < chart; ++j) e = a.multiply(e, vanishing_idempotent(a, j));

    const Polynomial det = determinant(jacobian_matrix(lift.components, *lift.vars));
    const Rational mu = a.residue(a.multiply(a.coordinates(det), e));
    if (mu.get_den() != 1) throw ComputationError("non-integral zero count " + to_string(mu));
    cs.cover_zeros = mu.get_num().get_si();
    for (std::size_t k = 0; k < invariants.size(); ++k) {
      const Polynomial num = invariant_numerator(lift.components, invariants[k]);
      cs.residue_sums[k] = a.residue(a.multiply(a.coordinates(num), e));
      out.totals[k] += cs.residue_sums[k] / Rational(static_cast<long>(cs.group_order));
    }
    out.charts.push_back(std::move(cs));
  }
  return out;
}

}  // namespace orbires
