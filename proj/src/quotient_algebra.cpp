#include "orbires/quotient_algebra.hpp"

#include <algorithm>
#include <unordered_map>

#include "orbires/errors.hpp"
#include "orbires/poly_matrix.hpp"

namespace orbires {

std::vector<Monomial> standard_monomials(const GroebnerBasis& gb) {
  const std::size_t n = gb.vars().size();
  std::vector<std::uint32_t> bound(n, 0);
  for (const auto& m : gb.leading_monomials()) {
    for (std::size_t v = 0; v < n; ++v) {
      bool pure = m[v] > 0;
      for (std::size_t k = 0; k < n && pure; ++k)
        if (k != v && m[k] != 0) pure = false;
      if (pure && (bound[v] == 0 || m[v] < bound[v])) bound[v] = m[v];
    }
  }
  std::vector<Monomial> out;
  Monomial cur(n);
  // Odometer over the box [0, bound).
  while (true) {
    bool standard = true;
    for (const auto& lm : gb.leading_monomials())
      if (lm.divides(cur)) {
        standard = false;
        break;
      }
    if (standard) out.push_back(cur);
    std::size_t v = 0;
    while (v < n) {
      if (++cur[v] < bound[v]) break;
      cur[v] = 0;
      ++v;
    }
    if (v == n) break;
  }
  std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) { return grevlex_compare(a, b) < 0; });
  return out;
}

namespace {

RationalVector coords_of(const Polynomial& reduced, const std::vector<Monomial>& basis) {
  RationalVector v(basis.size());
  for (const auto& [m, c] : reduced.terms()) {
    auto it = std::lower_bound(basis.begin(), basis.end(), m,
                               [](const Monomial& a, const Monomial& b) { return grevlex_compare(a, b) < 0; });
    if (it == basis.end() || !(*it == m)) throw ComputationError("normal form left a non-standard monomial");
    v[static_cast<std::size_t>(it - basis.begin())] = c;
  }
  return v;
}

void fill_column(const GroebnerBasis& gb, const std::vector<Monomial>& basis, std::size_t var, std::size_t b,
                 RationalMatrix& out) {
  Monomial m = basis[b];
  m[var] += 1;
  const Polynomial nf = gb.reduce(Polynomial(gb.shared_vars(), {{m, Rational(1)}}));
  const RationalVector col = coords_of(nf, basis);
  for (std::size_t r = 0; r < basis.size(); ++r) out(r, b) = col[r];
}

// Coordinates of monomials, memoised, computed through the multiplication
// matrices.
class MonomialCoordinates {
 public:
  MonomialCoordinates(const std::vector<RationalMatrix>& mult, std::size_t dim) : mult_(mult), dim_(dim) {}

  const RationalVector& get(const Monomial& m) {
    auto it = cache_.find(m);
    if (it != cache_.end()) return it->second;
    RationalVector v;
    std::size_t var = m.size();
    for (std::size_t k = 0; k < m.size(); ++k)
      if (m[k] > 0) {
        var = k;
        break;
      }
    if (var == m.size()) {
      v.assign(dim_, Rational(0));
      v[0] = 1;
    } else {
      Monomial prev(m);
      prev[var] -= 1;
      v = mult_[var] * get(prev);
    }
    return cache_.emplace(m, std::move(v)).first->second;
  }

 private:
  const std::vector<RationalMatrix>& mult_;
  std::size_t dim_;
  std::unordered_map<Monomial, RationalVector, MonomialHash> cache_;
};

}  // namespace

std::vector<RationalMatrix> multiplication_matrices(const GroebnerBasis& gb, const std::vector<Monomial>& basis,
                                                   Exec exec) {
  const std::size_t n = gb.vars().size();
  const std::size_t mu = basis.size();
  std::vector<RationalMatrix> mult(n, RationalMatrix(mu, mu));
  const long tasks = static_cast<long>(n * mu);
  if (exec == Exec::kParallel) {
#pragma omp parallel for schedule(dynamic)
    for (long t = 0; t < tasks; ++t) {
      const auto var = static_cast<std::size_t>(t) / mu;
      fill_column(gb, basis, var, static_cast<std::size_t>(t) % mu, mult[var]);
    }
  } else {
    for (long t = 0; t < tasks; ++t) {
      const auto var = static_cast<std::size_t>(t) / mu;
      fill_column(gb, basis, var, static_cast<std::size_t>(t) % mu, mult[var]);
    }
  }
  return mult;
}

Polynomial bezoutian_determinant(std::span<const Polynomial> system) {
  const std::size_t n = system.size();
  const VarList& base = system.front().vars();
  VarList names = base;
  for (const auto& v : base) names.push_back(v + "'");
  const auto vars = make_vars(names);

  PolyMatrix mat(n, n, vars);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Polynomial entry(vars, {});
      for (const auto& [m, c] : system[i].terms()) {
        const std::uint32_t a = m[j];
        if (a == 0) continue;
        Monomial shape(2 * n);
        for (std::size_t k = 0; k < j; ++k) shape[n + k] = m[k];
        for (std::size_t k = j + 1; k < n; ++k) shape[k] = m[k];
        for (std::uint32_t s = 0; s < a; ++s) {
          Monomial t(shape);
          t[j] = s;
          t[n + j] = a - 1 - s;
          entry.add_term(t, c);
        }
      }
      mat.set(i, j, std::move(entry));
    }
  }
  return determinant(mat);
}

QuotientAlgebra QuotientAlgebra::build(const Ideal& ideal, Exec exec) {
  const std::size_t n = ideal.vars->size();
  if (ideal.generators.size() != n)
    throw InputError("residue algebra needs exactly n generators in n variables (got " +
                     std::to_string(ideal.generators.size()) + " in " + std::to_string(n) + ")");
  for (const auto& g : ideal.generators)
    if (g.is_zero()) throw ComputationError("system has a zero generator, so its zeros are not isolated");
  GroebnerBasis gb = groebner_basis(ideal);
  if (gb.is_unit()) throw EmptyVarietyError("unit ideal: the system has no zeros");
  if (!gb.is_zero_dimensional()) throw ComputationError("ideal is not zero-dimensional");

  QuotientAlgebra a(ideal, std::move(gb));
  a.basis_ = orbires::standard_monomials(a.groebner_);
  a.build_multiplication(exec);
  a.build_residue();
  return a;
}

void QuotientAlgebra::build_multiplication(Exec exec) { mult_ = multiplication_matrices(groebner_, basis_, exec); }

void QuotientAlgebra::build_residue() {
  const std::size_t n = vars()->size();
  const std::size_t mu = basis_.size();
  const Polynomial delta = bezoutian_determinant(ideal_.generators);

  MonomialCoordinates coords(mult_, mu);
  bezoutian_ = RationalMatrix(mu, mu);
  for (const auto& [m, c] : delta.terms()) {
    Monomial zpart(n), wpart(n);
    for (std::size_t k = 0; k < n; ++k) {
      zpart[k] = m[k];
      wpart[k] = m[n + k];
    }
    const RationalVector vz = coords.get(zpart);
    const RationalVector& vw = coords.get(wpart);
    for (std::size_t a = 0; a < mu; ++a) {
      if (vz[a] == 0) continue;
      const Rational ca = c * vz[a];
      for (std::size_t b = 0; b < mu; ++b)
        if (vw[b] != 0) bezoutian_(a, b) += ca * vw[b];
    }
  }
  RationalVector unit(mu);
  unit[0] = 1;
  auto x = bezoutian_.solve(unit);
  if (!x) throw ComputationError("reduced Bezoutian is singular; residue pairing degenerate");
  residues_ = std::move(*x);
}

std::size_t QuotientAlgebra::index_of(const Monomial& m) const {
  auto it = std::lower_bound(basis_.begin(), basis_.end(), m,
                             [](const Monomial& a, const Monomial& b) { return grevlex_compare(a, b) < 0; });
  if (it == basis_.end() || !(*it == m)) return basis_.size();
  return static_cast<std::size_t>(it - basis_.begin());
}

RationalVector QuotientAlgebra::one() const {
  RationalVector v(dimension());
  v[0] = 1;
  return v;
}

RationalVector QuotientAlgebra::coordinates(const Polynomial& p) const {
  return coords_of(groebner_.reduce(p.rebase(vars())), basis_);
}

Polynomial QuotientAlgebra::to_polynomial(const RationalVector& v) const {
  Polynomial p(vars(), {});
  for (std::size_t i = 0; i < v.size(); ++i) p.add_term(basis_[i], v[i]);
  return p;
}

RationalVector QuotientAlgebra::multiply(const RationalVector& a, const RationalVector& b) const {
  RationalVector out(dimension());
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (b[i] == 0) continue;
    RationalVector t = a;
    const Monomial& m = basis_[i];
    for (std::size_t k = 0; k < m.size(); ++k)
      for (std::uint32_t e = 0; e < m[k]; ++e) t = mult_[k] * t;
    for (std::size_t r = 0; r < t.size(); ++r)
      if (t[r] != 0) out[r] += b[i] * t[r];
  }
  return out;
}

RationalMatrix QuotientAlgebra::multiplication_by(const RationalVector& a) const {
  const std::size_t mu = dimension();
  std::vector<RationalVector> cols;
  cols.reserve(mu);
  for (std::size_t c = 0; c < mu; ++c) {
    RationalVector e(mu);
    e[c] = 1;
    cols.push_back(multiply(a, e));
  }
  return RationalMatrix::from_columns(cols, mu);
}

std::vector<RationalVector> QuotientAlgebra::ideal_span(const GroebnerBasis& k) const {
  const std::size_t mu = dimension();
  std::vector<RationalVector> cols;
  for (const auto& g : k.elements()) {
    const RationalVector gv = coordinates(g);
    if (is_zero(gv)) continue;
    const RationalMatrix mg = multiplication_by(gv);
    for (std::size_t c = 0; c < mu; ++c) cols.push_back(mg.column(c));
  }
  if (cols.empty()) return {};
  return RationalMatrix::from_columns(cols, mu).column_basis();
}

Rational QuotientAlgebra::residue(const RationalVector& v) const {
  Rational total = 0;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) total += v[i] * residues_[i];
  return total;
}

RationalMatrix QuotientAlgebra::gram_matrix() const {
  const std::size_t mu = dimension();
  RationalMatrix g(mu, mu);
  for (std::size_t a = 0; a < mu; ++a)
    for (std::size_t b = 0; b < mu; ++b) {
      RationalVector ea(mu), eb(mu);
      ea[a] = 1;
      eb[b] = 1;
      g(a, b) = residue(multiply(ea, eb));
    }
  return g;
}

}  // namespace orbires
