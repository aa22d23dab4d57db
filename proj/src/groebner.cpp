#include "orbires/groebner.hpp"

#include <algorithm>
#include <set>

#include "orbires/errors.hpp"

namespace orbires {

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const noexcept {
  if (block_ > 0) {
    std::uint64_t da = 0, db = 0;
    for (std::size_t i = 0; i < block_; ++i) {
      da += a[i];
      db += b[i];
    }
    if (da != db) return da < db ? -1 : 1;
    for (std::size_t i = block_; i-- > 0;)
      if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
    std::uint64_t ra = 0, rb = 0;
    for (std::size_t i = block_; i < a.size(); ++i) {
      ra += a[i];
      rb += b[i];
    }
    if (ra != rb) return ra < rb ? -1 : 1;
    for (std::size_t i = a.size(); i-- > block_;)
      if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
    return 0;
  }
  return grevlex_compare(a, b);
}

Ideal::Ideal(std::vector<Polynomial> gens, std::shared_ptr<const VarList> v) : vars(std::move(v)) {
  for (auto& g : gens) {
    if (!(g.vars() == *vars)) throw InputError("ideal generator on a different variable sequence");
    generators.push_back(g.rebase(vars));
  }
}

namespace {

struct Term {
  Monomial mono;
  Rational coeff;
};

// Terms sorted ascending under the order, so back() is the leading term.
using Work = std::vector<Term>;

Work to_work(const Polynomial& p, const MonomialOrder& order) {
  Work w;
  w.reserve(p.size());
  for (const auto& [m, c] : p.terms()) w.push_back({m, c});
  std::sort(w.begin(), w.end(), [&](const Term& a, const Term& b) { return order.compare(a.mono, b.mono) < 0; });
  return w;
}

Polynomial to_poly(const Work& w, const std::shared_ptr<const VarList>& vars) {
  Polynomial::TermMap terms;
  for (const auto& t : w) terms.emplace(t.mono, t.coeff);
  return Polynomial(vars, std::move(terms));
}

void make_monic(Work& w) {
  if (w.empty() || w.back().coeff == 1) return;
  const Rational inv = 1 / w.back().coeff;
  for (auto& t : w) t.coeff *= inv;
}

// p - c * shift * g, both ascending.
Work sub_mul(const Work& p, const Rational& c, const Monomial& shift, const Work& g, const MonomialOrder& order) {
  Work out;
  out.reserve(p.size() + g.size());
  std::size_t i = 0, j = 0;
  while (i < p.size() || j < g.size()) {
    if (j == g.size()) {
      out.push_back(p[i++]);
      continue;
    }
    Monomial gm = g[j].mono * shift;
    if (i == p.size()) {
      out.push_back({std::move(gm), -c * g[j].coeff});
      ++j;
      continue;
    }
    const int cmp = order.compare(p[i].mono, gm);
    if (cmp < 0) {
      out.push_back(p[i++]);
    } else if (cmp > 0) {
      out.push_back({std::move(gm), -c * g[j].coeff});
      ++j;
    } else {
      Rational v = p[i].coeff - c * g[j].coeff;
      if (v != 0) out.push_back({std::move(gm), std::move(v)});
      ++i;
      ++j;
    }
  }
  return out;
}

const Work* find_divisor(const Monomial& m, const std::vector<Work>& basis) {
  for (const auto& g : basis)
    if (!g.empty() && g.back().mono.divides(m)) return &g;
  return nullptr;
}

// Full reduction; basis elements must be monic.
Work reduce_full(Work p, const std::vector<Work>& basis, const MonomialOrder& order) {
  Work remainder;
  while (!p.empty()) {
    const Term lead = p.back();
    if (const Work* g = find_divisor(lead.mono, basis)) {
      p = sub_mul(p, lead.coeff, lead.mono / g->back().mono, *g, order);
    } else {
      remainder.push_back(lead);
      p.pop_back();
    }
  }
  std::reverse(remainder.begin(), remainder.end());
  return remainder;
}

Work s_polynomial(const Work& f, const Work& g, const MonomialOrder& order) {
  const Monomial l = f.back().mono.lcm(g.back().mono);
  Work a = sub_mul(Work{}, Rational(-1), l / f.back().mono, f, order);
  return sub_mul(a, Rational(1), l / g.back().mono, g, order);
}

bool is_constant(const Work& w) { return w.size() == 1 && w.back().mono.is_one(); }

std::vector<Work> interreduce(std::vector<Work> g, const MonomialOrder& order) {
  std::sort(g.begin(), g.end(), [&](const Work& a, const Work& b) {
    return order.compare(a.back().mono, b.back().mono) < 0;
  });
  std::vector<Work> minimal;
  for (auto& w : g) {
    bool redundant = false;
    for (const auto& kept : minimal)
      if (kept.back().mono.divides(w.back().mono)) {
        redundant = true;
        break;
      }
    if (!redundant) minimal.push_back(std::move(w));
  }
  std::vector<Work> reduced(minimal.size());
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Work> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    Work tail(minimal[i].begin(), minimal[i].end() - 1);
    Work r = reduce_full(std::move(tail), others, order);
    r.push_back(minimal[i].back());
    reduced[i] = std::move(r);
  }
  return reduced;
}

std::vector<Work> buchberger(std::vector<Work> input, const MonomialOrder& order) {
  std::vector<Work> g;
  for (auto& w : input) {
    if (w.empty()) continue;
    make_monic(w);
    if (is_constant(w)) return {w};
    g.push_back(std::move(w));
  }
  if (g.empty()) return {};

  using Pair = std::pair<std::size_t, std::size_t>;
  std::set<Pair> pending;
  for (std::size_t j = 1; j < g.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) pending.insert({i, j});

  auto has_pair = [&](std::size_t a, std::size_t b) { return pending.count({std::min(a, b), std::max(a, b)}) > 0; };

  while (!pending.empty()) {
    // Normal selection: smallest lcm first, ties broken by index.
    auto best = pending.begin();
    Monomial best_lcm = g[best->first].back().mono.lcm(g[best->second].back().mono);
    for (auto it = std::next(pending.begin()); it != pending.end(); ++it) {
      Monomial l = g[it->first].back().mono.lcm(g[it->second].back().mono);
      if (order.compare(l, best_lcm) < 0) {
        best = it;
        best_lcm = std::move(l);
      }
    }
    const auto [i, j] = *best;
    pending.erase(best);

    const Monomial& li = g[i].back().mono;
    const Monomial& lj = g[j].back().mono;
    if (li.coprime(lj)) continue;
    bool chain = false;
    for (std::size_t k = 0; k < g.size() && !chain; ++k) {
      if (k == i || k == j) continue;
      chain = g[k].back().mono.divides(best_lcm) && !has_pair(i, k) && !has_pair(j, k);
    }
    if (chain) continue;

    Work r = reduce_full(s_polynomial(g[i], g[j], order), g, order);
    if (r.empty()) continue;
    make_monic(r);
    if (is_constant(r)) return {r};
    const std::size_t idx = g.size();
    g.push_back(std::move(r));
    for (std::size_t k = 0; k < idx; ++k) pending.insert({k, idx});
  }
  return interreduce(std::move(g), order);
}

std::string fresh_name(const VarList& vars) {
  std::string name = "_t";
  while (std::find(vars.begin(), vars.end(), name) != vars.end()) name += "_";
  return name;
}

}  // namespace

struct ReductionData {
  std::vector<Work> basis;
};

GroebnerBasis::GroebnerBasis(std::shared_ptr<const VarList> vars, MonomialOrder order, std::vector<Polynomial> elements)
    : vars_(std::move(vars)), order_(order), elements_(std::move(elements)) {
  auto data = std::make_shared<ReductionData>();
  for (const auto& e : elements_) {
    Work w = to_work(e, order_);
    leads_.push_back(w.back().mono);
    data->basis.push_back(std::move(w));
  }
  reduction_ = std::move(data);
}

bool GroebnerBasis::is_unit() const noexcept {
  return elements_.size() == 1 && elements_.front().is_constant() && !elements_.front().is_zero();
}

Polynomial GroebnerBasis::reduce(const Polynomial& p) const {
  return to_poly(reduce_full(to_work(p.rebase(vars_), order_), reduction_->basis, order_), vars_);
}

bool GroebnerBasis::is_zero_dimensional() const {
  if (is_unit()) return true;
  for (std::size_t v = 0; v < vars_->size(); ++v) {
    bool found = false;
    for (const auto& m : leads_) {
      bool pure = m[v] > 0;
      for (std::size_t k = 0; k < m.size() && pure; ++k)
        if (k != v && m[k] != 0) pure = false;
      if (pure) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

bool operator==(const GroebnerBasis& a, const GroebnerBasis& b) {
  return a.order_ == b.order_ && a.elements_ == b.elements_;
}

GroebnerBasis groebner_basis(const Ideal& ideal, MonomialOrder order) {
  std::vector<Work> input;
  for (const auto& g : ideal.generators) input.push_back(to_work(g, order));
  std::vector<Work> result = buchberger(std::move(input), order);
  std::vector<Polynomial> elements;
  for (const auto& w : result) elements.push_back(to_poly(w, ideal.vars));
  return GroebnerBasis(ideal.vars, order, std::move(elements));
}

Polynomial divide_exact(const Polynomial& p, const Polynomial& g) {
  if (g.is_zero()) throw ComputationError("division by the zero polynomial");
  const auto order = MonomialOrder::grevlex();
  Work rest = to_work(p, order);
  const Work divisor = to_work(g.rebase(p.shared_vars()), order);
  const Term& lead = divisor.back();
  Polynomial quotient(p.shared_vars(), {});
  while (!rest.empty()) {
    const Term t = rest.back();
    if (!lead.mono.divides(t.mono)) throw ComputationError("polynomial division is not exact");
    const Rational c = t.coeff / lead.coeff;
    const Monomial shift = t.mono / lead.mono;
    quotient.add_term(shift, c);
    rest = sub_mul(rest, c, shift, divisor, order);
  }
  return quotient;
}

Ideal to_ideal(const GroebnerBasis& basis) { return Ideal(basis.elements(), basis.shared_vars()); }

GroebnerBasis intersect(const Ideal& a, const Ideal& b) {
  VarList extended{fresh_name(*a.vars)};
  extended.insert(extended.end(), a.vars->begin(), a.vars->end());
  const auto ext = make_vars(extended);
  const Polynomial t = Polynomial::variable(*ext, 0).rebase(ext);
  const Polynomial one_minus_t = Polynomial(ext, {{Monomial(ext->size()), Rational(1)}}) - t;

  std::vector<Polynomial> gens;
  for (const auto& g : a.generators) gens.push_back(t * g.rebase(ext));
  for (const auto& g : b.generators) gens.push_back(one_minus_t * g.rebase(ext));
  const GroebnerBasis elim = groebner_basis(Ideal(gens, ext), MonomialOrder::eliminate(1));

  std::vector<Polynomial> kept;
  for (std::size_t i = 0; i < elim.elements().size(); ++i)
    if (elim.leading_monomials()[i][0] == 0) kept.push_back(elim.elements()[i].rebase(a.vars));
  return groebner_basis(Ideal(kept, a.vars));
}

GroebnerBasis ideal_quotient(const Ideal& ideal, const Polynomial& g) {
  const auto vars = ideal.vars;
  const GroebnerBasis base = groebner_basis(ideal);
  if (base.contains(g)) return groebner_basis(Ideal({Polynomial::constant(*vars, 1)}, vars));
  const GroebnerBasis meet = intersect(to_ideal(base), Ideal({g}, vars));
  std::vector<Polynomial> gens;
  for (const auto& h : meet.elements()) gens.push_back(divide_exact(h, g.rebase(vars)));
  return groebner_basis(Ideal(gens, vars));
}

GroebnerBasis ideal_quotient(const Ideal& ideal, const Ideal& by) {
  std::optional<GroebnerBasis> acc;
  for (const auto& g : by.generators) {
    if (g.is_zero()) continue;
    GroebnerBasis q = ideal_quotient(ideal, g);
    acc = acc ? intersect(to_ideal(*acc), to_ideal(q)) : q;
  }
  if (!acc) return groebner_basis(Ideal({Polynomial::constant(*ideal.vars, 1)}, ideal.vars));
  return *acc;
}

GroebnerBasis saturate(const Ideal& ideal, const Ideal& by) {
  GroebnerBasis current = groebner_basis(ideal);
  for (int iter = 0; iter < 10000; ++iter) {
    GroebnerBasis next = ideal_quotient(to_ideal(current), by);
    if (next == current) return current;
    current = std::move(next);
  }
  throw ComputationError("saturation did not stabilise");
}

}  // namespace orbires
