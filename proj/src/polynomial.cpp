#include "orbires/polynomial.hpp"

#include <cassert>
#include <sstream>
#include <unordered_map>

#include "orbires/errors.hpp"

namespace orbires {

namespace {

const std::shared_ptr<const VarList>& empty_vars() {
  static const auto kEmpty = std::make_shared<const VarList>();
  return kEmpty;
}

}  // namespace

std::shared_ptr<const VarList> make_vars(VarList vars) {
  return std::make_shared<const VarList>(std::move(vars));
}

bool same_vars(const Polynomial& a, const Polynomial& b) {
  return a.shared_vars() == b.shared_vars() || a.vars() == b.vars();
}

Polynomial::Polynomial() : vars_(empty_vars()) {}

Polynomial::Polynomial(VarList vars) : vars_(make_vars(std::move(vars))) {}

Polynomial::Polynomial(std::shared_ptr<const VarList> vars, TermMap terms)
    : vars_(std::move(vars)), terms_(std::move(terms)) {
  for (auto it = terms_.begin(); it != terms_.end();) {
    assert(it->first.size() == vars_->size());
    it = it->second == 0 ? terms_.erase(it) : std::next(it);
  }
}

Polynomial Polynomial::constant(const VarList& vars, const Rational& c) {
  return term(vars, Monomial(vars.size()), c);
}

Polynomial Polynomial::variable(const VarList& vars, std::size_t index) {
  if (index >= vars.size()) throw InputError("variable index out of range");
  Monomial m(vars.size());
  m[index] = 1;
  return term(vars, m, 1);
}

Polynomial Polynomial::variable(const VarList& vars, std::string_view name) {
  for (std::size_t i = 0; i < vars.size(); ++i)
    if (vars[i] == name) return variable(vars, i);
  throw InputError("unknown variable '" + std::string(name) + "'");
}

Polynomial Polynomial::term(const VarList& vars, const Monomial& m, const Rational& c) {
  Polynomial p(vars);
  p.add_term(m, c);
  return p;
}

std::size_t Polynomial::var_index(std::string_view name) const {
  for (std::size_t i = 0; i < vars_->size(); ++i)
    if ((*vars_)[i] == name) return i;
  throw InputError("unknown variable '" + std::string(name) + "'");
}

bool Polynomial::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational Polynomial::constant_term() const { return coefficient(Monomial(nvars())); }

const Monomial& Polynomial::leading_monomial() const {
  if (terms_.empty()) throw ComputationError("leading monomial of the zero polynomial");
  return terms_.begin()->first;
}

const Rational& Polynomial::leading_coefficient() const {
  if (terms_.empty()) throw ComputationError("leading coefficient of the zero polynomial");
  return terms_.begin()->second;
}

std::int64_t Polynomial::total_degree() const noexcept {
  std::int64_t d = -1;
  for (const auto& [m, c] : terms_) d = std::max<std::int64_t>(d, static_cast<std::int64_t>(m.degree()));
  return d;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  assert(m.size() == vars_->size());
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void Polynomial::check_compatible(const Polynomial& other) const {
  if (!same_vars(*this, other)) throw InputError("polynomials live on different variable sequences");
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  check_compatible(rhs);
  for (const auto& [m, c] : rhs.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  check_compatible(rhs);
  for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_compatible(b);
  std::unordered_map<Monomial, Rational, MonomialHash> acc;
  acc.reserve(a.size() * b.size());
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) acc[ma * mb] += ca * cb;
  Polynomial::TermMap terms;
  for (auto& [m, c] : acc)
    if (c != 0) terms.emplace(m, std::move(c));
  return Polynomial(a.vars_, std::move(terms));
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) { return *this = *this * rhs; }

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coeff] : terms_) coeff *= c;
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial r(*this);
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

Polynomial Polynomial::pow(unsigned exponent) const {
  Polynomial result = constant(vars(), 1);
  result.vars_ = vars_;
  Polynomial base(*this);
  while (exponent > 0) {
    if (exponent & 1u) result *= base;
    exponent >>= 1u;
    if (exponent > 0) base *= base;
  }
  return result;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  return same_vars(a, b) && a.terms_ == b.terms_;
}

Polynomial Polynomial::differentiate(std::size_t var) const {
  if (var >= nvars()) throw InputError("differentiation variable out of range");
  TermMap out;
  for (const auto& [m, c] : terms_) {
    if (m[var] == 0) continue;
    Monomial d(m);
    d[var] -= 1;
    out.emplace(std::move(d), c * m[var]);
  }
  return Polynomial(vars_, std::move(out));
}

Polynomial Polynomial::differentiate(std::string_view var) const { return differentiate(var_index(var)); }

Rational Polynomial::evaluate(std::span<const Rational> point) const {
  if (point.size() != nvars()) throw InputError("evaluation point has the wrong length");
  Rational total = 0;
  for (const auto& [m, c] : terms_) {
    Rational value = c;
    for (std::size_t i = 0; i < m.size(); ++i)
      if (m[i] != 0) value *= orbires::pow(point[i], m[i]);
    total += value;
  }
  return total;
}

Polynomial Polynomial::substitute(std::span<const Polynomial> images) const {
  if (images.size() != nvars()) throw InputError("substitution needs one image per variable");
  if (images.empty()) return *this;
  const auto& target = images.front().shared_vars();
  for (const auto& img : images)
    if (!same_vars(img, images.front())) throw InputError("substitution images on different variables");
  std::vector<std::vector<Polynomial>> powers(images.size());
  auto power_of = [&](std::size_t var, std::uint32_t e) -> const Polynomial& {
    auto& cache = powers[var];
    if (cache.empty()) cache.push_back(Polynomial(target, {{Monomial(target->size()), Rational(1)}}));
    while (cache.size() <= e) cache.push_back(cache.back() * images[var]);
    return cache[e];
  };
  Polynomial result(target, {});
  for (const auto& [m, c] : terms_) {
    Polynomial t(target, {{Monomial(target->size()), c}});
    for (std::size_t i = 0; i < m.size(); ++i)
      if (m[i] != 0) t *= power_of(i, m[i]);
    result += t;
  }
  return result;
}

Polynomial Polynomial::rebase(const std::shared_ptr<const VarList>& target) const {
  std::vector<std::size_t> where(nvars(), target->size());
  for (std::size_t i = 0; i < nvars(); ++i)
    for (std::size_t j = 0; j < target->size(); ++j)
      if ((*vars_)[i] == (*target)[j]) where[i] = j;
  TermMap out;
  for (const auto& [m, c] : terms_) {
    Monomial r(target->size());
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (where[i] == target->size())
        throw InputError("variable '" + (*vars_)[i] + "' is not in the target variable list");
      r[where[i]] += m[i];
    }
    out.emplace(std::move(r), c);
  }
  return Polynomial(target, std::move(out));
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const bool negative = c < 0;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    const Rational mag = abs(c);
    std::ostringstream mono;
    bool any = false;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (any) mono << '*';
      mono << (*vars_)[i];
      if (m[i] > 1) mono << '^' << m[i];
      any = true;
    }
    if (!any) {
      os << mag.get_str();
    } else if (mag == 1) {
      os << mono.str();
    } else {
      os << mag.get_str() << '*' << mono.str();
    }
  }
  return os.str();
}

std::int64_t QuasiDegree::value() const {
  if (kind_ != Kind::kUniform) throw ComputationError("polynomial has no single weighted degree");
  return value_;
}

QuasiDegree quasi_degree(const Polynomial& p, std::span<const std::int64_t> weights) {
  if (weights.size() != p.nvars()) throw InputError("weight vector length differs from variable count");
  if (p.is_zero()) return QuasiDegree::any();
  std::optional<std::int64_t> common;
  for (const auto& [m, c] : p.terms()) {
    std::int64_t d = 0;
    for (std::size_t i = 0; i < m.size(); ++i) d += weights[i] * static_cast<std::int64_t>(m[i]);
    if (common && *common != d) return QuasiDegree::mixed();
    common = d;
  }
  return QuasiDegree::of(*common);
}

}  // namespace orbires
