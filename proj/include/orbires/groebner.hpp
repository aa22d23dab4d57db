#pragma once

#include <memory>
#include <vector>

#include "orbires/polynomial.hpp"

namespace orbires {

/// Graded reverse lexicographic order, optionally refined into a block
/// elimination order where the first `block` variables dominate.
class MonomialOrder {
 public:
  static MonomialOrder grevlex() { return MonomialOrder(0); }
  /// Any monomial involving one of the first `count` variables is larger
  /// than every monomial free of them; grevlex inside each block.
  static MonomialOrder eliminate(std::size_t count) { return MonomialOrder(count); }

  int compare(const Monomial& a, const Monomial& b) const noexcept;
  std::size_t block() const noexcept { return block_; }

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

 private:
  explicit MonomialOrder(std::size_t block) : block_(block) {}
  std::size_t block_;
};

/// A polynomial ideal presented by generators over a fixed variable list.
struct Ideal {
  std::vector<Polynomial> generators;
  std::shared_ptr<const VarList> vars;

  Ideal(std::vector<Polynomial> gens, std::shared_ptr<const VarList> v);
};

struct ReductionData;

/// Reduced Groebner basis: monic, inter-reduced, sorted by ascending leading
/// monomial. Deterministic for a given input and order.
class GroebnerBasis {
 public:
  GroebnerBasis(std::shared_ptr<const VarList> vars, MonomialOrder order, std::vector<Polynomial> elements);

  const VarList& vars() const noexcept { return *vars_; }
  const std::shared_ptr<const VarList>& shared_vars() const noexcept { return vars_; }
  const MonomialOrder& order() const noexcept { return order_; }
  const std::vector<Polynomial>& elements() const noexcept { return elements_; }
  const std::vector<Monomial>& leading_monomials() const noexcept { return leads_; }

  bool is_unit() const noexcept;
  bool is_zero_ideal() const noexcept { return elements_.empty(); }
  /// Normal form (fully reduced remainder) of p.
  Polynomial reduce(const Polynomial& p) const;
  bool contains(const Polynomial& p) const { return reduce(p).is_zero(); }
  /// True when some power of every variable is a leading monomial.
  bool is_zero_dimensional() const;

  friend bool operator==(const GroebnerBasis& a, const GroebnerBasis& b);

 private:
  std::shared_ptr<const VarList> vars_;
  MonomialOrder order_;
  std::vector<Polynomial> elements_;
  std::vector<Monomial> leads_;
  std::shared_ptr<const ReductionData> reduction_;
};

/// Buchberger's algorithm with the normal selection strategy, the product
/// and chain criteria, and full inter-reduction.
GroebnerBasis groebner_basis(const Ideal& ideal, MonomialOrder order = MonomialOrder::grevlex());

/// Exact quotient p / g; throws ComputationError when g does not divide p.
Polynomial divide_exact(const Polynomial& p, const Polynomial& g);

/// Ideal of polynomials lying in both ideals (elimination of an auxiliary
/// variable t from t*I + (1 - t)*J). Returns a reduced grevlex basis.
GroebnerBasis intersect(const Ideal& a, const Ideal& b);

/// I : g = { f : f g in I }.
GroebnerBasis ideal_quotient(const Ideal& ideal, const Polynomial& g);
/// I : J, the intersection of I : g over the generators g of J.
GroebnerBasis ideal_quotient(const Ideal& ideal, const Ideal& by);
/// I : J^infinity, by iterating ideal quotients until the basis stabilises.
GroebnerBasis saturate(const Ideal& ideal, const Ideal& by);

Ideal to_ideal(const GroebnerBasis& basis);

}  // namespace orbires
