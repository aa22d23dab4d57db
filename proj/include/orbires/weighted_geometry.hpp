#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "orbires/polynomial.hpp"

namespace orbires {

/// Weighted projective space P^n_w with pairwise coprime weights. Its only
/// singular points are the vertices e_i with w_i > 1, each with local group
/// of order w_i.
class WeightedSpace {
 public:
  /// Validates the weights. Throws InputError on an empty list, a
  /// non-positive weight, or a pair of weights sharing a factor.
  static WeightedSpace make(std::vector<std::int64_t> weights);

  std::size_t dimension() const noexcept { return weights_.size() - 1; }
  const std::vector<std::int64_t>& weights() const noexcept { return weights_; }
  std::int64_t weight(std::size_t i) const { return weights_.at(i); }
  std::int64_t total_weight() const noexcept;
  std::int64_t weight_product() const noexcept;
  const std::vector<std::size_t>& singular_vertices() const noexcept { return singular_; }
  bool is_singular_vertex(std::size_t i) const { return weights_.at(i) > 1; }

  /// Homogeneous coordinates z0..zn.
  const std::shared_ptr<const VarList>& ambient_vars() const noexcept { return ambient_; }
  /// Coordinates u_j (j != chart) of the smoothing cover of chart `chart`.
  std::shared_ptr<const VarList> chart_vars(std::size_t chart) const;

  /// max over i != j of w_i + w_j (0 when n = 0).
  std::int64_t max_pair_weight() const noexcept;

  friend bool operator==(const WeightedSpace& a, const WeightedSpace& b) { return a.weights_ == b.weights_; }

 private:
  explicit WeightedSpace(std::vector<std::int64_t> weights);

  std::vector<std::int64_t> weights_;
  std::vector<std::size_t> singular_;
  std::shared_ptr<const VarList> ambient_;
};

/// Homogeneous representative (P_0, ..., P_n) of a section of
/// T P^n_w (x) O(d - 1): each nonzero P_i is quasi-homogeneous of weighted
/// degree d + w_i - 1.
class OrbifoldField {
 public:
  /// Infers d. Throws InputError when a component is not quasi-homogeneous,
  /// the implied degrees disagree, or every component is zero.
  static OrbifoldField make(std::vector<Polynomial> components, const WeightedSpace& space);

  const std::vector<Polynomial>& components() const noexcept { return components_; }
  const Polynomial& component(std::size_t i) const { return components_.at(i); }
  std::int64_t degree() const noexcept { return degree_; }
  const WeightedSpace& space() const noexcept { return space_; }

  /// d > 1 - max_{i != j}(w_i + w_j); sections of this degree exist.
  bool satisfies_existence_bound() const noexcept;

 private:
  OrbifoldField(std::vector<Polynomial> components, std::int64_t degree, WeightedSpace space)
      : components_(std::move(components)), degree_(degree), space_(std::move(space)) {}

  std::vector<Polynomial> components_;
  std::int64_t degree_;
  WeightedSpace space_;
};

/// The field lifted to the smoothing cover C^n of the chart {z_i != 0}, on
/// which the w_i-th roots of unity act by u_j -> zeta^{w_j} u_j.
struct ChartLift {
  std::size_t chart = 0;
  std::shared_ptr<const VarList> vars;       // u_j, j != chart, in increasing j
  std::vector<std::size_t> coordinate;       // coordinate[k] = ambient index of vars[k]
  std::vector<Polynomial> components;        // lifted component for vars[k]
  std::int64_t group_order = 1;              // w_chart

  friend bool operator==(const ChartLift& a, const ChartLift& b) {
    return a.chart == b.chart && *a.vars == *b.vars && a.coordinate == b.coordinate &&
           a.components == b.components && a.group_order == b.group_order;
  }
};

/// xi_j(u) = P_j(u, z_i = 1) - (w_j / w_i) u_j P_i(u, z_i = 1) for j != i.
/// Every monomial u^a of xi_j satisfies sum_k w_k a_k = w_j + d - 1 (mod w_i);
/// a violation throws ComputationError.
ChartLift lift_to_chart(const OrbifoldField& field, std::size_t chart);

/// The weighted radial field R_w = (w_0 z_0, ..., w_n z_n).
std::vector<Polynomial> radial_field(const WeightedSpace& space);

/// xi + g R_w; g must be zero or quasi-homogeneous of degree d - 1.
OrbifoldField radial_gauge(const OrbifoldField& field, const Polynomial& g);

/// Cross product of the gradients of two quasi-homogeneous polynomials on a
/// weighted projective plane; tangent to the pencil they span.
OrbifoldField pencil_field(const Polynomial& f, const Polynomial& g, const WeightedSpace& space);

}  // namespace orbires
