#include "orbires/weighted_geometry.hpp"

#include <numeric>
#include <optional>

#include "orbires/errors.hpp"

namespace orbires {

WeightedSpace::WeightedSpace(std::vector<std::int64_t> weights) : weights_(std::move(weights)) {
  VarList names;
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    names.push_back("z" + std::to_string(i));
    if (weights_[i] > 1) singular_.push_back(i);
  }
  ambient_ = make_vars(std::move(names));
}

WeightedSpace WeightedSpace::make(std::vector<std::int64_t> weights) {
  if (weights.empty()) throw InputError("weight list is empty");
  for (auto w : weights)
    if (w <= 0) throw InputError("weights must be positive integers");
  for (std::size_t i = 0; i < weights.size(); ++i)
    for (std::size_t j = i + 1; j < weights.size(); ++j)
      if (std::gcd(weights[i], weights[j]) != 1)
        throw InputError("weights w" + std::to_string(i) + "=" + std::to_string(weights[i]) + " and w" +
                         std::to_string(j) + "=" + std::to_string(weights[j]) + " are not coprime");
  return WeightedSpace(std::move(weights));
}

std::int64_t WeightedSpace::total_weight() const noexcept {
  return std::accumulate(weights_.begin(), weights_.end(), std::int64_t{0});
}

std::int64_t WeightedSpace::weight_product() const noexcept {
  return std::accumulate(weights_.begin(), weights_.end(), std::int64_t{1}, std::multiplies<>());
}

std::int64_t WeightedSpace::max_pair_weight() const noexcept {
  std::int64_t best = 0;
  for (std::size_t i = 0; i < weights_.size(); ++i)
    for (std::size_t j = i + 1; j < weights_.size(); ++j) best = std::max(best, weights_[i] + weights_[j]);
  return best;
}

std::shared_ptr<const VarList> WeightedSpace::chart_vars(std::size_t chart) const {
  if (chart >= weights_.size()) throw InputError("chart index out of range");
  VarList names;
  for (std::size_t j = 0; j < weights_.size(); ++j)
    if (j != chart) names.push_back("u" + std::to_string(j));
  return make_vars(std::move(names));
}

OrbifoldField OrbifoldField::make(std::vector<Polynomial> components, const WeightedSpace& space) {
  if (components.size() != space.weights().size())
    throw InputError("field needs " + std::to_string(space.weights().size()) + " components, got " +
                     std::to_string(components.size()));
  std::optional<std::int64_t> degree;
  for (std::size_t i = 0; i < components.size(); ++i) {
    if (!(components[i].vars() == *space.ambient_vars()))
      throw InputError("field component " + std::to_string(i) + " is not over z0..z" +
                       std::to_string(space.dimension()));
    components[i] = components[i].rebase(space.ambient_vars());
    const QuasiDegree qd = quasi_degree(components[i], space.weights());
    if (qd.is_any()) continue;
    if (!qd.exists()) throw InputError("field component " + std::to_string(i) + " is not quasi-homogeneous");
    const std::int64_t implied = qd.value() - space.weight(i) + 1;
    if (degree && *degree != implied)
      throw InputError("field components imply different degrees (" + std::to_string(*degree) + " vs " +
                       std::to_string(implied) + " at component " + std::to_string(i) + ")");
    degree = implied;
  }
  if (!degree) throw InputError("all field components are zero");
  return OrbifoldField(std::move(components), *degree, space);
}

bool OrbifoldField::satisfies_existence_bound() const noexcept {
  return degree_ > 1 - space_.max_pair_weight();
}

ChartLift lift_to_chart(const OrbifoldField& field, std::size_t chart) {
  const WeightedSpace& space = field.space();
  ChartLift lift;
  lift.chart = chart;
  lift.vars = space.chart_vars(chart);
  lift.group_order = space.weight(chart);

  std::vector<Polynomial> images;
  std::size_t k = 0;
  for (std::size_t j = 0; j < space.weights().size(); ++j) {
    if (j == chart) {
      images.push_back(Polynomial(lift.vars, {{Monomial(lift.vars->size()), Rational(1)}}));
    } else {
      Monomial m(lift.vars->size());
      m[k++] = 1;
      images.push_back(Polynomial(lift.vars, {{m, Rational(1)}}));
      lift.coordinate.push_back(j);
    }
  }
  const Polynomial pi = field.component(chart).substitute(images);
  const std::int64_t wi = space.weight(chart);
  for (std::size_t idx = 0; idx < lift.coordinate.size(); ++idx) {
    const std::size_t j = lift.coordinate[idx];
    const Polynomial pj = field.component(j).substitute(images);
    const Rational scale = ratio(space.weight(j), wi);
    lift.components.push_back(pj - scale * (images[j] * pi));
  }

  const std::int64_t target_shift = field.degree() - 1;
  for (std::size_t idx = 0; idx < lift.components.size(); ++idx) {
    const std::int64_t target = space.weight(lift.coordinate[idx]) + target_shift;
    for (const auto& [m, c] : lift.components[idx].terms()) {
      std::int64_t wd = 0;
      for (std::size_t v = 0; v < m.size(); ++v) wd += space.weight(lift.coordinate[v]) * m[v];
      if (((wd - target) % wi + wi) % wi != 0)
        throw ComputationError("lifted component " + lift.vars->at(idx) + " is not equivariant");
    }
  }
  return lift;
}

std::vector<Polynomial> radial_field(const WeightedSpace& space) {
  std::vector<Polynomial> r;
  for (std::size_t i = 0; i < space.weights().size(); ++i) {
    Monomial m(space.weights().size());
    m[i] = 1;
    r.push_back(Polynomial(space.ambient_vars(), {{m, Rational(static_cast<long>(space.weight(i)))}}));
  }
  return r;
}

OrbifoldField radial_gauge(const OrbifoldField& field, const Polynomial& g) {
  const WeightedSpace& space = field.space();
  if (!(g.vars() == *space.ambient_vars())) throw InputError("gauge polynomial is not over the ambient variables");
  const Polynomial gg = g.rebase(space.ambient_vars());
  if (!quasi_degree(gg, space.weights()).compatible_with(field.degree() - 1))
    throw InputError("gauge polynomial must be quasi-homogeneous of degree d - 1 = " +
                     std::to_string(field.degree() - 1));
  const auto radial = radial_field(space);
  std::vector<Polynomial> comps;
  for (std::size_t i = 0; i < radial.size(); ++i) comps.push_back(field.component(i) + gg * radial[i]);
  return OrbifoldField::make(std::move(comps), space);
}

OrbifoldField pencil_field(const Polynomial& f, const Polynomial& g, const WeightedSpace& space) {
  if (space.dimension() != 2) throw InputError("pencil fields are defined on weighted projective planes only");
  const auto& vars = space.ambient_vars();
  if (!(f.vars() == *vars) || !(g.vars() == *vars)) throw InputError("pencil members must be over z0, z1, z2");
  const Polynomial ff = f.rebase(vars);
  const Polynomial gg = g.rebase(vars);
  const QuasiDegree df = quasi_degree(ff, space.weights());
  const QuasiDegree dg = quasi_degree(gg, space.weights());
  if (!df.is_uniform()) throw InputError("pencil member f is not quasi-homogeneous");
  if (!dg.is_uniform()) throw InputError("pencil member g is not quasi-homogeneous");
  std::vector<Polynomial> comps;
  for (std::size_t i = 0; i < 3; ++i) {
    const std::size_t j = (i + 1) % 3;
    const std::size_t k = (i + 2) % 3;
    comps.push_back(ff.differentiate(j) * gg.differentiate(k) - ff.differentiate(k) * gg.differentiate(j));
  }
  return OrbifoldField::make(std::move(comps), space);
}

}  // namespace orbires
