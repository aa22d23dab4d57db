#include "orbires/pipeline.hpp"

#include <algorithm>
#include <exception>

#include "orbires/errors.hpp"

namespace orbires {
namespace {

OrbifoldField make_field(const Config& cfg, const WeightedSpace& space) {
  const auto& vars = space.ambient_vars();
  auto parse = [&](const std::string& text, const std::string& what) {
    try {
      return parse_polynomial(text, *vars).rebase(vars);
    } catch (const InputError& e) {
      throw InputError(what + ": " + e.what());
    }
  };
  if (cfg.pencil) return pencil_field(parse(cfg.pencil->first, "pencil f"), parse(cfg.pencil->second, "pencil g"), space);
  std::vector<Polynomial> comps;
  for (std::size_t i = 0; i < cfg.field.size(); ++i)
    comps.push_back(parse(cfg.field[i], "field component " + std::to_string(i)));
  return OrbifoldField::make(std::move(comps), space);
}

bool lex_less(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

void check_point(const Problem& problem, std::span<const Rational> p) {
  const std::size_t want = problem.field.space().weights().size();
  if (p.size() != want)
    throw InputError("point has " + std::to_string(p.size()) + " coordinates, expected " + std::to_string(want));
}

}  // namespace

Problem build_problem(const Config& config, const std::optional<std::string>& invariant) {
  const WeightedSpace space = WeightedSpace::make(config.weights);
  if (space.dimension() < 1) throw InputError("weighted projective space needs at least two weights");
  OrbifoldField field = make_field(config, space);
  const std::size_t n = space.dimension();
  std::vector<InvariantSpec> inv;
  inv.push_back({"C" + std::to_string(n), InvariantPolynomial::top_chern(n)});
  if (n == 2) inv.push_back({"C1^2", InvariantPolynomial::baum_bott()});
  const auto expr = invariant ? invariant : config.invariant;
  if (expr) inv.push_back({"P", InvariantPolynomial::parse(*expr, n)});
  for (const auto& p : config.points) {
    if (p.size() != space.weights().size())
      throw InputError("point has " + std::to_string(p.size()) + " coordinates, expected " +
                       std::to_string(space.weights().size()));
    cover_point(space, p);
  }
  return Problem{config, std::move(field), std::move(inv)};
}

PointRecord evaluate_point(const Problem& problem, std::span<const Rational> point, Exec exec) {
  check_point(problem, point);
  PointRecord rec;
  rec.point.assign(point.begin(), point.end());
  const CoverPoint cp = cover_point(problem.field.space(), point);
  rec.chart = cp.chart;
  rec.cover = cp.coords;
  ResidueOptions opts;
  opts.exec = exec;
  for (const auto& spec : problem.invariants) {
    try {
      const ResidueResult r = orbifold_index(problem.field, point, spec.poly, opts);
      rec.group_order = r.group_order;
      rec.multiplicity = r.multiplicity;
      rec.method = r.method;
      rec.values.push_back(r.value);
    } catch (const NotAZeroError& e) {
      rec.is_zero = false;
      rec.section_values = e.values();
      rec.values.clear();
      rec.group_order = cp.is_vertex ? problem.field.space().weight(cp.chart) : 1;
      break;
    }
  }
  return rec;
}

VerificationReport run_verification(const Problem& problem, Mode mode, Exec exec) {
  const WeightedSpace& space = problem.field.space();
  VerificationReport rep;
  rep.mode = mode;
  rep.weights = space.weights();
  rep.degree = problem.field.degree();
  rep.invariants = problem.invariants;
  rep.config_hash = problem.config.hash;
  rep.seed = problem.config.oracle.seed;

  std::vector<Rational> totals(problem.invariants.size(), Rational(0));
  if (mode == Mode::kPoints) {
    if (problem.config.points.empty()) throw InputError("point mode needs at least one [points] entry");
    std::vector<std::vector<Rational>> pts = problem.config.points;
    std::sort(pts.begin(), pts.end(), lex_less);
    // the same projective point listed twice would be counted twice
    std::vector<std::pair<std::size_t, std::vector<Rational>>> covers;
    for (const auto& p : pts) {
      auto cp = cover_point(space, p);
      for (const auto& c : covers)
        if (c.first == cp.chart && c.second == cp.coords) throw InputError("a point is listed twice");
      covers.emplace_back(cp.chart, std::move(cp.coords));
    }

    rep.points.resize(pts.size());
    std::vector<std::exception_ptr> errors(pts.size());
    const auto body = [&](std::size_t i) {
      try {
        rep.points[i] = evaluate_point(problem, pts[i], Exec::kSerial);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    };
    if (exec == Exec::kParallel) {
      const auto n = static_cast<std::int64_t>(pts.size());
#pragma omp parallel for schedule(dynamic, 1)
      for (std::int64_t i = 0; i < n; ++i) body(static_cast<std::size_t>(i));
    } else {
      for (std::size_t i = 0; i < pts.size(); ++i) body(i);
    }
    for (const auto& e : errors)
      if (e) std::rethrow_exception(e);
    for (const auto& rec : rep.points)
      if (rec.is_zero)
        for (std::size_t k = 0; k < totals.size(); ++k) totals[k] += rec.values[k];
  } else {
    std::vector<InvariantPolynomial> polys;
    for (const auto& s : problem.invariants) polys.push_back(s.poly);
    ResidueOptions opts;
    opts.exec = exec;
    GlobalSum g = global_orbifold_sum(problem.field, polys, opts);
    rep.charts = std::move(g.charts);
    totals = std::move(g.totals);
  }

  rep.pass = true;
  for (std::size_t k = 0; k < totals.size(); ++k) {
    TotalRecord t;
    t.label = problem.invariants[k].label;
    t.total = totals[k];
    t.expected = chern_number(problem.invariants[k].poly, rep.weights, rep.degree);
    t.pass = t.total == t.expected;
    rep.pass = rep.pass && t.pass;
    rep.totals.push_back(std::move(t));
  }
  if (chern_number(problem.invariants[0].poly, rep.weights, rep.degree) != index_sum_rhs(rep.weights, rep.degree))
    throw ComputationError("closed forms disagree: chern_number(C_n) != index_sum_rhs");
  if (space.dimension() == 2 &&
      chern_number(problem.invariants[1].poly, rep.weights, rep.degree) != bb_sum_rhs(rep.weights, rep.degree))
    throw ComputationError("closed forms disagree: chern_number(C_1^2) != bb_sum_rhs");
  return rep;
}

std::vector<OracleRecord> run_oracle(const Problem& problem, std::span<const std::vector<Rational>> points,
                                     const OracleConfig& settings, Exec exec) {
  if (points.empty()) throw InputError("the oracle needs at least one point");
  std::vector<std::vector<Rational>> pts(points.begin(), points.end());
  std::sort(pts.begin(), pts.end(), lex_less);
  OracleSettings os;
  os.epsilon = settings.epsilon;
  os.radius = settings.radius;
  os.newton_tolerance = settings.newton_tolerance;
  os.starts = settings.starts;
  os.seed = settings.seed;
  os.exec = exec;
  if (!(settings.tolerance > 0)) throw InputError("oracle tolerance must be positive");

  std::vector<OracleRecord> out;
  for (const auto& p : pts) {
    check_point(problem, p);
    const CoverPoint cp = cover_point(problem.field.space(), p);
    const ChartLift lift = lift_to_chart(problem.field, cp.chart);
    for (const auto& spec : problem.invariants) {
      OracleRecord r;
      r.point = p;
      r.chart = cp.chart;
      r.label = spec.label;
      const Polynomial num = invariant_numerator(lift.components, spec.poly);
      ResidueOptions ro;
      ro.exec = exec;
      ResidueResult exact;
      try {
        exact = local_residue(lift.components, num, cp.coords, ro);
      } catch (const NotAZeroError& e) {
        throw NotAZeroError("not a zero of the section", e.values());
      }
      r.exact = exact.value;
      r.multiplicity = exact.multiplicity;
      const NumericResidue nr = numeric_local_residue(lift.components, num, cp.coords, os);
      r.numeric = nr.value;
      r.error_estimate = nr.error_estimate;
      r.zeros_found = nr.zero_count();
      r.reliable = nr.reliable;
      r.pass = r.reliable && static_cast<std::int64_t>(r.zeros_found) == r.multiplicity &&
               std::abs(r.numeric - std::complex<double>(r.exact.get_d(), 0.0)) <= settings.tolerance;
      out.push_back(std::move(r));
    }
  }
  return out;
}

}  // namespace orbires
