#include "orbires/report.hpp"

#include <cinttypes>
#include <cstdio>
#include <sstream>

namespace orbires {
namespace {

std::string num(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

std::string compact(std::string s) {
  std::erase(s, ' ');
  return s;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string join_ints(std::span<const std::int64_t> v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

std::string header(const char* command, std::uint64_t config_hash, std::uint64_t seed, bool machine) {
  std::ostringstream o;
  if (machine)
    o << "record=header command=" << command << " engine=" << kEngineVersion << " config_hash=" << hex_hash(config_hash)
      << " seed=" << seed << "\n";
  else
    o << "orbires " << kEngineVersion << " " << command << " (config " << hex_hash(config_hash) << ", seed " << seed
      << ")\n";
  return o.str();
}

std::string invariant_records(std::span<const InvariantSpec> inv, bool machine) {
  std::ostringstream o;
  for (const auto& s : inv) {
    if (machine) o << "record=invariant label=" << s.label << " expr=" << compact(s.poly.to_string()) << "\n";
    else if (compact(s.poly.to_string()) != s.label) o << "  invariant " << s.label << " = " << s.poly.to_string() << "\n";
  }
  return o.str();
}

std::string point_line(const PointRecord& rec, std::span<const InvariantSpec> inv, bool machine) {
  std::ostringstream o;
  if (machine) {
    o << "record=point point=" << join_rationals(rec.point) << " chart=" << rec.chart
      << " cover=" << join_rationals(rec.cover) << " group_order=" << rec.group_order << " zero=" << yes_no(rec.is_zero);
    if (rec.is_zero) {
      o << " multiplicity=" << rec.multiplicity << " method=" << to_string(rec.method);
      for (std::size_t k = 0; k < rec.values.size(); ++k) o << " " << inv[k].label << "=" << to_string(rec.values[k]);
    } else {
      o << " values=" << join_rationals(rec.section_values);
    }
    o << "\n";
    return o.str();
  }
  o << "  [" << join_rationals(rec.point) << "]  chart " << rec.chart << ", cover (" << join_rationals(rec.cover)
    << "), #G = " << rec.group_order;
  if (!rec.is_zero) {
    o << ": not a zero of the section (lifted field = (" << join_rationals(rec.section_values) << "))\n";
    return o.str();
  }
  o << ", mu = " << rec.multiplicity << " (" << to_string(rec.method) << ")\n";
  for (std::size_t k = 0; k < rec.values.size(); ++k)
    o << "      " << inv[k].label << " index = " << to_string(rec.values[k]) << "\n";
  return o.str();
}

}  // namespace

std::string join_rationals(std::span<const Rational> v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + to_string(v[i]);
  return s;
}

std::string hex_hash(std::uint64_t h) {
  char buf[24];
  std::snprintf(buf, sizeof buf, "%016" PRIx64, h);
  return buf;
}

std::string render_check(const Problem& problem, bool machine) {
  const auto& cfg = problem.config;
  const auto& space = problem.field.space();
  std::ostringstream o;
  o << header("check", cfg.hash, cfg.oracle.seed, machine);
  std::string labels;
  for (std::size_t i = 0; i < problem.invariants.size(); ++i) labels += (i ? "," : "") + problem.invariants[i].label;
  if (machine) {
    o << "record=check status=ok weights=" << join_ints(space.weights()) << " n=" << space.dimension()
      << " degree=" << problem.field.degree() << " source=" << (cfg.pencil ? "pencil" : "field")
      << " points=" << cfg.points.size() << " mode=" << to_string(cfg.effective_mode()) << " invariants=" << labels
      << " existence_bound=" << yes_no(problem.field.satisfies_existence_bound()) << "\n";
    o << invariant_records(problem.invariants, true);
    return o.str();
  }
  o << "config ok\n"
    << "  P(" << join_ints(space.weights()) << "), n = " << space.dimension() << ", degree " << problem.field.degree()
    << (cfg.pencil ? " (pencil)" : "") << "\n";
  for (std::size_t i = 0; i < problem.field.components().size(); ++i)
    o << "  xi" << i << " = " << problem.field.component(i).to_string() << "\n";
  o << "  " << cfg.points.size() << " point(s), mode " << to_string(cfg.effective_mode()) << "\n";
  if (!problem.field.satisfies_existence_bound())
    o << "  warning: degree is at or below 1 - max(w_i + w_j); no such foliations exist\n";
  o << invariant_records(problem.invariants, false);
  return o.str();
}

std::string render_index(const Problem& problem, const PointRecord& rec, bool machine) {
  std::ostringstream o;
  o << header("index", problem.config.hash, problem.config.oracle.seed, machine);
  o << point_line(rec, problem.invariants, machine);
  return o.str();
}

std::string render_verification(const VerificationReport& rep, bool machine) {
  std::ostringstream o;
  o << header("verify", rep.config_hash, rep.seed, machine);
  if (machine) {
    o << "record=config mode=" << to_string(rep.mode) << " weights=" << join_ints(rep.weights)
      << " degree=" << rep.degree << "\n";
  } else {
    o << "P(" << join_ints(rep.weights) << "), degree " << rep.degree << ", mode " << to_string(rep.mode) << "\n";
  }
  o << invariant_records(rep.invariants, machine);
  for (const auto& p : rep.points) o << point_line(p, rep.invariants, machine);
  for (const auto& c : rep.charts) {
    if (machine) {
      o << "record=chart chart=" << c.chart << " group_order=" << c.group_order << " cover_zeros=" << c.cover_zeros;
      for (std::size_t k = 0; k < c.residue_sums.size(); ++k)
        o << " " << rep.invariants[k].label << "=" << to_string(c.residue_sums[k]);
      o << "\n";
    } else {
      o << "  chart " << c.chart << " (#G = " << c.group_order << "): " << c.cover_zeros << " new cover zero(s)";
      for (std::size_t k = 0; k < c.residue_sums.size(); ++k)
        o << ", " << rep.invariants[k].label << " residue sum " << to_string(c.residue_sums[k]);
      o << "\n";
    }
  }
  for (const auto& t : rep.totals) {
    if (machine)
      o << "record=total invariant=" << t.label << " value=" << to_string(t.total) << " expected=" << to_string(t.expected)
        << " verdict=" << (t.pass ? "pass" : "fail") << "\n";
    else
      o << "  total " << t.label << " = " << to_string(t.total) << ", expected " << to_string(t.expected) << "  "
        << (t.pass ? "PASS" : "FAIL") << "\n";
  }
  if (machine) o << "record=verdict status=" << (rep.pass ? "pass" : "fail") << "\n";
  else o << (rep.pass ? "all identities hold\n" : "identity violated\n");
  return o.str();
}

std::string render_resolution(const ResolutionReport& r, std::uint64_t config_hash, bool machine) {
  std::ostringstream o;
  o << header("hirzebruch", config_hash, 0, machine);
  const std::string literal =
      r.literal_holds ? (*r.literal_holds ? "holds" : "fails") : std::string("unavailable");
  if (machine) {
    o << "record=resolution k=" << r.k << " degree=" << r.degree << " vertex_zero=" << yes_no(r.vertex_is_zero)
      << " A=" << to_string(r.a) << " B=" << (r.b ? to_string(*r.b) : std::string("unavailable"))
      << " C=" << to_string(r.c) << " implied_divisor_sum=" << to_string(r.implied_sum)
      << " literal_tangent_field_reading=" << literal << " formal_integral=" << to_string(r.formal_integral)
      << " orbifold_total=" << to_string(r.orbifold_total) << " away_sum=" << to_string(r.away_sum)
      << " interpretation_free=" << (r.interpretation_free_holds ? "holds" : "fails") << "\n";
    for (const auto& z : r.exceptional) {
      o << "record=exceptional chart=" << z.chart << " x=" << (z.x ? to_string(*z.x) : std::string("irrational"))
        << " factor=" << compact(z.factor.to_string()) << " root_count=" << z.root_count
        << " root_multiplicity=" << z.root_multiplicity
        << " index=" << (z.index ? to_string(*z.index) : std::string("unavailable"))
        << " numeric_only=" << yes_no(z.numeric_only) << "\n";
    }
    if (!r.b_note.empty()) o << "record=note text=" << compact(r.b_note) << "\n";
    o << "record=verdict status=" << (r.interpretation_free_holds ? "pass" : "fail") << "\n";
    return o.str();
  }
  o << "resolution of the vertex of P(1,1," << r.k << "), degree " << r.degree << "\n"
    << "  A  orbifold index at e2          " << to_string(r.a) << (r.vertex_is_zero ? "" : " (e2 is not a zero)") << "\n"
    << "  B  tangent-field indices on D    " << (r.b ? to_string(*r.b) : "unavailable") << "\n"
    << "  C  local correction              " << to_string(r.c) << "\n"
    << "  literal reading B - A = C        " << literal << "\n"
    << "  divisor sum required (A + C)     " << to_string(r.implied_sum) << "\n"
    << "  formal integral (d^2+kd+k)k      " << to_string(r.formal_integral) << "\n"
    << "  orbifold total (all zeros)       " << to_string(r.orbifold_total) << "\n"
    << "  interpretation-free identity     " << (r.interpretation_free_holds ? "holds" : "FAILS") << "\n";
  for (const auto& z : r.exceptional) {
    o << "    zero on D, chart " << z.chart << ": ";
    if (z.x) o << "x = " << to_string(*z.x);
    else o << z.root_count << " non-rational root(s) of " << z.factor.to_string();
    o << ", root multiplicity " << z.root_multiplicity << ", index "
      << (z.index ? to_string(*z.index) : std::string("unavailable")) << "\n";
  }
  if (!r.b_note.empty()) o << "  note: " << r.b_note << "\n";
  o << "  the two readings of the local identity differ when B - A != C; only the global identity is a verdict\n";
  return o.str();
}

std::string render_oracle(std::span<const OracleRecord> recs, const OracleConfig& s, std::uint64_t config_hash,
                          bool machine) {
  std::ostringstream o;
  o << header("oracle", config_hash, s.seed, machine);
  bool all = true;
  for (const auto& r : recs) {
    all = all && r.pass;
    if (machine) {
      o << "record=oracle point=" << join_rationals(r.point) << " chart=" << r.chart << " invariant=" << r.label
        << " exact=" << to_string(r.exact) << " numeric_re=" << num(r.numeric.real())
        << " numeric_im=" << num(r.numeric.imag()) << " error_estimate=" << num(r.error_estimate)
        << " zeros=" << r.zeros_found << " multiplicity=" << r.multiplicity << " reliable=" << yes_no(r.reliable)
        << " verdict=" << (r.pass ? "pass" : "fail") << "\n";
    } else {
      o << "  [" << join_rationals(r.point) << "] " << r.label << ": exact " << to_string(r.exact) << ", numeric "
        << num(r.numeric.real()) << (r.numeric.imag() < 0 ? " - " : " + ") << num(std::abs(r.numeric.imag()))
        << "i (+- " << num(r.error_estimate) << "), " << r.zeros_found << " of " << r.multiplicity << " zeros"
        << (r.reliable ? "" : ", unstable count") << "  " << (r.pass ? "PASS" : "FAIL") << "\n";
    }
  }
  if (machine) o << "record=verdict status=" << (all ? "pass" : "fail") << "\n";
  else o << "  (cover residues before division by the group order; tolerance " << num(s.tolerance) << ")\n";
  return o.str();
}

}  // namespace orbires
