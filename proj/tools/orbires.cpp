// orbires: residue-side verification of Chern number identities for
// foliations on weighted projective spaces.
//
// Exit codes: 0 pass, 1 identity violation, 2 input error, 3 computation
// failure.

#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "orbires/config.hpp"
#include "orbires/errors.hpp"
#include "orbires/hirzebruch.hpp"
#include "orbires/pipeline.hpp"
#include "orbires/report.hpp"

namespace {

constexpr int kPass = 0;
constexpr int kViolation = 1;
constexpr int kInputError = 2;
constexpr int kComputationError = 3;

struct Options {
  std::string config;
  std::optional<std::string> mode;
  std::optional<std::string> invariant;
  std::optional<std::uint64_t> seed;
  std::optional<double> tolerance;
  std::optional<std::string> point;
  bool machine = false;
};

orbires::Problem load(const Options& opt) {
  orbires::Config cfg = orbires::load_config(opt.config);
  if (opt.seed) cfg.oracle.seed = *opt.seed;
  if (opt.tolerance) cfg.oracle.tolerance = *opt.tolerance;
  if (opt.mode) cfg.mode = orbires::parse_mode(*opt.mode);
  return orbires::build_problem(cfg, opt.invariant);
}

std::vector<orbires::Rational> single_point(const Options& opt, const orbires::Problem& problem) {
  if (opt.point) return orbires::parse_rational_list(*opt.point);
  if (problem.config.points.size() != 1)
    throw orbires::InputError("index needs --point or exactly one [points] entry");
  return problem.config.points.front();
}

int run(const std::string& command, const Options& opt) {
  const orbires::Problem problem = load(opt);
  if (command == "check") {
    std::cout << orbires::render_check(problem, opt.machine);
    return kPass;
  }
  if (command == "index") {
    const auto rec = orbires::evaluate_point(problem, single_point(opt, problem));
    std::cout << orbires::render_index(problem, rec, opt.machine);
    return kPass;
  }
  if (command == "verify") {
    const auto rep = orbires::run_verification(problem, problem.config.effective_mode());
    std::cout << orbires::render_verification(rep, opt.machine);
    return rep.pass ? kPass : kViolation;
  }
  if (command == "hirzebruch") {
    const auto rep = orbires::verify_resolution_identity(problem.field);
    std::cout << orbires::render_resolution(rep, problem.config.hash, opt.machine);
    return rep.interpretation_free_holds ? kPass : kViolation;
  }
  // oracle
  std::vector<std::vector<orbires::Rational>> pts = problem.config.points;
  if (opt.point) pts = {orbires::parse_rational_list(*opt.point)};
  const auto recs = orbires::run_oracle(problem, pts, problem.config.oracle);
  std::cout << orbires::render_oracle(recs, problem.config.oracle, problem.config.hash, opt.machine);
  for (const auto& r : recs)
    if (!r.pass) return kViolation;
  return kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Residue-side verification of Chern number identities on weighted projective spaces"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", opt.config, "Config file")->required();
    sub->add_flag("--machine", opt.machine, "Machine-readable key=value output");
    sub->add_option("--invariant", opt.invariant, "Invariant polynomial in C1..Cn");
    sub->add_option("--seed", opt.seed, "Oracle seed");
  };
  auto* check = app.add_subcommand("check", "Validate a config");
  auto* index = app.add_subcommand("index", "Orbifold indices at one point");
  auto* verify = app.add_subcommand("verify", "Totals against the closed forms");
  auto* hirz = app.add_subcommand("hirzebruch", "Resolution diagnostics on P(1,1,k)");
  auto* oracle = app.add_subcommand("oracle", "Numeric cross-check of the exact residues");
  for (auto* sub : {check, index, verify, hirz, oracle}) add_common(sub);
  for (auto* sub : {verify, check}) sub->add_option("--mode", opt.mode, "points or all-zeros");
  for (auto* sub : {index, oracle}) sub->add_option("--point", opt.point, "Homogeneous coordinates, e.g. 0,0,1");
  oracle->add_option("--tolerance", opt.tolerance, "Accepted |numeric - exact|");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kInputError;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    return run(command, opt);
  } catch (const orbires::InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const orbires::NotAZeroError& e) {
    std::cerr << "computation error: " << e.what() << " (values " << orbires::join_rationals(e.values()) << ")\n";
    return kComputationError;
  } catch (const orbires::ComputationError& e) {
    std::cerr << "computation error: " << e.what() << "\n";
    return kComputationError;
  }
}
