// Serial reference kernels against their OpenMP counterparts. The second
// argument of each benchmark selects the path: 0 serial, 1 parallel.

#include <benchmark/benchmark.h>

#include "orbires/config.hpp"
#include "orbires/groebner.hpp"
#include "orbires/oracle.hpp"
#include "orbires/pipeline.hpp"
#include "orbires/quotient_algebra.hpp"

using namespace orbires;

namespace {

Exec exec_of(const benchmark::State& state) { return state.range(1) ? Exec::kParallel : Exec::kSerial; }

std::shared_ptr<const VarList> xy() { return make_vars(VarList{"z1", "z2"}); }

// A dense zero-dimensional system of Bezout number n^2.
Ideal dense_system(int n) {
  auto v = xy();
  const std::string e = std::to_string(n);
  return Ideal({parse_polynomial("z1^" + e + " + z1*z2 - 3*z2 + 1", v),
                parse_polynomial("z2^" + e + " - 2*z1^2*z2 + z1 - 5", v)},
               v);
}

void BM_MultiplicationMatrices(benchmark::State& state) {
  const GroebnerBasis gb = groebner_basis(dense_system(static_cast<int>(state.range(0))));
  const auto basis = standard_monomials(gb);
  for (auto _ : state) benchmark::DoNotOptimize(multiplication_matrices(gb, basis, exec_of(state)));
  state.counters["dim"] = static_cast<double>(basis.size());
}
BENCHMARK(BM_MultiplicationMatrices)->ArgsProduct({{4, 6, 8}, {0, 1}})->Unit(benchmark::kMillisecond);

void BM_QuotientAlgebra(benchmark::State& state) {
  const Ideal ideal = dense_system(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(QuotientAlgebra::build(ideal, exec_of(state)));
}
BENCHMARK(BM_QuotientAlgebra)->ArgsProduct({{4, 6}, {0, 1}})->Unit(benchmark::kMillisecond);

void BM_Oracle(benchmark::State& state) {
  auto v = xy();
  const std::vector<Polynomial> f{parse_polynomial("z1^2 - z2", v), parse_polynomial("z2^2", v)};
  const Polynomial h = parse_polynomial("z1^3 + 2*z1*z2", v);
  const std::vector<Rational> p{0, 0};
  OracleSettings s;
  s.starts = static_cast<std::size_t>(state.range(0));
  s.exec = exec_of(state);
  for (auto _ : state) benchmark::DoNotOptimize(numeric_local_residue(f, h, p, s));
}
BENCHMARK(BM_Oracle)->ArgsProduct({{800, 3200}, {0, 1}})->Unit(benchmark::kMillisecond);

// Point mode over the seven zeros of a degree-2 field on P2 (arg 0), and
// the global sum over the same field (arg 1).
void BM_Verification(benchmark::State& state) {
  const Problem problem = build_problem(parse_config(R"(
[space]
weights = 1, 1, 1
[field]
components = 0, z1*(z0 + 2*z1 - z2), z2*(3*z0 - z1 + 2*z2)
[points]
point = 3, -5, -7
point = 2, -1, 0
point = 2, 0, -3
point = 1, 0, 0
point = 0, 1, 0
point = 0, 1, 1
point = 0, 0, 1
)"));
  const Mode mode = state.range(0) ? Mode::kAllZeros : Mode::kPoints;
  for (auto _ : state) benchmark::DoNotOptimize(run_verification(problem, mode, exec_of(state)));
}
BENCHMARK(BM_Verification)->ArgsProduct({{0, 1}, {0, 1}})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
