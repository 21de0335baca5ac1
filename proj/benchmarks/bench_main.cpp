#include <benchmark/benchmark.h>

#include <pshnd/levi.hpp>
#include <pshnd/newton.hpp>
#include <pshnd/parser.hpp>
#include <pshnd/pshtest.hpp>
#include <pshnd/verify.hpp>

using namespace pshnd;

namespace {

const char* kStock =
    "abs2(z^2*w^2 + z^10*w + z*w^10) + abs2(z^4*w^2 + z^4*w^8)";

void BM_parse_stock(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(parse(kStock));
}
BENCHMARK(BM_parse_stock);

void BM_norm_power_500(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(norm_power(500));
}
BENCHMARK(BM_norm_power_500);

void BM_extreme_sets(benchmark::State& state) {
  const NewtonDiagram nd = newton_diagram(parse(kStock));
  for (auto _ : state) benchmark::DoNotOptimize(extreme_sets(nd));
}
BENCHMARK(BM_extreme_sets);

void BM_extreme_sets_bruteforce(benchmark::State& state) {
  const NewtonDiagram nd = newton_diagram(parse(kStock));
  for (auto _ : state) benchmark::DoNotOptimize(extreme_sets_bruteforce(nd));
}
BENCHMARK(BM_extreme_sets_bruteforce);

void BM_hull_lattice_points(benchmark::State& state) {
  const Counterexample cx = build_counterexample();
  for (auto _ : state) benchmark::DoNotOptimize(hull_lattice_points(cx.edge_union));
}
BENCHMARK(BM_hull_lattice_points);

void BM_det_direct(benchmark::State& state) {
  const MixedPolynomial p = build_counterexample().union_restriction();
  for (auto _ : state) benchmark::DoNotOptimize(hessian_det_direct(p));
}
BENCHMARK(BM_det_direct);

void BM_det_formula(benchmark::State& state) {
  const Counterexample cx = build_counterexample();
  ModulusCombination mc;
  mc.summands = {{1, cx.corner + cx.w_heavy},
                 {1, cx.corner + cx.z_heavy},
                 {-1, cx.corner}};
  for (auto _ : state)
    benchmark::DoNotOptimize(decomposition_expand(hessian_det_formula(mc)));
}
BENCHMARK(BM_det_formula);

void BM_psh_sample_1k(benchmark::State& state) {
  const MixedPolynomial p = parse(kStock);
  SampleConfig cfg;
  cfg.radius = 1.0;
  cfg.samples = 1000;
  cfg.seed = 0;
  cfg.tolerance = 1e-9;
  for (auto _ : state) benchmark::DoNotOptimize(psh_sample_check(p, cfg));
}
BENCHMARK(BM_psh_sample_1k);

void BM_curve_witness_union(benchmark::State& state) {
  const Counterexample cx = build_counterexample();
  const MixedPolynomial p = cx.union_restriction();
  for (auto _ : state)
    benchmark::DoNotOptimize(curve_witness(cx.union_curve, p, 0.1, 1e-10));
}
BENCHMARK(BM_curve_witness_union);

void BM_univariate_roots_deg9(benchmark::State& state) {
  const Counterexample cx = build_counterexample();
  const auto coeffs = cx.union_curve.coefficients_in_w({0.05, 0.0});
  for (auto _ : state) {
    auto c = coeffs;
    benchmark::DoNotOptimize(univariate_roots(std::move(c), 1e-10));
  }
}
BENCHMARK(BM_univariate_roots_deg9);

}  // namespace

BENCHMARK_MAIN();
