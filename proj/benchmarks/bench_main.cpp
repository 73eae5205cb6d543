#include <benchmark/benchmark.h>

#include "logcert/boundsearch.hpp"
#include "logcert/certify.hpp"
#include "logcert/convexity.hpp"
#include "logcert/known_bounds.hpp"

using namespace logcert;

namespace {

void BM_Generate(benchmark::State& state) {
  const Recurrence& rec = catalog_entry("apery-a");
  const auto count = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(generate(rec, count));
}
BENCHMARK(BM_Generate)->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond);

void BM_CheckLogConvex(benchmark::State& state) {
  const SequenceTable t = generate(catalog_entry("apery-b"), 300);
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(check_k_log_convex(t, k));
}
BENCHMARK(BM_CheckLogConvex)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_PositivityFarRoot(benchmark::State& state) {
  const Poly n = Poly::variable();
  const Poly p = (n - Poly(state.range(0))) * (n - Poly(state.range(0) + 1)) + Poly(QuadExt(0, 1, 2));
  for (auto _ : state) benchmark::DoNotOptimize(poly_positive_from(p, 1));
}
BENCHMARK(BM_PositivityFarRoot)->Arg(1000)->Arg(1000000)->Unit(benchmark::kMicrosecond);

void BM_PositivityCubic(benchmark::State& state) {
  const CriterionCoeffs k = theorem_coeffs(catalog_entry("apery-a"));
  const RationalFunction g = series_to_ratfunc(apery_a_upper_bound());
  const RationalFunction cubic = k.cubic_at(g);
  for (auto _ : state) benchmark::DoNotOptimize(ratfunc_positive_from(cubic, 2));
}
BENCHMARK(BM_PositivityCubic)->Unit(benchmark::kMillisecond);

void BM_Certificate(benchmark::State& state) {
  const char* name = state.range(0) == 0 ? "apery-a" : state.range(0) == 1 ? "apery-b" : "cohen-rhin-u";
  const Recurrence& rec = catalog_entry(name);
  const KnownBound kb = *known_upper_bound(name);
  const LowerBoundPlan plan = default_lower_bound(rec, kb.n_start);
  state.SetLabel(name);
  for (auto _ : state) benchmark::DoNotOptimize(verify_certificate(rec, plan, kb.g, kb.n_start, 1000));
}
BENCHMARK(BM_Certificate)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

void BM_SearchAperyA(benchmark::State& state) {
  const Recurrence& rec = catalog_entry("apery-a");
  const CriterionCoeffs k = theorem_coeffs(rec);
  for (auto _ : state) benchmark::DoNotOptimize(search_upper_bound(rec, 2, 4, k));
}
BENCHMARK(BM_SearchAperyA)->Unit(benchmark::kSecond)->Iterations(1);

}  // namespace
BENCHMARK_MAIN();
