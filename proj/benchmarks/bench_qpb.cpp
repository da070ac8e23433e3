#include <benchmark/benchmark.h>

#include "qpb/classify.hpp"
#include "qpb/flatness.hpp"
#include "qpb/lang.hpp"
#include "qpb/quantize.hpp"
#include "qpb/realize.hpp"
#include "qpb/series10.hpp"

using namespace qpb;

namespace {

QuadraticBracket orbit9() {
  const Poly X = Poly::var(0), Y = Poly::var(1), Z = Poly::var(2);
  return from_case(CaseId::a, Scalar(2) * X * Y * Z + X.pow(3) + Y.pow(3));
}

QuadraticBracket dc() {
  return from_case(CaseId::dc, Poly::var(0) * Poly::var(0) * Poly::var(2), {{"lambda", 1}});
}

}  // namespace

static void BM_ScalarArithmetic(benchmark::State& state) {
  const Scalar h = Scalar::h();
  for (auto _ : state) {
    Scalar k = (Scalar(1) - h) / (Scalar(1) + h);
    Scalar s = k.pow(5) + k.inverse().pow(3);
    benchmark::DoNotOptimize(s);
  }
}
BENCHMARK(BM_ScalarArithmetic);

static void BM_Classify(benchmark::State& state) {
  RationalMatrix A{{1, 2, 0}, {0, 1, -1}, {3, 0, 1}};
  const QuadraticBracket b = transform(dc(), A);
  for (auto _ : state) benchmark::DoNotOptimize(classify(b));
}
BENCHMARK(BM_Classify);

static void BM_DiamondResidual(benchmark::State& state) {
  const auto rels = relations(orbit9());
  for (auto _ : state) benchmark::DoNotOptimize(diamond_residual(triangularize(rels)));
}
BENCHMARK(BM_DiamondResidual);

static void BM_GradedDimension(benchmark::State& state) {
  const auto rels = relations(orbit9());
  const int d = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(graded_dimension(rels, d));
}
BENCHMARK(BM_GradedDimension)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

static void BM_SplittingCheck(benchmark::State& state) {
  const auto rels = tensors(relations(dc()));
  for (auto _ : state) benchmark::DoNotOptimize(splitting_check(rels, 4));
}
BENCHMARK(BM_SplittingCheck)->Unit(benchmark::kMillisecond);

static void BM_IntersectionW(benchmark::State& state) {
  const auto rels = tensors(relations(orbit9()));
  for (auto _ : state) benchmark::DoNotOptimize(intersection_W(rels));
}
BENCHMARK(BM_IntersectionW)->Unit(benchmark::kMillisecond);

static void BM_RealizationVerify(benchmark::State& state) {
  const Realization r = catalog("orbit6");
  for (auto _ : state) benchmark::DoNotOptimize(verify(r.x, r.relations));
}
BENCHMARK(BM_RealizationVerify);

static void BM_Independence(benchmark::State& state) {
  const Realization r = catalog("rank3c", {{"lambda", 1}, {"c", 1}});
  for (auto _ : state) benchmark::DoNotOptimize(independence(r.x, 3));
}
BENCHMARK(BM_Independence)->Unit(benchmark::kMillisecond);

static void BM_Series10(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(solve_case10(1, 1, n));
}
BENCHMARK(BM_Series10)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

static void BM_ParsePoly(benchmark::State& state) {
  const std::string text = "x1^2*x3 - 3/2*x2^3 + (1 - h)/(1 + h)*x1*x2*x3 + 7*(x1 + x2)^3";
  for (auto _ : state) benchmark::DoNotOptimize(parse_poly(text));
}
BENCHMARK(BM_ParsePoly);
BENCHMARK_MAIN();
