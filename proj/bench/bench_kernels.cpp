// Serial reference vs OpenMP kernels.

#include <benchmark/benchmark.h>

#include <random>

#include "zetafrob/kedlaya.hpp"
#include "zetafrob/oracle.hpp"

using namespace zetafrob;

namespace {

FqPoly random_separable(const FieldDesc& F, int d, std::mt19937_64& rng) {
  for (;;) {
    std::vector<FqElement> c;
    for (int i = 0; i < d; ++i) c.push_back(F.element_at(rng() % F.q()));
    c.push_back(F.one());
    FqPoly Q(F, std::move(c));
    if (is_separable(Q)) return Q;
  }
}

Exec exec_of(const benchmark::State& state) { return state.range(0) ? Exec::Parallel : Exec::Serial; }

void BM_CountPoints(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const auto F = make_field(101, 1);
  const FqPoly Q = random_separable(*F, 7, rng);
  for (auto _ : state) benchmark::DoNotOptimize(count_points(F, Q, 2, 1, exec_of(state)));
}

struct Fixture {
  FieldPtr F;
  BasisChoice basis;
  PrecisionPlan plan;
  LiftedCurve lc;
};

Fixture fixture(std::uint64_t p, int n, int d) {
  std::mt19937_64 rng(2);
  Fixture f;
  f.F = n == 1 ? make_field(p, 1) : make_field(p, 2, std::vector<std::uint64_t>{1, 0, 1});
  const CurveData c = normalize_model(f.F, random_separable(*f.F, d, rng));
  f.basis = select_basis(f.F->p(), c.g, d);
  f.plan = plan_precision(f.F->p(), n, c.g, d, f.basis);
  f.lc = LiftedCurve::make(c, ZqContext::make(f.F, f.plan.nwork));
  return f;
}

void BM_BuildMatrix(benchmark::State& state) {
  const Fixture f = fixture(3, 2, 9);
  for (auto _ : state) benchmark::DoNotOptimize(build_frobenius_matrix(f.lc, f.basis, f.plan, exec_of(state)));
}

void BM_Matmul(benchmark::State& state) {
  const Fixture f = fixture(3, 2, 9);
  const FrobMatrix M = build_frobenius_matrix(f.lc, f.basis, f.plan);
  for (auto _ : state) benchmark::DoNotOptimize(matmul(M, M.sigma(1), exec_of(state)));
}

}  // namespace

BENCHMARK(BM_CountPoints)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BuildMatrix)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Matmul)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
