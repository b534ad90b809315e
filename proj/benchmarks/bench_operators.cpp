#include <benchmark/benchmark.h>

#include "shc/calculus.hpp"

using namespace shc;

namespace {

void BM_BoundaryMatrixQ(benchmark::State& state)
{
    const int p = static_cast<int>(state.range(0));
    for (auto _ : state) {
        Context<Rationals> ctx(builtin("T_full"), Rationals{});
        benchmark::DoNotOptimize(boundary_matrix(ctx, p)->nnz());
    }
}
BENCHMARK(BM_BoundaryMatrixQ)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

void BM_BoundaryMatrixFp(benchmark::State& state)
{
    const int p = static_cast<int>(state.range(0));
    for (auto _ : state) {
        Context<PrimeField> ctx(builtin("T_full", FieldConfig::prime_field(101)), PrimeField(101));
        benchmark::DoNotOptimize(boundary_matrix(ctx, p)->nnz());
    }
}
BENCHMARK(BM_BoundaryMatrixFp)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

void BM_CompMuMu(benchmark::State& state)
{
    Context<Rationals> ctx(builtin("T_full"), Rationals{});
    const auto m = mu(ctx);
    for (auto _ : state)
        benchmark::DoNotOptimize(comp(ctx, m, 1, m).values.nnz());
}
BENCHMARK(BM_CompMuMu)->Unit(benchmark::kMicrosecond);

void BM_BulletMu(benchmark::State& state)
{
    const int p = static_cast<int>(state.range(0));
    Context<Rationals> ctx(builtin("T_full"), Rationals{});
    const auto m = mu(ctx);
    for (auto _ : state)
        benchmark::DoNotOptimize(bullet_matrix(ctx, m, 1, p).nnz());
}
BENCHMARK(BM_BulletMu)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_Homology(benchmark::State& state)
{
    const int p = static_cast<int>(state.range(0));
    for (auto _ : state) {
        Context<Rationals> ctx(builtin("T_full"), Rationals{});
        benchmark::DoNotOptimize(homology(ctx, p).betti());
    }
}
BENCHMARK(BM_Homology)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

void BM_Rank(benchmark::State& state)
{
    Context<PrimeField> ctx(builtin("T_full", FieldConfig::prime_field(101)), PrimeField(101));
    const auto& m = *boundary_matrix(ctx, 4);
    for (auto _ : state)
        benchmark::DoNotOptimize(rank(ctx.field(), m));
}
BENCHMARK(BM_Rank)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
