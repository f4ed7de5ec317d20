#include "ldb/bialgebra.hpp"
#include "ldb/catalog.hpp"
#include "ldb/quadri.hpp"

#include <benchmark/benchmark.h>

using namespace ldb;

namespace {

DendAlgebra semidirect_dual(const DendAlgebra& a) { return semidirect(a, dual_rep(regular_rep(a))); }

Tensor2 skew_solution() {
    Tensor2 r(4);
    r(1, 2) = 1;
    r(2, 1) = -1;
    return r;
}

// Double of the four-dimensional semidirect algebra with its coboundary coproduct (dimension 8).
DendAlgebra big_double() {
    const DendAlgebra s = semidirect_dual(catalog::affine_2d());
    return double_of({s, cobound(s, skew_solution())});
}

void BM_CheckLd(benchmark::State& st) {
    const DendAlgebra a = st.range(0) == 4 ? semidirect_dual(catalog::affine_2d()) : big_double();
    for (auto _ : st) benchmark::DoNotOptimize(check_ld(a));
}
BENCHMARK(BM_CheckLd)->Arg(4)->Arg(8);

void BM_CheckLdybe(benchmark::State& st) {
    const DendAlgebra s = semidirect_dual(catalog::affine_2d());
    const Tensor2 r = skew_solution();
    for (auto _ : st) benchmark::DoNotOptimize(check_ldybe(s, r));
}
BENCHMARK(BM_CheckLdybe);

void BM_Cobound(benchmark::State& st) {
    const DendAlgebra s = semidirect_dual(catalog::affine_2d());
    const Tensor2 r = skew_solution();
    for (auto _ : st) benchmark::DoNotOptimize(cobound(s, r));
}
BENCHMARK(BM_Cobound);

void BM_CanonicalR(benchmark::State& st) {
    const Bialgebra b{catalog::affine_2d(), CoProduct(2)};
    for (auto _ : st) benchmark::DoNotOptimize(canonical_r(b));
}
BENCHMARK(BM_CanonicalR);

void BM_CheckQuadri(benchmark::State& st) {
    const DendAlgebra a = catalog::affine_2d();
    const QuadriAlgebra q = quadri_tensor(a, a);
    for (auto _ : st) benchmark::DoNotOptimize(check_quadri(q));
}
BENCHMARK(BM_CheckQuadri);

}  // namespace

BENCHMARK_MAIN();
