#include <benchmark/benchmark.h>

#include "resland/builders.hpp"
#include "resland/gap.hpp"
#include "resland/growth.hpp"
#include "resland/path.hpp"
#include "resland/pspec.hpp"
#include "resland/twobytwo.hpp"

using namespace resland;

namespace {

ComplexMatrix test_matrix(std::size_t n) {
    std::vector<Complex> w(n, 1.0);
    w[0] = 10.0;
    return cyclic_matrix(w);
}

void BM_ResolventNorm(benchmark::State& state) {
    const ComplexMatrix a = test_matrix(static_cast<std::size_t>(state.range(0)));
    const Complex z(0.3, 0.2);
    for (auto _ : state) benchmark::DoNotOptimize(resolvent_norm(a, z).norm);
}
BENCHMARK(BM_ResolventNorm)->Arg(4)->Arg(16)->Arg(64);

void BM_ClosedForm2x2(benchmark::State& state) {
    CMatrix m(2, 2);
    m << Complex(1, 0), Complex(3, 1), Complex(0, 0), Complex(-1, 0.5);
    const ComplexMatrix a(m);
    for (auto _ : state) benchmark::DoNotOptimize(closed_form_norm(a, Complex(0.1, 0.2)));
}
BENCHMARK(BM_ClosedForm2x2);

void BM_GapReport(benchmark::State& state) {
    const ComplexMatrix a = test_matrix(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(spectral_gap_report(a, Complex(0.3, 0.2)));
}
BENCHMARK(BM_GapReport)->Arg(8)->Arg(32);

void BM_ScanConnectivity(benchmark::State& state) {
    const ComplexMatrix a = connectivity_example(3);
    const auto n = static_cast<std::size_t>(state.range(0));
    const Region r{-0.5, 4.5, -2.5, 2.5, n, n};
    for (auto _ : state) benchmark::DoNotOptimize(scan(a, r));
    state.SetItemsProcessed(static_cast<int64_t>(state.iterations() * n * n));
}
BENCHMARK(BM_ScanConnectivity)->Arg(100)->Arg(400)->Unit(benchmark::kMillisecond);

void BM_CertifyExampleLast(benchmark::State& state) {
    const ComplexMatrix b = example_last_spec().assemble();
    for (auto _ : state) benchmark::DoNotOptimize(certify_local_min(b, 0.0, 0.05, 720));
}
BENCHMARK(BM_CertifyExampleLast)->Unit(benchmark::kMillisecond);

void BM_BuildPath(benchmark::State& state) {
    const ComplexMatrix a = connectivity_example(3);
    for (auto _ : state) benchmark::DoNotOptimize(build_path(a, Complex(1.5, 0.4), 1.05));
}
BENCHMARK(BM_BuildPath)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
