#include <benchmark/benchmark.h>

#include "mfdecomp/decomp.hpp"
#include "mfdecomp/eisenstein.hpp"
#include "mfdecomp/hilbert.hpp"
#include "mfdecomp/ringalg.hpp"

namespace {

void BM_OmegaTable(benchmark::State& state) {
    const auto w1 = mfd::Weight1Data::builtin();
    for (auto _ : state)
        benchmark::DoNotOptimize(mfd::table_generate(2, 42, mfd::TableFlavor::Omega, w1));
}
BENCHMARK(BM_OmegaTable);

void BM_DeconvolutionOracle(benchmark::State& state) {
    const auto w1 = mfd::Weight1Data::builtin();
    const auto g = mfd::CongruenceGroup::gamma1(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(mfd::deconvolution_oracle(g, mfd::BlockTag::Level3, w1));
}
BENCHMARK(BM_DeconvolutionOracle)->Arg(11)->Arg(23)->Arg(42);

void BM_SerreDuality(benchmark::State& state) {
    const mfd::WeightedLine line(7, 11);
    for (auto _ : state)
        benchmark::DoNotOptimize(mfd::serre_duality_check(line, -state.range(0), state.range(0)));
}
BENCHMARK(BM_SerreDuality)->Arg(60)->Arg(600);

void BM_FreeBasisCertificate(benchmark::State& state) {
    const auto p = mfd::free_basis_preset("q-gamma1-3");
    for (auto _ : state)
        benchmark::DoNotOptimize(mfd::verify_free_basis(p.ambient, p.subring, p.basis, state.range(0)));
}
BENCHMARK(BM_FreeBasisCertificate)->Arg(24)->Arg(48);

void BM_HasseLift(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(mfd::hasse_lift(state.range(0), 60));
}
BENCHMARK(BM_HasseLift)->Arg(17)->Arg(41);

}  // namespace
BENCHMARK_MAIN();
