#include <benchmark/benchmark.h>

#include "qcorr/correlations.hpp"
#include "qcorr/teleport.hpp"

namespace {

using namespace qcorr;

BathParams default_bath() { return BathParams{}; }

void BM_HermitianEigenvalues(benchmark::State& state) {
    const auto rho = x_state(0.5, std::polar(0.4, 0.7));
    const ComplexMatrix pt = partial_transpose(rho.matrix(), 0);
    for (auto _ : state) benchmark::DoNotOptimize(hermitian_eigenvalues(pt));
}
BENCHMARK(BM_HermitianEigenvalues);

void BM_GammaS(benchmark::State& state) {
    const BathParams p = default_bath();
    const QuadratureSpec q;
    const double t = static_cast<double>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(gamma_s(p, q, t));
}
BENCHMARK(BM_GammaS)->Arg(1)->Arg(10)->Arg(100);

void BM_DiscordOracle(benchmark::State& state) {
    const auto rho = x_state(0.5, std::polar(0.4, 0.7));
    for (auto _ : state) benchmark::DoNotOptimize(discord_oracle(rho));
}
BENCHMARK(BM_DiscordOracle)->Unit(benchmark::kMillisecond);

void BM_RunProtocol(benchmark::State& state) {
    const ChannelState channel{0.0, x_state(0.5, std::polar(0.4, 0.7)), std::polar(0.4, 0.7)};
    const InputQubit input{1.1, 0.3};
    for (auto _ : state) benchmark::DoNotOptimize(run_protocol(input, channel));
}
BENCHMARK(BM_RunProtocol);

void BM_AverageFidelityOracle(benchmark::State& state) {
    const ChannelState channel{0.0, x_state(0.5, std::polar(0.4, 0.7)), std::polar(0.4, 0.7)};
    for (auto _ : state) benchmark::DoNotOptimize(average_fidelity_oracle(channel));
}
BENCHMARK(BM_AverageFidelityOracle)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
