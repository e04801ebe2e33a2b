// Serial reference loops against the OpenMP kernels.

#include <vector>

#include <benchmark/benchmark.h>

#include "archcop/kernels.hpp"
#include "archcop/sampling.hpp"

namespace {

using archcop::FamilyId;
using archcop::Generator;
using archcop::UnitPair;

std::vector<double> axis(std::size_t n) {
    std::vector<double> a(n);
    for (std::size_t i = 0; i < n; ++i) a[i] = (i + 0.5) / static_cast<double>(n);
    return a;
}

const Generator kF1(FamilyId::F1PowerLog, {0.4});

template <bool Parallel>
void BM_CdfLattice(benchmark::State& state) {
    const auto a = axis(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        auto out = Parallel ? archcop::kernels::cdf_lattice(kF1, a)
                            : archcop::kernels::serial::cdf_lattice(kF1, a);
        benchmark::DoNotOptimize(out.data());
    }
    state.SetItemsProcessed(state.iterations() * state.range(0) * state.range(0));
}

template <bool Parallel>
void BM_DensityLattice(benchmark::State& state) {
    const auto a = axis(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        auto out = Parallel ? archcop::kernels::density_lattice(kF1, a)
                            : archcop::kernels::serial::density_lattice(kF1, a);
        benchmark::DoNotOptimize(out.data());
    }
    state.SetItemsProcessed(state.iterations() * state.range(0) * state.range(0));
}

template <bool Parallel>
void BM_ConcordanceSum(benchmark::State& state) {
    const auto pairs =
        archcop::sample_conditional(kF1, static_cast<std::size_t>(state.range(0)), 1).pairs;
    for (auto _ : state) {
        benchmark::DoNotOptimize(Parallel ? archcop::kernels::concordance_sum(pairs)
                                          : archcop::kernels::serial::concordance_sum(pairs));
    }
}

template <bool Parallel>
void BM_FillConditional(benchmark::State& state) {
    std::vector<UnitPair> out(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        const bool ok = Parallel ? archcop::kernels::fill_conditional(kF1, 7, out)
                                 : archcop::kernels::serial::fill_conditional(kF1, 7, out);
        benchmark::DoNotOptimize(ok);
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

template <bool Parallel>
void BM_FillFrailtyPairs(benchmark::State& state) {
    std::vector<UnitPair> out(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        if (Parallel) {
            archcop::kernels::fill_frailty_pairs(1.0, 7, out);
        } else {
            archcop::kernels::serial::fill_frailty_pairs(1.0, 7, out);
        }
        benchmark::DoNotOptimize(out.data());
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

}  // namespace

BENCHMARK(BM_CdfLattice<false>)->Name("cdf_lattice/serial")->Arg(101)->Arg(401);
BENCHMARK(BM_CdfLattice<true>)->Name("cdf_lattice/openmp")->Arg(101)->Arg(401);
BENCHMARK(BM_DensityLattice<false>)->Name("density_lattice/serial")->Arg(100)->Arg(400);
BENCHMARK(BM_DensityLattice<true>)->Name("density_lattice/openmp")->Arg(100)->Arg(400);
BENCHMARK(BM_ConcordanceSum<false>)->Name("concordance_sum/serial")->Arg(5000)->Arg(20000);
BENCHMARK(BM_ConcordanceSum<true>)->Name("concordance_sum/openmp")->Arg(5000)->Arg(20000);
BENCHMARK(BM_FillConditional<false>)->Name("fill_conditional/serial")->Arg(10000);
BENCHMARK(BM_FillConditional<true>)->Name("fill_conditional/openmp")->Arg(10000);
BENCHMARK(BM_FillFrailtyPairs<false>)->Name("fill_frailty_pairs/serial")->Arg(100000);
BENCHMARK(BM_FillFrailtyPairs<true>)->Name("fill_frailty_pairs/openmp")->Arg(100000);

BENCHMARK_MAIN();
