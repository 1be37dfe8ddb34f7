#include <benchmark/benchmark.h>

#include <random>

#include "fdcalc/formulas.hpp"
#include "fdcalc/func_table.hpp"
#include "fdcalc/group_ring.hpp"

using namespace fdcalc;

namespace {

void BM_NilpotencyScanCyclic(benchmark::State& state) {
    FiniteAbelianGroup a({static_cast<std::uint64_t>(state.range(0))});
    for (auto _ : state) {
        benchmark::DoNotOptimize(nilpotency_index(2, a, 128));
    }
}
BENCHMARK(BM_NilpotencyScanCyclic)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

void BM_NilpotencyScanRank4(benchmark::State& state) {
    FiniteAbelianGroup a({2, 2, 2, 2});
    for (auto _ : state) {
        benchmark::DoNotOptimize(nilpotency_index(8, a, 128));
    }
}
BENCHMARK(BM_NilpotencyScanRank4);

void BM_FdegDelta(benchmark::State& state) {
    FiniteAbelianGroup a({static_cast<std::uint64_t>(state.range(0))});
    FuncTable d = FuncTable::delta(a, a, a.zero(), a.element_at(1));
    for (auto _ : state) {
        benchmark::DoNotOptimize(fdeg(d));
    }
}
BENCHMARK(BM_FdegDelta)->Arg(8)->Arg(9)->Arg(16);

void BM_FdegRandomZ6(benchmark::State& state) {
    FiniteAbelianGroup z6({6});
    std::mt19937_64 rng(1);
    FuncTable f(z6, z6);
    for (std::uint64_t i = 0; i < 6; ++i) f.set_value_index(i, rng() % 6);
    for (auto _ : state) {
        benchmark::DoNotOptimize(fdeg(f));
    }
}
BENCHMARK(BM_FdegRandomZ6);

void BM_BruteforceOracle(benchmark::State& state) {
    FiniteAbelianGroup a({8});
    FuncTable d = FuncTable::delta(a, FiniteAbelianGroup({4}), a.zero(), GroupElement{{1}});
    for (auto _ : state) {
        benchmark::DoNotOptimize(fdeg_bruteforce(d, 13));
    }
}
BENCHMARK(BM_BruteforceOracle);

void BM_WeismanSumExact(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(weisman_sum(9, 2, static_cast<std::uint64_t>(state.range(0))));
    }
}
BENCHMARK(BM_WeismanSumExact)->Arg(64)->Arg(512);

void BM_WilsonCheck(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(wilson_check(3, 3, 3));
    }
}
BENCHMARK(BM_WilsonCheck);

void BM_GroupRingMulDense(benchmark::State& state) {
    FiniteAbelianGroup a({static_cast<std::uint64_t>(state.range(0))});
    GroupRingElement x(0, a);
    for (std::uint64_t i = 0; i < a.order(); ++i)
        x.add_term(a.element_at(i), mpz_class(static_cast<long>(i % 7)) - 3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(x * x);
    }
}
BENCHMARK(BM_GroupRingMulDense)->Arg(16)->Arg(64)->Arg(256);

} // namespace

BENCHMARK_MAIN();
