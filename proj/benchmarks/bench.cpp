#include <benchmark/benchmark.h>

#include <numeric>
#include <random>
#include <vector>

#include "planeperm/block_distance.hpp"
#include "planeperm/oracle.hpp"
#include "planeperm/signed_reversal.hpp"

using namespace planeperm;

namespace {

Sequence random_sequence(int n, std::mt19937_64& rng) {
    std::vector<int> values(static_cast<std::size_t>(n));
    std::iota(values.begin(), values.end(), 1);
    for (std::size_t t = values.size(); t > 1; --t) {
        std::swap(values[t - 1], values[rng() % t]);
    }
    return Sequence(std::move(values));
}

SignedPermutation random_signed(int n, std::mt19937_64& rng) {
    std::vector<int> values(static_cast<std::size_t>(n));
    std::iota(values.begin(), values.end(), 1);
    for (std::size_t t = values.size(); t > 1; --t) {
        std::swap(values[t - 1], values[rng() % t]);
    }
    for (int& v : values) {
        if (rng() & 1) v = -v;
    }
    return SignedPermutation(std::move(values));
}

void BM_sort_block_interchanges(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    std::mt19937_64 rng(1);
    const Sequence s = random_sequence(n, rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(sort_by_block_interchanges(s));
    }
}
BENCHMARK(BM_sort_block_interchanges)->Arg(64)->Arg(256)->Arg(1024);

void BM_cycle_stats(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    std::mt19937_64 rng(2);
    const Permutation pi = augment(random_sequence(n, rng)).product;
    for (auto _ : state) {
        benchmark::DoNotOptimize(cycle_stats(pi));
    }
}
BENCHMARK(BM_cycle_stats)->Arg(4096);

void BM_classify_gain(benchmark::State& state) {
    std::mt19937_64 rng(3);
    const PlanePermutation p = augment(random_sequence(255, rng)).plane();
    const Interchange h{10, 60, 130, 250};
    for (auto _ : state) {
        benchmark::DoNotOptimize(classify_gain(p, h));
    }
}
BENCHMARK(BM_classify_gain);

void BM_distance_table(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(distance_table(n, MoveKind::block_interchange));
    }
}
BENCHMARK(BM_distance_table)->Arg(6);

void BM_greedy_sort_reversals(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    std::mt19937_64 rng(4);
    const SignedPermutation a = random_signed(n, rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(greedy_sort_reversals(a));
    }
}
BENCHMARK(BM_greedy_sort_reversals)->Arg(16)->Arg(32);

}  // namespace

BENCHMARK_MAIN();
