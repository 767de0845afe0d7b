#include <benchmark/benchmark.h>

#include <random>

#include "hecke/algebra.hpp"

using namespace hecke;

namespace {

Tower& tower() {
    static Tower t;
    return t;
}

Letters random_word(int n, std::size_t len, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> g(1, n - 1), s(0, 1);
    Letters w(len);
    for (int& l : w) l = g(rng) * (s(rng) ? 1 : -1);
    return w;
}

void BM_ReduceUncached(benchmark::State& st) {
    int n = static_cast<int>(st.range(0));
    std::mt19937_64 rng(1);
    for (auto _ : st) {
        RewriteEngine e(n);
        benchmark::DoNotOptimize(e.reduce(random_word(n, 12, rng)));
    }
}
BENCHMARK(BM_ReduceUncached)->Arg(2)->Arg(3);

void BM_TableReduce(benchmark::State& st) {
    int n = static_cast<int>(st.range(0));
    auto lev = tower().exact(n);
    std::mt19937_64 rng(2);
    for (auto _ : st) benchmark::DoNotOptimize(lev->reduce(random_word(n, 12, rng)));
}
BENCHMARK(BM_TableReduce)->Arg(3)->Arg(4);

void BM_Multiply4(benchmark::State& st) {
    auto lev = tower().exact(4);
    std::mt19937_64 rng(3);
    auto x = lev->reduce(random_word(4, 8, rng)), y = lev->reduce(random_word(4, 8, rng));
    for (auto _ : st) benchmark::DoNotOptimize(lev->multiply(x, y));
}
BENCHMARK(BM_Multiply4);

void BM_Level5Act(benchmark::State& st) {
    ModPoint pt(65521, 0, 0, 1);
    auto lev = tower().level5(pt);
    std::mt19937_64 rng(4);
    auto x = lev->reduce(random_word(5, 10, rng));
    int g = 1;
    for (auto _ : st) {
        benchmark::DoNotOptimize(lev->act(x, g));
        g = g % 4 + 1;
    }
}
BENCHMARK(BM_Level5Act);

}  // namespace

BENCHMARK_MAIN();
