#include "nichols/catalog.hpp"
#include "nichols/quotient.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace nichols;

namespace {

Execution exec_of(const benchmark::State& state)
{
    return state.range(1) == 0 ? Execution::Serial : Execution::Parallel;
}

void BM_HilbertTable(benchmark::State& state)
{
    auto types = catalog_types();
    CatalogEntry e = catalog_entry(types[state.range(0)]);
    const int d = 8;
    for (auto _ : state) {
        GradedQuotient g(e.eminent, d, exec_of(state));
        benchmark::DoNotOptimize(g.hilbert_table(d));
    }
    state.SetLabel(e.tag + (state.range(1) == 0 ? " serial" : " parallel"));
}

std::vector<std::vector<Scalar>> random_matrix(int rows, int cols, unsigned seed)
{
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> entry(-4, 4);
    std::bernoulli_distribution present(0.4);
    std::vector<std::vector<Scalar>> m(rows, std::vector<Scalar>(cols, Scalar::zero(1)));
    for (auto& row : m)
        for (auto& x : row)
            if (present(rng))
                x = Scalar::from_int(1, entry(rng));
    return m;
}

void BM_RowReduce(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0));
    auto m = random_matrix(n, n, 7);
    for (auto _ : state)
        benchmark::DoNotOptimize(row_reduce(m, exec_of(state)));
    state.SetLabel(state.range(1) == 0 ? "serial" : "parallel");
}

} // namespace

BENCHMARK(BM_HilbertTable)->ArgsProduct({{0, 1, 2, 3, 4}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RowReduce)->ArgsProduct({{32, 64, 128}, {0, 1}})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
