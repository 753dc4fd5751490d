#include <benchmark/benchmark.h>

#include "helly/fourier_motzkin.hpp"
#include "helly/generators.hpp"
#include "helly/helly.hpp"
#include "helly/hypergraph.hpp"

using namespace helly;

namespace {

// A fixed batch of seeded systems so every run measures the same work.
std::vector<std::vector<LinearConstraint>> seeded_systems(int dim, int count) {
    std::vector<std::vector<LinearConstraint>> systems;
    systems.reserve(count);
    for (int trial = 0; trial < count; ++trial) {
        systems.push_back(gen_random_system(dim, 10, 60000 + 1000 * dim + trial));
    }
    return systems;
}

void BM_simplex_feasible(benchmark::State& state) {
    const int dim = static_cast<int>(state.range(0));
    const auto systems = seeded_systems(dim, 32);
    for (auto _ : state) {
        for (const auto& system : systems) {
            benchmark::DoNotOptimize(feasible(system, dim).status);
        }
    }
    state.SetItemsProcessed(state.iterations() * systems.size());
}
BENCHMARK(BM_simplex_feasible)->Arg(1)->Arg(2)->Arg(3);

void BM_fourier_motzkin_feasible(benchmark::State& state) {
    const int dim = static_cast<int>(state.range(0));
    const auto systems = seeded_systems(dim, 32);
    for (auto _ : state) {
        for (const auto& system : systems) {
            benchmark::DoNotOptimize(fm_feasible(system, dim));
        }
    }
    state.SetItemsProcessed(state.iterations() * systems.size());
}
BENCHMARK(BM_fourier_motzkin_feasible)->Arg(1)->Arg(2)->Arg(3);

void BM_count_colorful(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto classes = gen_construction_colorful({2, n, Rational(1, 2), 77});
    for (auto _ : state) {
        benchmark::DoNotOptimize(count_intersecting_colorful(classes).intersecting_count);
    }
}
BENCHMARK(BM_count_colorful)->Arg(6)->Arg(8)->Arg(10);

void BM_count_colorful_parallel(benchmark::State& state) {
    const auto classes = gen_construction_colorful({2, 10, Rational(1, 2), 77});
    const int jobs = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(count_intersecting_colorful(classes, jobs).intersecting_count);
    }
}
BENCHMARK(BM_count_colorful_parallel)->Arg(1)->Arg(2)->Arg(4);

void BM_extract_subfamily(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto classes = gen_construction_colorful({2, n, Rational(1, 2), 42});
    for (auto _ : state) {
        benchmark::DoNotOptimize(extract_intersecting_subfamily(classes).subfamily.members);
    }
}
BENCHMARK(BM_extract_subfamily)->Arg(6)->Arg(8);

void BM_greedy_matching(benchmark::State& state) {
    const auto h = gen_random_hypergraph(16, 3, 0.4, 5);
    for (auto _ : state) {
        benchmark::DoNotOptimize(greedy_maximal_matching(h).edges);
    }
}
BENCHMARK(BM_greedy_matching);

void BM_max_subfamily_exact(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto classes = gen_construction_colorful({1, n, Rational(1, 2), 9});
    const auto& cls = classes.classes.front();
    for (auto _ : state) {
        benchmark::DoNotOptimize(max_intersecting_subfamily_exact(cls).members);
    }
}
BENCHMARK(BM_max_subfamily_exact)->Arg(8)->Arg(12);

}  // namespace

BENCHMARK_MAIN();
