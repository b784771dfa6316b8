#include <benchmark/benchmark.h>

#include "desir/extension.hpp"
#include "desir/oracle.hpp"

namespace {

using namespace desir;

// A large product in which every sequence gets evaluated.
struct Workload {
    std::vector<GambleSet> list;
    GambleSet b{3};
};

Workload make_workload(std::size_t sets, std::size_t size) {
    SeededRng rng(7);
    Workload w;
    for (std::size_t s = 0; s < sets; ++s) {
        std::vector<Gamble> members;
        while (members.size() < size) {
            Gamble g = random_gamble(rng, 3, 3);
            // Keep a positive total so no sequence collapses to 0.
            if (g[0] + g[1] + g[2] > Rational(0)) {
                members.push_back(g);
            }
        }
        w.list.emplace_back(3, std::move(members));
    }
    // Every sequence contains a member of the first set, so none is a Miss.
    w.b = w.list.front();
    return w;
}

void BM_ClosureSerial(benchmark::State& state) {
    const auto w = make_workload(static_cast<std::size_t>(state.range(0)), 4);
    for (auto _ : state) {
        benchmark::DoNotOptimize(closure_holds_serial(w.list, w.b).member);
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(product_size(w.list)));
}

void BM_ClosureParallel(benchmark::State& state) {
    const auto w = make_workload(static_cast<std::size_t>(state.range(0)), 4);
    for (auto _ : state) {
        benchmark::DoNotOptimize(closure_holds(w.list, w.b).member);
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(product_size(w.list)));
}

} // namespace

BENCHMARK(BM_ClosureSerial)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_ClosureParallel)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
