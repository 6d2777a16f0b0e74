// Serial reference vs OpenMP suite execution on the same workload.

#include "qdet/identitylab.hpp"

#include <benchmark/benchmark.h>

namespace {

qdet::SuiteOptions workload(bool parallel) {
    qdet::SuiteOptions opts;
    for (const auto& c : qdet::registry()) opts.check_ids.emplace_back(c.id);
    opts.trials = 3;
    opts.parallel = parallel;
    return opts;
}

void run(benchmark::State& state, bool parallel) {
    const qdet::SuiteOptions opts = workload(parallel);
    long results = 0;
    for (auto _ : state) {
        qdet::Report rep = qdet::run_suite(opts);
        results = static_cast<long>(rep.results.size());
        benchmark::DoNotOptimize(rep);
    }
    state.counters["results"] = static_cast<double>(results);
}

void BM_SuiteSerial(benchmark::State& state) { run(state, false); }
void BM_SuiteParallel(benchmark::State& state) { run(state, true); }

// Heaviest single family, to show scaling where items are uneven.
void BM_MainTheorem(benchmark::State& state) {
    qdet::SuiteOptions opts;
    opts.check_ids = {"thm_main_phi", "thm_main_aw", "cor_even_aw", "cor_odd_aw"};
    opts.trials = 5;
    opts.parallel = state.range(0) != 0;
    for (auto _ : state) benchmark::DoNotOptimize(qdet::run_suite(opts));
}

}  // namespace

BENCHMARK(BM_SuiteSerial)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_SuiteParallel)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_MainTheorem)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
