// Serial reference runner vs the OpenMP runner on identical study configs.
#include <benchmark/benchmark.h>

#include "votelab/dropout.hpp"
#include "votelab/harness.hpp"

using namespace votelab;

namespace {

StudyConfig table1_config(const benchmark::State& state)
{
    StudyConfig cfg;
    cfg.study_type = static_cast<StudyType>(state.range(0));
    cfg.candidates = static_cast<std::size_t>(state.range(1));
    cfg.target_kept_trials = 2000;
    cfg.master_seed = 7;
    return cfg;
}

void BM_Table1Serial(benchmark::State& state)
{
    const StudyConfig cfg = table1_config(state);
    for (auto _ : state) {
        auto r = run_table1_study_serial(cfg);
        benchmark::DoNotOptimize(r.kept_trials);
        state.counters["consumed"] = static_cast<double>(r.trials_consumed);
    }
}

void BM_Table1Parallel(benchmark::State& state)
{
    const StudyConfig cfg = table1_config(state);
    for (auto _ : state) {
        auto r = run_table1_study(cfg);
        benchmark::DoNotOptimize(r.kept_trials);
        state.counters["consumed"] = static_cast<double>(r.trials_consumed);
    }
}

void BM_DropoutSerial(benchmark::State& state)
{
    DropoutConfig cfg;
    cfg.study = static_cast<DropoutStudy>(state.range(0));
    cfg.target_kept_trials = 5000;
    for (auto _ : state)
        benchmark::DoNotOptimize(run_dropout_study_serial(cfg).kept_trials);
}

void BM_DropoutParallel(benchmark::State& state)
{
    DropoutConfig cfg;
    cfg.study = static_cast<DropoutStudy>(state.range(0));
    cfg.target_kept_trials = 5000;
    for (auto _ : state)
        benchmark::DoNotOptimize(run_dropout_study(cfg).kept_trials);
}

}  // namespace

BENCHMARK(BM_Table1Serial)->Args({1, 5})->Args({1, 20})->Args({4, 10})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Table1Parallel)->Args({1, 5})->Args({1, 20})->Args({4, 10})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DropoutSerial)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DropoutParallel)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
