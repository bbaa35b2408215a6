#include <benchmark/benchmark.h>

#include "retailsim/engine/rng.hpp"
#include "retailsim/engine/scheduler.hpp"
#include "retailsim/harness/experiments.hpp"
#include "retailsim/harness/presets.hpp"
#include "retailsim/population/triangular.hpp"

using namespace retailsim;

namespace {

// Hold model: each dispatched event schedules one successor, so the queue
// stays at its initial size.
void BM_SchedulerHold(benchmark::State& state)
{
    const auto size = static_cast<std::size_t>(state.range(0));
    RngStream rng(1, StreamId::Delays);
    for (auto _ : state) {
        state.PauseTiming();
        Scheduler<int> s;
        for (std::size_t i = 0; i < size; ++i) {
            s.schedule(rng.exponential(10.0), 0);
        }
        state.ResumeTiming();
        std::size_t left = 100'000;
        while (left-- > 0) {
            const auto ev = s.pop();
            s.schedule(ev.fire_time + rng.exponential(10.0), 0);
        }
        benchmark::DoNotOptimize(s.pending());
    }
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) * 100'000);
}
BENCHMARK(BM_SchedulerHold)->Arg(64)->Arg(4096)->Arg(65536);

void BM_Triangular(benchmark::State& state)
{
    RngStream rng(2, StreamId::Delays);
    const TriangularSpec spec{1, 4, 10};
    for (auto _ : state) {
        benchmark::DoNotOptimize(sample_triangular(spec, rng));
    }
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()));
}
BENCHMARK(BM_Triangular);

void BM_Replication(benchmark::State& state, const char* name)
{
    const auto cfg = preset(name);
    std::size_t rep = 0;
    std::uint64_t events = 0;
    for (auto _ : state) {
        const auto r = run_replication(cfg, rep++);
        events += r.events;
        benchmark::DoNotOptimize(r.transactions);
    }
    state.counters["events/s"] = benchmark::Counter(static_cast<double>(events), benchmark::Counter::kIsRate);
}
BENCHMARK_CAPTURE(BM_Replication, default, "default")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Replication, ww_like, "ww-like")->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
