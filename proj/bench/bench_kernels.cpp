// Serial reference vs parallel path for each corpus kernel.

#include <benchmark/benchmark.h>

#include "corpfreq/corpus_kernels.hpp"
#include "corpfreq/distribution_stats.hpp"
#include "synthetic_corpus.hpp"

using namespace corpfreq;

namespace {

const std::vector<RawSample>& corpus() {
  static const auto samples = testing::raw_samples(testing::make_corpus(
      {.samples = 200, .words_per_sample = 2000, .vocabulary = 30000, .seed = 42}));
  return samples;
}

const std::vector<TokenizedSample>& tokenized() {
  static const auto t = process_samples(corpus(), TextPipeline{}, Execution::Serial);
  return t;
}

const FrequencyTable& table() {
  static const auto t = count_corpus(tokenized(), Execution::Serial);
  return t;
}

void BM_process_samples(benchmark::State& state, Execution mode) {
  const TextPipeline pipeline;
  for (auto _ : state) benchmark::DoNotOptimize(process_samples(corpus(), pipeline, mode));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(corpus().size()));
}

void BM_count_corpus(benchmark::State& state, Execution mode) {
  for (auto _ : state) benchmark::DoNotOptimize(count_corpus(tokenized(), mode));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(tokenized().size()));
}

void BM_dispersion(benchmark::State& state, Execution mode) {
  for (auto _ : state) benchmark::DoNotOptimize(dispersion(table(), mode));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(table().distinct()));
}

}  // namespace

BENCHMARK_CAPTURE(BM_process_samples, serial, Execution::Serial)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_process_samples, parallel, Execution::Parallel)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_count_corpus, serial, Execution::Serial)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_count_corpus, parallel, Execution::Parallel)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_dispersion, serial, Execution::Serial)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_dispersion, parallel, Execution::Parallel)->Unit(benchmark::kMillisecond);

int main(int argc, char** argv) {
  table();  // build the fixtures outside the timed loops
  benchmark::Initialize(&argc, argv);
  if (benchmark::ReportUnrecognizedArguments(argc, argv)) return 1;
  benchmark::RunSpecifiedBenchmarks();
  benchmark::Shutdown();
  return 0;
}
