#include "corpfreq/corpus_kernels.hpp"

#include <exception>

#include "maybe_omp.hpp"

namespace corpfreq {

namespace {

int default_threads() noexcept {
  static const int n = omp_get_max_threads();
  return n;
}

}  // namespace

int parallel_threads() noexcept { return omp_get_max_threads(); }

void set_parallel_threads(int threads) noexcept {
  const int fallback = default_threads();
  omp_set_num_threads(threads > 0 ? threads : fallback);
}

TokenizedSample process_sample(const RawSample& sample, const TextPipeline& pipeline) {
  TokenizedSample out{sample.metadata.id, sample.metadata.field, {}, {}};
  const CanonicalText canonical = normalize(sample.body, pipeline.table, &out.diagnostics);
  out.tokens = apply_rules(tokenize(canonical, pipeline.tokenizer), pipeline.rules);
  return out;
}

std::vector<TokenizedSample> process_samples(std::span<const RawSample> samples,
                                             const TextPipeline& pipeline,
                                             Execution execution) {
  std::vector<TokenizedSample> out;
  out.reserve(samples.size());
  if (execution == Execution::Serial) {
    for (const auto& s : samples) out.push_back(process_sample(s, pipeline));
    return out;
  }

  const auto n = static_cast<long>(samples.size());
  for (const auto& s : samples) out.push_back({s.metadata.id, s.metadata.field, {}, {}});
  std::vector<std::exception_ptr> errors(samples.size());
#pragma omp parallel for schedule(dynamic, 4)
  for (long k = 0; k < n; ++k) {
    try {
      out[static_cast<std::size_t>(k)] =
          process_sample(samples[static_cast<std::size_t>(k)], pipeline);
    } catch (...) {
      errors[static_cast<std::size_t>(k)] = std::current_exception();
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

FrequencyTable count_corpus(std::span<const TokenizedSample> samples, Execution execution) {
  FrequencyTable result;
  if (execution == Execution::Serial) {
    for (const auto& s : samples) result.merge_from(count_sample(s.tokens, s.field));
    return result;
  }

  const auto n = static_cast<long>(samples.size());
#pragma omp parallel
  {
    FrequencyTable local;
#pragma omp for schedule(dynamic, 4) nowait
    for (long k = 0; k < n; ++k) {
      const auto& s = samples[static_cast<std::size_t>(k)];
      for (const auto& t : s.tokens) local.add(t.lemma, s.field, t.flags);
    }
    // Integer sums: merge order does not affect the result.
#pragma omp critical(corpfreq_count_merge)
    result.merge_from(local);
  }
  return result;
}

}  // namespace corpfreq
