#pragma once

// Data-parallel corpus kernels. Every kernel has a serial reference path; the
// two paths must agree exactly, which the tests and the determinism check rely
// on. The parallel path uses OpenMP when the library is built with it.

#include <span>
#include <string>
#include <vector>

#include "corpfreq/frequency_engine.hpp"
#include "corpfreq/lemmatizer.hpp"
#include "corpfreq/sample_ingest.hpp"
#include "corpfreq/text_normalizer.hpp"

namespace corpfreq {

enum class Execution { Serial, Parallel };

/// Number of worker threads the parallel path will use.
int parallel_threads() noexcept;
/// 0 restores the runtime default.
void set_parallel_threads(int threads) noexcept;

/// Normalization table, tokenizer options and rule set applied to every body.
struct TextPipeline {
  TransliterationTable table = TransliterationTable::defaults();
  TokenizerOptions tokenizer;
  RuleSet rules = RuleSet::defaults();
};

struct TokenizedSample {
  std::string id;
  FieldCode field;
  std::vector<Token> tokens;
  NormalizeDiagnostics diagnostics;
};

/// normalize -> tokenize -> apply_rules on one sample body.
TokenizedSample process_sample(const RawSample& sample, const TextPipeline& pipeline);

/// Output order matches input order. When several samples fail, the error of
/// the earliest one is rethrown regardless of execution mode.
std::vector<TokenizedSample> process_samples(std::span<const RawSample> samples,
                                             const TextPipeline& pipeline,
                                             Execution execution = Execution::Parallel);

FrequencyTable count_corpus(std::span<const TokenizedSample> samples,
                            Execution execution = Execution::Parallel);

}  // namespace corpfreq
