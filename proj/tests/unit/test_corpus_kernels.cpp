#include "corpfreq/corpus_kernels.hpp"
#include "corpfreq/distribution_stats.hpp"
#include "corpfreq/error.hpp"
#include "doctest.h"
#include "synthetic_corpus.hpp"

using namespace corpfreq;

namespace {

struct ThreadGuard {
  explicit ThreadGuard(int n) { set_parallel_threads(n); }
  ~ThreadGuard() { set_parallel_threads(0); }
};

}  // namespace

TEST_SUITE("corpus_kernels") {

TEST_CASE("synthetic corpus bodies have the requested length") {
  const auto corpus = testing::make_corpus({.samples = 3, .words_per_sample = 500, .seed = 4});
  for (const auto& s : corpus) CHECK(s.expected.size() == 500);
}

TEST_CASE("pipeline counts equal the naive recount") {
  const TextPipeline pipeline;
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const auto corpus = testing::make_corpus({.samples = 4, .words_per_sample = 1500, .seed = seed});
    const auto raw = testing::raw_samples(corpus);
    const auto tokenized = process_samples(raw, pipeline, Execution::Serial);
    for (std::size_t k = 0; k < corpus.size(); ++k) {
      REQUIRE(tokenized[k].tokens.size() == corpus[k].expected.size());
      for (std::size_t t = 0; t < tokenized[k].tokens.size(); ++t) {
        CAPTURE(t);
        CHECK(tokenized[k].tokens[t].lemma == corpus[k].expected[t].lemma);
      }
    }
    CHECK(testing::compare_counts(testing::naive_recount(corpus),
                                  count_corpus(tokenized, Execution::Serial)) == "");
  }
}

TEST_CASE("parallel kernels equal the serial references") {
  const TextPipeline pipeline;
  const auto corpus = testing::make_corpus({.samples = 24, .words_per_sample = 800, .seed = 77});
  const auto raw = testing::raw_samples(corpus);
  const auto serial_tokens = process_samples(raw, pipeline, Execution::Serial);
  const auto serial_table = count_corpus(serial_tokens, Execution::Serial);
  const auto serial_disp = dispersion(serial_table, Execution::Serial);
  for (int threads : {1, 2, 3, 8}) {
    ThreadGuard guard(threads);
    CAPTURE(threads);
    const auto tokens = process_samples(raw, pipeline, Execution::Parallel);
    REQUIRE(tokens.size() == serial_tokens.size());
    for (std::size_t k = 0; k < tokens.size(); ++k) {
      CHECK(tokens[k].id == serial_tokens[k].id);
      CHECK(tokens[k].tokens == serial_tokens[k].tokens);
    }
    const auto table = count_corpus(tokens, Execution::Parallel);
    CHECK(table == serial_table);
    CHECK(dispersion(table, Execution::Parallel) == serial_disp);
  }
}

TEST_CASE("the earliest failing sample is reported in both modes") {
  const TextPipeline pipeline;
  auto raw = testing::raw_samples(
      testing::make_corpus({.samples = 16, .words_per_sample = 50, .annotations = false}));
  raw[5].body = "(sic) dangling";
  raw[11].body = "unclosed (paren";
  for (auto mode : {Execution::Serial, Execution::Parallel}) {
    ThreadGuard guard(4);
    try {
      process_samples(raw, pipeline, mode);
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::DanglingSicMarker);
    }
  }
}

TEST_CASE("diagnostics are collected per sample") {
  const TextPipeline pipeline;
  RawSample s = testing::raw_samples(testing::make_corpus({.samples = 1, .words_per_sample = 5}))[0];
  s.body = "uno € dos € tres";
  const auto out = process_sample(s, pipeline);
  CHECK(out.tokens.size() == 3);
  CHECK(out.diagnostics.total() == 2);
}

}  // TEST_SUITE
