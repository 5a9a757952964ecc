#pragma once

// Coverage blocks, rank-constancy diagnostics, the significance set, and
// field dispersion.

#include <cstddef>
#include <cstdint>
#include <map>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "corpfreq/corpus_kernels.hpp"
#include "corpfreq/frequency_engine.hpp"

namespace corpfreq {

using LemmaSet = std::set<std::string, std::less<>>;

std::vector<std::size_t> default_cutoffs();

struct CoverageCurve {
  std::vector<std::size_t> cutoffs;
  std::vector<std::uint64_t> block_tokens;
  // Percent of corpus tokens per block and running totals.
  std::vector<double> block_shares;
  std::vector<double> cumulative_shares;
  std::uint64_t corpus_total = 0;

  std::uint64_t covered_tokens() const noexcept;

  /// Builds a curve from published block percentages. Token counts are the
  /// shares applied to `corpus_total`, rounded to the nearest token.
  static CoverageCurve from_block_shares(std::span<const std::size_t> cutoffs,
                                         std::span<const double> shares,
                                         std::uint64_t corpus_total);
};

struct ReferenceCurve {
  std::string name;
  std::vector<double> block_shares;

  /// 80/10/3/2 percent for the first four blocks of 1,000 ranks.
  static ReferenceCurve lewandowski();
};

/// Block k holds ranks (cutoffs[k-1], cutoffs[k]]. Cutoffs must be strictly
/// ascending and positive; throws EmptyCorpus on an empty list.
CoverageCurve coverage(const RankedList& ranked, std::span<const std::size_t> cutoffs);

/// observed - reference, per block.
std::vector<double> compare_reference(const CoverageCurve& curve,
                                      const ReferenceCurve& reference);

struct ZipfReport {
  // c_n = n * P_n for n = 1..topK.
  std::vector<double> constants;
  double geometric_mean = 0.0;
  double coefficient_of_variation = 0.0;
};

ZipfReport zipf_constants(const RankedList& ranked, std::size_t top_k);
/// Same diagnostic on a rank-ordered probability vector.
ZipfReport zipf_constants(std::span<const double> probabilities);

struct SignificanceConfig {
  double tau = 50.0;  // occurrences per million
  std::size_t skew_max_fields = 2;
  bool exclude_skewed = true;

  void validate() const;
};

/// ceil(tau * N / 1e6): the smallest count whose relative frequency is at
/// least tau per million.
std::uint64_t significance_min_count(std::uint64_t corpus_total, double tau);

struct DispersionEntry {
  std::string lemma;
  std::size_t presence = 0;     // fields with a nonzero count
  double concentration = 0.0;   // share of the two largest fields
  friend bool operator==(const DispersionEntry&, const DispersionEntry&) = default;
};

struct DispersionReport {
  // Sorted by lemma.
  std::vector<DispersionEntry> entries;

  const DispersionEntry* find(std::string_view lemma) const;
  friend bool operator==(const DispersionReport&, const DispersionReport&) = default;
};

DispersionReport dispersion(const FrequencyTable& table,
                            Execution execution = Execution::Parallel);

/// Lemmas that are significant and present in at most skew_max_fields fields.
LemmaSet skew_flags(const DispersionReport& report, const LemmaSet& significant,
                    const SignificanceConfig& config);

struct SignificanceSet {
  std::uint64_t min_count = 0;
  // Included lemmas in rank order.
  std::vector<std::string> lemmas;
  // Above-threshold lemmas flagged as skewed (whether or not excluded).
  LemmaSet skewed;
  std::uint64_t covered_tokens = 0;

  bool contains(std::string_view lemma) const;
};

SignificanceSet significance_set(const RankedList& ranked, const FrequencyTable& table,
                                 const SignificanceConfig& config);

/// Percent of corpus tokens per foreign-language tag.
std::map<std::string, double> foreign_share(const FrequencyTable& table);
std::map<std::string, double> foreign_share(std::span<const Token> tokens);

struct SicShare {
  std::uint64_t sic_tokens = 0;
  double token_percent = 0.0;
  std::size_t sic_types = 0;
  double type_percent = 0.0;
};

/// SIC-marked share of the corpus, both by tokens and by types.
SicShare sic_share(const FrequencyTable& table);

// Exports.
std::string format_coverage_csv(const CoverageCurve& curve);
std::string format_zipf_csv(const RankedList& ranked, const ZipfReport& report);
std::string format_dispersion_tsv(const DispersionReport& report, const FrequencyTable& table);
/// Listing columns plus SKEW (1/0) for the included lemmas.
std::string format_significance_tsv(const RankedList& ranked, const SignificanceSet& set);

}  // namespace corpfreq
