#include "corpfreq/distribution_stats.hpp"

#include <algorithm>
#include <cmath>

#include "corpfreq/error.hpp"
#include "text_util.hpp"

namespace corpfreq {

namespace {

void check_cutoffs(std::span<const std::size_t> cutoffs) {
  if (cutoffs.empty()) throw Error(ErrorKind::InvalidArgument, "no coverage cutoffs");
  std::size_t previous = 0;
  for (std::size_t c : cutoffs) {
    if (c <= previous) {
      throw Error(ErrorKind::InvalidArgument, "cutoffs must be strictly ascending and positive");
    }
    previous = c;
  }
}

DispersionEntry disperse(const std::string& lemma, const LemmaCounts& counts) {
  DispersionEntry e;
  e.lemma = lemma;
  e.presence = counts.field_spread();
  std::uint64_t first = 0;
  std::uint64_t second = 0;
  for (std::uint64_t c : counts.fields) {
    if (c > first) {
      second = first;
      first = c;
    } else if (c > second) {
      second = c;
    }
  }
  e.concentration = counts.total == 0
                        ? 0.0
                        : static_cast<double>(first + second) /
                              static_cast<double>(counts.total);
  return e;
}

}  // namespace

std::vector<std::size_t> default_cutoffs() { return {1000, 2000, 3000, 4000}; }

std::uint64_t CoverageCurve::covered_tokens() const noexcept {
  std::uint64_t sum = 0;
  for (auto t : block_tokens) sum += t;
  return sum;
}

CoverageCurve CoverageCurve::from_block_shares(std::span<const std::size_t> cutoffs,
                                               std::span<const double> shares,
                                               std::uint64_t corpus_total) {
  check_cutoffs(cutoffs);
  if (cutoffs.size() != shares.size()) {
    throw Error(ErrorKind::ArityMismatch, "cutoffs and shares differ in length");
  }
  CoverageCurve curve;
  curve.cutoffs.assign(cutoffs.begin(), cutoffs.end());
  curve.corpus_total = corpus_total;
  double running = 0.0;
  for (double share : shares) {
    if (share < 0.0) throw Error(ErrorKind::InvalidArgument, "negative block share");
    running += share;
    curve.block_shares.push_back(share);
    curve.cumulative_shares.push_back(running);
    curve.block_tokens.push_back(static_cast<std::uint64_t>(
        std::llround(share * static_cast<double>(corpus_total) / 100.0)));
  }
  if (running > 100.0 + 1e-9) {
    throw Error(ErrorKind::InvalidArgument, "block shares exceed 100 percent");
  }
  return curve;
}

ReferenceCurve ReferenceCurve::lewandowski() { return {"lewandowski", {80.0, 10.0, 3.0, 2.0}}; }

CoverageCurve coverage(const RankedList& ranked, std::span<const std::size_t> cutoffs) {
  check_cutoffs(cutoffs);
  if (ranked.corpus_total == 0) throw Error(ErrorKind::EmptyCorpus, "coverage of an empty corpus");
  CoverageCurve curve;
  curve.cutoffs.assign(cutoffs.begin(), cutoffs.end());
  curve.corpus_total = ranked.corpus_total;
  const double n = static_cast<double>(ranked.corpus_total);
  std::size_t next_rank = 0;
  std::uint64_t running = 0;
  for (std::size_t cutoff : cutoffs) {
    std::uint64_t block = 0;
    for (; next_rank < cutoff && next_rank < ranked.entries.size(); ++next_rank) {
      block += ranked.entries[next_rank].count;
    }
    running += block;
    curve.block_tokens.push_back(block);
    curve.block_shares.push_back(static_cast<double>(block) * 100.0 / n);
    // From the integer running total, so full coverage is exactly 100.
    curve.cumulative_shares.push_back(static_cast<double>(running) * 100.0 / n);
  }
  return curve;
}

std::vector<double> compare_reference(const CoverageCurve& curve,
                                      const ReferenceCurve& reference) {
  if (curve.block_shares.size() != reference.block_shares.size()) {
    throw Error(ErrorKind::ArityMismatch,
                std::to_string(curve.block_shares.size()) + " observed blocks vs " +
                    std::to_string(reference.block_shares.size()) + " reference blocks");
  }
  std::vector<double> deviations(curve.block_shares.size());
  for (std::size_t k = 0; k < deviations.size(); ++k) {
    deviations[k] = curve.block_shares[k] - reference.block_shares[k];
  }
  return deviations;
}

ZipfReport zipf_constants(std::span<const double> probabilities) {
  if (probabilities.empty()) throw Error(ErrorKind::EmptyCorpus, "no ranks");
  ZipfReport report;
  report.constants.reserve(probabilities.size());
  double sum = 0.0;
  double log_sum = 0.0;
  for (std::size_t k = 0; k < probabilities.size(); ++k) {
    const double c = static_cast<double>(k + 1) * probabilities[k];
    if (!(c > 0.0)) {
      throw Error(ErrorKind::InvalidArgument, "non-positive probability at rank " +
                                                  std::to_string(k + 1));
    }
    report.constants.push_back(c);
    sum += c;
    log_sum += std::log(c);
  }
  const double count = static_cast<double>(probabilities.size());
  const double mean = sum / count;
  double squares = 0.0;
  for (double c : report.constants) squares += (c - mean) * (c - mean);
  report.geometric_mean = std::exp(log_sum / count);
  report.coefficient_of_variation = std::sqrt(squares / count) / mean;
  return report;
}

ZipfReport zipf_constants(const RankedList& ranked, std::size_t top_k) {
  if (ranked.corpus_total == 0 || ranked.entries.empty()) {
    throw Error(ErrorKind::EmptyCorpus, "rank constants of an empty corpus");
  }
  if (top_k == 0 || top_k > ranked.entries.size()) {
    throw Error(ErrorKind::InvalidArgument,
                "topK must lie in 1.." + std::to_string(ranked.entries.size()));
  }
  std::vector<double> p(top_k);
  const double n = static_cast<double>(ranked.corpus_total);
  for (std::size_t k = 0; k < top_k; ++k) {
    p[k] = static_cast<double>(ranked.entries[k].count) / n;
  }
  return zipf_constants(p);
}

void SignificanceConfig::validate() const {
  if (!(tau > 0.0)) throw Error(ErrorKind::InvalidArgument, "tau must be positive");
  if (skew_max_fields < 1 || skew_max_fields > kFieldCount) {
    throw Error(ErrorKind::InvalidArgument, "skew_max_fields must lie in 1..15");
  }
}

std::uint64_t significance_min_count(std::uint64_t corpus_total, double tau) {
  const double exact = tau * static_cast<double>(corpus_total) / 1e6;
  // Products like 50 * 20000 / 1e6 must land on 1, not 1 + ulp.
  const double guarded = exact - 1e-9 * std::max(1.0, exact);
  const auto count = static_cast<std::uint64_t>(std::max(0.0, std::ceil(guarded)));
  return corpus_total > 0 ? std::max<std::uint64_t>(count, 1) : count;
}

const DispersionEntry* DispersionReport::find(std::string_view lemma) const {
  const auto it = std::lower_bound(
      entries.begin(), entries.end(), lemma,
      [](const DispersionEntry& e, std::string_view l) { return e.lemma < l; });
  return it != entries.end() && it->lemma == lemma ? &*it : nullptr;
}

DispersionReport dispersion(const FrequencyTable& table, Execution execution) {
  const std::vector<std::string> lemmas = table.sorted_lemmas();
  DispersionReport report;
  report.entries.resize(lemmas.size());
  const auto n = static_cast<long>(lemmas.size());
  if (execution == Execution::Serial) {
    for (long k = 0; k < n; ++k) {
      const auto& lemma = lemmas[static_cast<std::size_t>(k)];
      report.entries[static_cast<std::size_t>(k)] = disperse(lemma, *table.find(lemma));
    }
    return report;
  }
#pragma omp parallel for schedule(static)
  for (long k = 0; k < n; ++k) {
    const auto& lemma = lemmas[static_cast<std::size_t>(k)];
    report.entries[static_cast<std::size_t>(k)] = disperse(lemma, *table.find(lemma));
  }
  return report;
}

LemmaSet skew_flags(const DispersionReport& report, const LemmaSet& significant,
                    const SignificanceConfig& config) {
  LemmaSet flagged;
  for (const auto& lemma : significant) {
    const DispersionEntry* e = report.find(lemma);
    if (e && e->presence <= config.skew_max_fields) flagged.insert(lemma);
  }
  return flagged;
}

bool SignificanceSet::contains(std::string_view lemma) const {
  return std::find(lemmas.begin(), lemmas.end(), lemma) != lemmas.end();
}

SignificanceSet significance_set(const RankedList& ranked, const FrequencyTable& table,
                                 const SignificanceConfig& config) {
  config.validate();
  SignificanceSet out;
  out.min_count = significance_min_count(ranked.corpus_total, config.tau);
  LemmaSet candidates;
  for (const auto& e : ranked.entries) {
    if (e.count < out.min_count) break;  // counts are non-increasing
    candidates.insert(e.lemma);
  }
  out.skewed = skew_flags(dispersion(table, Execution::Serial), candidates, config);
  for (const auto& e : ranked.entries) {
    if (e.count < out.min_count) break;
    if (config.exclude_skewed && out.skewed.contains(e.lemma)) continue;
    out.lemmas.push_back(e.lemma);
    out.covered_tokens += e.count;
  }
  return out;
}

std::map<std::string, double> foreign_share(const FrequencyTable& table) {
  std::map<std::string, std::uint64_t> counts;
  for (const auto& [lemma, c] : table.entries()) {
    if (!c.foreign.empty()) counts[c.foreign] += c.total;
  }
  std::map<std::string, double> shares;
  const double n = static_cast<double>(table.corpus_total());
  for (const auto& [lang, count] : counts) {
    shares[lang] = static_cast<double>(count) * 100.0 / n;
  }
  return shares;
}

std::map<std::string, double> foreign_share(std::span<const Token> tokens) {
  std::map<std::string, std::uint64_t> counts;
  for (const auto& t : tokens) {
    if (!t.flags.foreign.empty()) ++counts[t.flags.foreign];
  }
  std::map<std::string, double> shares;
  for (const auto& [lang, count] : counts) {
    shares[lang] = static_cast<double>(count) * 100.0 / static_cast<double>(tokens.size());
  }
  return shares;
}

SicShare sic_share(const FrequencyTable& table) {
  SicShare share;
  for (const auto& [lemma, c] : table.entries()) {
    share.sic_tokens += c.sic;
    if (c.sic > 0) ++share.sic_types;
  }
  if (table.corpus_total() > 0) {
    share.token_percent =
        static_cast<double>(share.sic_tokens) * 100.0 / static_cast<double>(table.corpus_total());
    share.type_percent =
        static_cast<double>(share.sic_types) * 100.0 / static_cast<double>(table.distinct());
  }
  return share;
}

std::string format_coverage_csv(const CoverageCurve& curve) {
  std::string out = "cutoff,block_tokens,block_share,cumulative_share\n";
  for (std::size_t k = 0; k < curve.cutoffs.size(); ++k) {
    out += std::to_string(curve.cutoffs[k]) + ',' + std::to_string(curve.block_tokens[k]) + ',' +
           detail::format_fixed(curve.block_shares[k], 4) + ',' +
           detail::format_fixed(curve.cumulative_shares[k], 4) + '\n';
  }
  return out;
}

std::string format_zipf_csv(const RankedList& ranked, const ZipfReport& report) {
  std::string out = "rank,lemma,count,probability,constant\n";
  const double n = static_cast<double>(ranked.corpus_total);
  for (std::size_t k = 0; k < report.constants.size(); ++k) {
    const auto& e = ranked.entries[k];
    out += std::to_string(e.rank) + ',' + e.lemma + ',' + std::to_string(e.count) + ',' +
           detail::format_fixed(static_cast<double>(e.count) / n, 8) + ',' +
           detail::format_fixed(report.constants[k], 8) + '\n';
  }
  return out;
}

std::string format_dispersion_tsv(const DispersionReport& report, const FrequencyTable& table) {
  std::string out = "lemma\tcount\tfield_presence\ttop2_concentration\n";
  for (const auto& e : report.entries) {
    const LemmaCounts* c = table.find(e.lemma);
    out += e.lemma + '\t' + std::to_string(c ? c->total : 0) + '\t' +
           std::to_string(e.presence) + '\t' + detail::format_fixed(e.concentration, 4) + '\n';
  }
  return out;
}

std::string format_significance_tsv(const RankedList& ranked, const SignificanceSet& set) {
  std::string out = "rank\tlemma\tcount\tper_million\tfield_spread\tflags\tskew\n";
  std::size_t next = 0;
  for (const auto& e : ranked.entries) {
    if (next == set.lemmas.size()) break;
    if (e.lemma != set.lemmas[next]) continue;
    ++next;
    out += std::to_string(e.rank) + '\t' + e.lemma + '\t' + std::to_string(e.count) + '\t' +
           detail::format_fixed(e.per_million, 4) + '\t' + std::to_string(e.field_spread) +
           '\t' + format_flags(e) + '\t' + (set.skewed.contains(e.lemma) ? "1" : "0") + '\n';
  }
  return out;
}

}  // namespace corpfreq
