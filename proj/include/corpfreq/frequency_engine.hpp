#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "corpfreq/lemmatizer.hpp"
#include "corpfreq/sample_ingest.hpp"

namespace corpfreq {

struct LemmaCounts {
  std::array<std::uint64_t, kFieldCount> fields{};
  std::uint64_t total = 0;
  // Occurrences carrying a (SIC) marker.
  std::uint64_t sic = 0;
  // Language tag; a property of the lemma itself.
  std::string foreign;

  /// Number of fields with a nonzero count.
  std::size_t field_spread() const noexcept;

  friend bool operator==(const LemmaCounts&, const LemmaCounts&) = default;
};

/// Lemma -> per-field counts. Iteration order of entries() is unspecified;
/// every export goes through rank() or sorted_lemmas().
class FrequencyTable {
 public:
  void add(std::string_view lemma, FieldCode field, const TokenFlags& flags = {},
           std::uint64_t n = 1);
  void merge_from(const FrequencyTable& other);

  std::uint64_t corpus_total() const noexcept { return corpus_total_; }
  std::size_t distinct() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }
  const LemmaCounts* find(std::string_view lemma) const;
  const std::unordered_map<std::string, LemmaCounts>& entries() const noexcept {
    return entries_;
  }
  std::vector<std::string> sorted_lemmas() const;

  friend bool operator==(const FrequencyTable&, const FrequencyTable&) = default;

 private:
  std::unordered_map<std::string, LemmaCounts> entries_;
  std::uint64_t corpus_total_ = 0;
};

FrequencyTable count_sample(std::span<const Token> tokens, FieldCode field);
FrequencyTable merge(const FrequencyTable& a, const FrequencyTable& b);

struct RankedEntry {
  std::size_t rank = 0;  // 1-based
  std::string lemma;
  std::uint64_t count = 0;
  double per_million = 0.0;
  std::size_t field_spread = 0;
  std::uint64_t sic = 0;
  std::string foreign;

  friend bool operator==(const RankedEntry&, const RankedEntry&) = default;
};

struct RankedList {
  std::vector<RankedEntry> entries;
  std::uint64_t corpus_total = 0;

  std::size_t size() const noexcept { return entries.size(); }

  friend bool operator==(const RankedList&, const RankedList&) = default;
};

/// Count descending, ties by ascending lemma (byte order).
RankedList rank(const FrequencyTable& table);

enum class ListingOrder { Rank, Alphabetic };

/// Tab-separated: rank, lemma, count, per_million, field_spread, flags.
std::string format_listing(const RankedList& ranked, ListingOrder order);
/// Reads either listing order back; corpus_total is the sum of counts.
RankedList parse_listing(std::string_view tsv);

std::string format_flags(const RankedEntry& entry);

}  // namespace corpfreq
