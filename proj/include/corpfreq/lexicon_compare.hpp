#pragma once

// Ogden-category tallies and overlap against reference word lists.

#include <array>
#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "corpfreq/distribution_stats.hpp"
#include "corpfreq/frequency_engine.hpp"
#include "corpfreq/text_normalizer.hpp"

namespace corpfreq {

enum class Category { Operator, General, Drawable, Qualities };

inline constexpr std::size_t kCategoryCount = 4;

std::string_view to_string(Category category) noexcept;
/// Accepts the four names, plus PICTURED as an alias of DRAWABLE.
Category parse_category(std::string_view text);

class CategoryLexicon {
 public:
  /// Tab-separated `lemma<TAB>category` rows. Lemmas are normalized with
  /// `table`; identical duplicates collapse, conflicting ones throw.
  static CategoryLexicon parse(std::string_view tsv,
                               const TransliterationTable& table = TransliterationTable::defaults());

  void add(std::string lemma, Category category);
  const Category* find(std::string_view lemma) const;
  std::size_t size() const noexcept { return entries_.size(); }

 private:
  std::map<std::string, Category, std::less<>> entries_;
};

struct CategoryTally {
  std::array<std::size_t, kCategoryCount> counts{};
  // Sorted.
  std::vector<std::string> uncategorized;

  std::size_t count(Category c) const noexcept { return counts[static_cast<std::size_t>(c)]; }
};

/// Lexicon entries win; an unlisted lemma ending in -MENTE (longer than MENTE
/// itself) counts as QUALITIES; the rest are uncategorized.
CategoryTally categorize(const LemmaSet& significant, const CategoryLexicon& lexicon);

std::string format_tally(const CategoryTally& tally);

class ReferenceWordList {
 public:
  /// One word per line, normalized with `table`, blank lines skipped,
  /// duplicates collapsed keeping the first occurrence. `limit` > 0 keeps only
  /// the first `limit` distinct words.
  static ReferenceWordList parse(std::string_view text,
                                 const TransliterationTable& table = TransliterationTable::defaults(),
                                 std::size_t limit = 0);

  const std::vector<std::string>& words() const noexcept { return words_; }
  std::size_t size() const noexcept { return words_.size(); }

 private:
  std::vector<std::string> words_;
};

struct OverlapReport {
  std::size_t reference_size = 0;
  std::size_t top_n = 0;
  std::size_t matched = 0;
  double overlap_percent = 0.0;
};

/// Share of the reference found among the top_n ranked lemmas.
OverlapReport overlap(const ReferenceWordList& reference, const RankedList& ranked,
                      std::size_t top_n);

std::string format_overlap(const OverlapReport& report);
OverlapReport parse_overlap(std::string_view text);

}  // namespace corpfreq
