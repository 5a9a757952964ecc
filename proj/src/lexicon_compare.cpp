#include "corpfreq/lexicon_compare.hpp"

#include <algorithm>
#include <unordered_set>

#include "corpfreq/error.hpp"
#include "text_util.hpp"

namespace corpfreq {

namespace {

constexpr std::string_view kAdverbSuffix = "MENTE";

std::string canonical_word(std::string_view raw, const TransliterationTable& table) {
  return std::string(detail::trim(normalize(raw, table).str()));
}

}  // namespace

std::string_view to_string(Category category) noexcept {
  switch (category) {
    case Category::Operator: return "OPERATOR";
    case Category::General: return "GENERAL";
    case Category::Drawable: return "DRAWABLE";
    case Category::Qualities: return "QUALITIES";
  }
  return "GENERAL";
}

Category parse_category(std::string_view text) {
  text = detail::trim(text);
  if (text == "OPERATOR") return Category::Operator;
  if (text == "GENERAL") return Category::General;
  if (text == "DRAWABLE" || text == "PICTURED") return Category::Drawable;
  if (text == "QUALITIES") return Category::Qualities;
  throw Error(ErrorKind::UnknownCategory, "'" + std::string(text) + "'");
}

void CategoryLexicon::add(std::string lemma, Category category) {
  const auto [it, inserted] = entries_.try_emplace(lemma, category);
  if (!inserted && it->second != category) {
    throw Error(ErrorKind::ConflictingDuplicate,
                lemma + " listed as both " + std::string(to_string(it->second)) + " and " +
                    std::string(to_string(category)));
  }
}

const Category* CategoryLexicon::find(std::string_view lemma) const {
  const auto it = entries_.find(lemma);
  return it == entries_.end() ? nullptr : &it->second;
}

CategoryLexicon CategoryLexicon::parse(std::string_view tsv, const TransliterationTable& table) {
  CategoryLexicon lexicon;
  for (auto line : detail::lines(tsv)) {
    if (detail::trim(line).empty() || line.front() == '#') continue;
    const auto cols = detail::split(line, '\t');
    if (cols.size() != 2) {
      throw Error(ErrorKind::MalformedInput,
                  "expected 'lemma<TAB>category': '" + std::string(line) + "'");
    }
    std::string lemma = canonical_word(cols[0], table);
    if (lemma.empty()) throw Error(ErrorKind::MalformedInput, "empty lemma in lexicon");
    lexicon.add(std::move(lemma), parse_category(cols[1]));
  }
  return lexicon;
}

CategoryTally categorize(const LemmaSet& significant, const CategoryLexicon& lexicon) {
  CategoryTally tally;
  for (const auto& lemma : significant) {
    if (const Category* c = lexicon.find(lemma)) {
      ++tally.counts[static_cast<std::size_t>(*c)];
    } else if (lemma.size() > kAdverbSuffix.size() && lemma.ends_with(kAdverbSuffix)) {
      ++tally.counts[static_cast<std::size_t>(Category::Qualities)];
    } else {
      tally.uncategorized.push_back(lemma);
    }
  }
  // LemmaSet iterates in order, so this is already sorted.
  return tally;
}

std::string format_tally(const CategoryTally& tally) {
  std::string out;
  for (auto c : {Category::Operator, Category::General, Category::Drawable, Category::Qualities}) {
    out += std::string(to_string(c)) + '\t' + std::to_string(tally.count(c)) + '\n';
  }
  out += "UNCATEGORIZED\t" + std::to_string(tally.uncategorized.size()) + '\n';
  for (const auto& lemma : tally.uncategorized) out += "-\t" + lemma + '\n';
  return out;
}

ReferenceWordList ReferenceWordList::parse(std::string_view text,
                                           const TransliterationTable& table,
                                           std::size_t limit) {
  ReferenceWordList list;
  std::unordered_set<std::string> seen;
  for (auto line : detail::lines(text)) {
    std::string word = canonical_word(line, table);
    if (word.empty()) continue;
    if (!seen.insert(word).second) continue;
    list.words_.push_back(std::move(word));
    if (limit > 0 && list.words_.size() == limit) break;
  }
  return list;
}

OverlapReport overlap(const ReferenceWordList& reference, const RankedList& ranked,
                      std::size_t top_n) {
  if (reference.size() == 0) throw Error(ErrorKind::EmptyReference, "reference list is empty");
  if (top_n == 0) throw Error(ErrorKind::InvalidArgument, "topN must be at least 1");
  std::unordered_set<std::string_view> top;
  const std::size_t limit = std::min(top_n, ranked.entries.size());
  for (std::size_t k = 0; k < limit; ++k) top.insert(ranked.entries[k].lemma);

  OverlapReport report;
  report.reference_size = reference.size();
  report.top_n = top_n;
  for (const auto& word : reference.words()) {
    if (top.contains(word)) ++report.matched;
  }
  report.overlap_percent = static_cast<double>(report.matched) * 100.0 /
                           static_cast<double>(report.reference_size);
  return report;
}

std::string format_overlap(const OverlapReport& report) {
  return "reference_size\t" + std::to_string(report.reference_size) + "\ntop_n\t" +
         std::to_string(report.top_n) + "\nmatched\t" + std::to_string(report.matched) +
         "\noverlap_percent\t" + detail::format_shortest(report.overlap_percent) + '\n';
}

OverlapReport parse_overlap(std::string_view text) {
  OverlapReport report;
  for (auto line : detail::lines(text)) {
    const auto cols = detail::split(line, '\t');
    if (cols.size() != 2) throw Error(ErrorKind::MalformedInput, "bad overlap line");
    if (cols[0] == "reference_size") {
      report.reference_size = detail::parse_uint(cols[1], "reference_size");
    } else if (cols[0] == "top_n") {
      report.top_n = detail::parse_uint(cols[1], "top_n");
    } else if (cols[0] == "matched") {
      report.matched = detail::parse_uint(cols[1], "matched");
    } else if (cols[0] == "overlap_percent") {
      report.overlap_percent = detail::parse_double(cols[1], "overlap_percent");
    } else {
      throw Error(ErrorKind::MalformedInput, "unknown key '" + std::string(cols[0]) + "'");
    }
  }
  return report;
}

}  // namespace corpfreq
