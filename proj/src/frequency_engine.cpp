#include "corpfreq/frequency_engine.hpp"

#include <algorithm>

#include "corpfreq/error.hpp"
#include "text_util.hpp"

namespace corpfreq {

namespace {

constexpr std::string_view kListingHeader =
    "rank\tlemma\tcount\tper_million\tfield_spread\tflags";

}  // namespace

std::size_t LemmaCounts::field_spread() const noexcept {
  return static_cast<std::size_t>(
      std::count_if(fields.begin(), fields.end(), [](std::uint64_t c) { return c > 0; }));
}

void FrequencyTable::add(std::string_view lemma, FieldCode field, const TokenFlags& flags,
                         std::uint64_t n) {
  if (lemma.empty()) throw Error(ErrorKind::InvalidArgument, "empty lemma");
  auto [it, inserted] = entries_.try_emplace(std::string(lemma));
  LemmaCounts& counts = it->second;
  if (inserted) counts.foreign = flags.foreign;
  counts.fields[field.slot()] += n;
  counts.total += n;
  if (flags.sic) counts.sic += n;
  corpus_total_ += n;
}

void FrequencyTable::merge_from(const FrequencyTable& other) {
  for (const auto& [lemma, theirs] : other.entries_) {
    auto [it, inserted] = entries_.try_emplace(lemma);
    LemmaCounts& ours = it->second;
    if (inserted) ours.foreign = theirs.foreign;
    for (std::size_t k = 0; k < kFieldCount; ++k) ours.fields[k] += theirs.fields[k];
    ours.total += theirs.total;
    ours.sic += theirs.sic;
  }
  corpus_total_ += other.corpus_total_;
}

const LemmaCounts* FrequencyTable::find(std::string_view lemma) const {
  const auto it = entries_.find(std::string(lemma));
  return it == entries_.end() ? nullptr : &it->second;
}

std::vector<std::string> FrequencyTable::sorted_lemmas() const {
  std::vector<std::string> out;
  out.reserve(entries_.size());
  for (const auto& [lemma, counts] : entries_) out.push_back(lemma);
  std::sort(out.begin(), out.end());
  return out;
}

FrequencyTable count_sample(std::span<const Token> tokens, FieldCode field) {
  FrequencyTable table;
  for (const auto& t : tokens) table.add(t.lemma, field, t.flags);
  return table;
}

FrequencyTable merge(const FrequencyTable& a, const FrequencyTable& b) {
  FrequencyTable out = a;
  out.merge_from(b);
  return out;
}

RankedList rank(const FrequencyTable& table) {
  RankedList ranked;
  ranked.corpus_total = table.corpus_total();
  ranked.entries.reserve(table.distinct());
  for (const auto& [lemma, counts] : table.entries()) {
    RankedEntry e;
    e.lemma = lemma;
    e.count = counts.total;
    e.field_spread = counts.field_spread();
    e.sic = counts.sic;
    e.foreign = counts.foreign;
    ranked.entries.push_back(std::move(e));
  }
  std::sort(ranked.entries.begin(), ranked.entries.end(),
            [](const RankedEntry& a, const RankedEntry& b) {
              if (a.count != b.count) return a.count > b.count;
              return a.lemma < b.lemma;
            });
  const double n = static_cast<double>(ranked.corpus_total);
  for (std::size_t k = 0; k < ranked.entries.size(); ++k) {
    auto& e = ranked.entries[k];
    e.rank = k + 1;
    e.per_million = static_cast<double>(e.count) * 1e6 / n;
  }
  return ranked;
}

std::string format_flags(const RankedEntry& entry) {
  std::string flags;
  if (entry.sic > 0) flags += "SIC=" + std::to_string(entry.sic);
  if (!entry.foreign.empty()) {
    if (!flags.empty()) flags += ',';
    flags += "FOREIGN=" + entry.foreign;
  }
  return flags.empty() ? "-" : flags;
}

std::string format_listing(const RankedList& ranked, ListingOrder order) {
  std::vector<const RankedEntry*> rows;
  rows.reserve(ranked.entries.size());
  for (const auto& e : ranked.entries) rows.push_back(&e);
  if (order == ListingOrder::Alphabetic) {
    std::sort(rows.begin(), rows.end(),
              [](const RankedEntry* a, const RankedEntry* b) { return a->lemma < b->lemma; });
  }
  std::string out(kListingHeader);
  out += '\n';
  for (const RankedEntry* e : rows) {
    out += std::to_string(e->rank);
    out += '\t';
    out += e->lemma;
    out += '\t';
    out += std::to_string(e->count);
    out += '\t';
    out += detail::format_fixed(e->per_million, 4);
    out += '\t';
    out += std::to_string(e->field_spread);
    out += '\t';
    out += format_flags(*e);
    out += '\n';
  }
  return out;
}

RankedList parse_listing(std::string_view tsv) {
  const auto rows = detail::lines(tsv);
  if (rows.empty() || rows.front() != kListingHeader) {
    throw Error(ErrorKind::MalformedInput, "missing listing header");
  }
  RankedList ranked;
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const auto cols = detail::split(rows[r], '\t');
    if (cols.size() != 6) {
      throw Error(ErrorKind::MalformedInput,
                  "listing row " + std::to_string(r) + " has " +
                      std::to_string(cols.size()) + " columns");
    }
    RankedEntry e;
    e.rank = detail::parse_uint(cols[0], "rank");
    e.lemma = std::string(cols[1]);
    e.count = detail::parse_uint(cols[2], "count");
    e.field_spread = detail::parse_uint(cols[4], "field_spread");
    if (cols[5] != "-") {
      for (auto flag : detail::split(cols[5], ',')) {
        if (flag.starts_with("SIC=")) {
          e.sic = detail::parse_uint(flag.substr(4), "SIC");
        } else if (flag.starts_with("FOREIGN=")) {
          e.foreign = std::string(flag.substr(8));
        } else {
          throw Error(ErrorKind::MalformedInput, "unknown flag '" + std::string(flag) + "'");
        }
      }
    }
    ranked.corpus_total += e.count;
    ranked.entries.push_back(std::move(e));
  }
  std::sort(ranked.entries.begin(), ranked.entries.end(),
            [](const RankedEntry& a, const RankedEntry& b) { return a.rank < b.rank; });
  const double n = static_cast<double>(ranked.corpus_total);
  for (auto& e : ranked.entries) e.per_million = static_cast<double>(e.count) * 1e6 / n;
  return ranked;
}

}  // namespace corpfreq
