#pragma once

// Accent transliteration into the canonical upper-case ASCII form.
//
// Canonical alphabet: A-Z, 0-9, space, '-', '.', '(' and ')'. Accented vowels
// become the vowel followed by a hyphen (Í -> "I-"), Ü becomes ".U.", Ñ becomes
// "N-", and sentence punctuation becomes a space.

#include <cstddef>
#include <map>
#include <string>
#include <string_view>

namespace corpfreq {

/// Mapping from a source code point (looked up after upper-casing) to its
/// canonical replacement.
class TransliterationTable {
 public:
  static TransliterationTable defaults();

  /// Tab-separated `source<TAB>replacement` lines, UTF-8. An empty replacement
  /// field means a single space. Lines starting with "# " are comments.
  static TransliterationTable parse(std::string_view tsv);
  std::string serialize() const;

  /// Replacement must only use canonical characters.
  void set(char32_t source, std::string replacement);
  const std::string* find(char32_t source) const;
  std::size_t size() const noexcept { return map_.size(); }

  friend bool operator==(const TransliterationTable&,
                         const TransliterationTable&) = default;

 private:
  std::map<char32_t, std::string> map_;
};

/// Characters that had no table entry and were replaced by a space.
struct NormalizeDiagnostics {
  std::map<char32_t, std::size_t> unmapped;

  std::size_t total() const noexcept;
  void merge(const NormalizeDiagnostics& other);
};

/// Text known to lie in the canonical alphabet.
class CanonicalText {
 public:
  CanonicalText() = default;
  /// Validates; throws NotCanonical otherwise.
  static CanonicalText from(std::string text);

  const std::string& str() const noexcept { return text_; }
  bool empty() const noexcept { return text_.empty(); }

  friend bool operator==(const CanonicalText&, const CanonicalText&) = default;

 private:
  explicit CanonicalText(std::string text) : text_(std::move(text)) {}
  friend CanonicalText normalize(std::string_view, const TransliterationTable&,
                                 NormalizeDiagnostics*);
  std::string text_;
};

/// Total over any input. Invalid UTF-8 bytes count as unmapped characters.
///
/// A period survives only when the characters on both sides of it in the
/// output are letters, digits, hyphens or parentheses ("X.A-N-OS",
/// "VERG.U.ENZA"); any other period is sentence punctuation and becomes a
/// space. This keeps normalize idempotent.
CanonicalText normalize(std::string_view raw, const TransliterationTable& table,
                        NormalizeDiagnostics* diagnostics = nullptr);

bool is_canonical(std::string_view text) noexcept;

std::string encode_utf8(char32_t cp);

}  // namespace corpfreq
