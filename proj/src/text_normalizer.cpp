#include "corpfreq/text_normalizer.hpp"

#include <utility>
#include <vector>

#include "corpfreq/error.hpp"
#include "text_util.hpp"

namespace corpfreq {

namespace {

constexpr char32_t kReplacementChar = 0xFFFD;

bool is_canonical_char(char c) noexcept {
  return (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == ' ' ||
         c == '-' || c == '.' || c == '(' || c == ')';
}

// Characters that keep a neighbouring period alive.
bool is_word_char(char c) noexcept {
  return (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '-' ||
         c == '(' || c == ')';
}

bool is_ascii_space(char32_t cp) noexcept {
  return cp == ' ' || cp == '\t' || cp == '\n' || cp == '\r' || cp == '\f' ||
         cp == '\v';
}

char32_t to_upper(char32_t cp) noexcept {
  if (cp >= 'a' && cp <= 'z') return cp - 0x20;
  if (cp >= 0xE0 && cp <= 0xFE && cp != 0xF7) return cp - 0x20;
  if (cp == 0xFF) return 0x178;
  return cp;
}

// Decodes one code point starting at `i`, advancing it. Malformed sequences
// yield U+FFFD and consume a single byte.
char32_t decode_one(std::string_view s, std::size_t& i) noexcept {
  const auto byte = [&](std::size_t k) { return static_cast<unsigned char>(s[k]); };
  const unsigned char b0 = byte(i);
  if (b0 < 0x80) {
    ++i;
    return b0;
  }
  std::size_t len = 0;
  char32_t cp = 0;
  char32_t min = 0;
  if ((b0 & 0xE0) == 0xC0) {
    len = 2, cp = b0 & 0x1F, min = 0x80;
  } else if ((b0 & 0xF0) == 0xE0) {
    len = 3, cp = b0 & 0x0F, min = 0x800;
  } else if ((b0 & 0xF8) == 0xF0) {
    len = 4, cp = b0 & 0x07, min = 0x10000;
  } else {
    ++i;
    return kReplacementChar;
  }
  if (i + len > s.size()) {
    ++i;
    return kReplacementChar;
  }
  for (std::size_t k = 1; k < len; ++k) {
    const unsigned char b = byte(i + k);
    if ((b & 0xC0) != 0x80) {
      ++i;
      return kReplacementChar;
    }
    cp = (cp << 6) | (b & 0x3F);
  }
  if (cp < min || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) {
    ++i;
    return kReplacementChar;
  }
  i += len;
  return cp;
}

char32_t single_code_point(std::string_view s) {
  std::size_t i = 0;
  if (s.empty()) throw Error(ErrorKind::InvalidTable, "empty source character");
  const char32_t cp = decode_one(s, i);
  if (i != s.size() || cp == kReplacementChar) {
    throw Error(ErrorKind::InvalidTable,
                "source must be a single character: '" + std::string(s) + "'");
  }
  return cp;
}

}  // namespace

std::string encode_utf8(char32_t cp) {
  std::string out;
  if (cp < 0x80) {
    out += static_cast<char>(cp);
  } else if (cp < 0x800) {
    out += static_cast<char>(0xC0 | (cp >> 6));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else if (cp < 0x10000) {
    out += static_cast<char>(0xE0 | (cp >> 12));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else {
    out += static_cast<char>(0xF0 | (cp >> 18));
    out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  }
  return out;
}

TransliterationTable TransliterationTable::defaults() {
  TransliterationTable t;
  t.set(U'Á', "A-");
  t.set(U'É', "E-");
  t.set(U'Í', "I-");
  t.set(U'Ó', "O-");
  t.set(U'Ú', "U-");
  t.set(U'Ü', ".U.");
  t.set(U'Ñ', "N-");
  for (char32_t p : {U'.', U',', U';', U':', U'!', U'?', U'¡', U'¿', U'"', U'«', U'»'}) {
    t.set(p, " ");
  }
  return t;
}

void TransliterationTable::set(char32_t source, std::string replacement) {
  source = to_upper(source);
  for (char c : replacement) {
    if (!is_canonical_char(c)) {
      throw Error(ErrorKind::InvalidTable,
                  "replacement for '" + encode_utf8(source) +
                      "' has a non-canonical character: '" + replacement + "'");
    }
  }
  if (source == '.') {
    if (replacement != " ") {
      throw Error(ErrorKind::InvalidTable, "'.' can only map to a space");
    }
  } else if (source < 0x80 && is_canonical_char(static_cast<char>(source))) {
    throw Error(ErrorKind::InvalidTable,
                "canonical character '" + encode_utf8(source) + "' cannot be remapped");
  }
  map_[source] = std::move(replacement);
}

const std::string* TransliterationTable::find(char32_t source) const {
  const auto it = map_.find(source);
  return it == map_.end() ? nullptr : &it->second;
}

TransliterationTable TransliterationTable::parse(std::string_view tsv) {
  TransliterationTable t;
  for (auto line : detail::lines(tsv)) {
    if (line.empty() || line.starts_with("# ")) continue;
    const auto tab = line.find('\t');
    if (tab == std::string_view::npos) {
      throw Error(ErrorKind::InvalidTable, "expected 'source<TAB>replacement': '" +
                                               std::string(line) + "'");
    }
    const std::string_view source = line.substr(0, tab);
    const std::string_view replacement = line.substr(tab + 1);
    t.set(single_code_point(source),
          replacement.empty() ? std::string(" ") : std::string(replacement));
  }
  return t;
}

std::string TransliterationTable::serialize() const {
  std::string out = "# source\treplacement (empty = space)\n";
  for (const auto& [source, replacement] : map_) {
    out += encode_utf8(source);
    out += '\t';
    if (replacement != " ") out += replacement;
    out += '\n';
  }
  return out;
}

std::size_t NormalizeDiagnostics::total() const noexcept {
  std::size_t n = 0;
  for (const auto& [cp, count] : unmapped) n += count;
  return n;
}

void NormalizeDiagnostics::merge(const NormalizeDiagnostics& other) {
  for (const auto& [cp, count] : other.unmapped) unmapped[cp] += count;
}

CanonicalText CanonicalText::from(std::string text) {
  if (!is_canonical(text)) {
    throw Error(ErrorKind::NotCanonical, "'" + text + "'");
  }
  return CanonicalText(std::move(text));
}

bool is_canonical(std::string_view text) noexcept {
  for (char c : text) {
    if (!is_canonical_char(c)) return false;
  }
  return true;
}

CanonicalText normalize(std::string_view raw, const TransliterationTable& table,
                        NormalizeDiagnostics* diagnostics) {
  std::string mapped;
  mapped.reserve(raw.size() + raw.size() / 8);
  std::size_t i = 0;
  while (i < raw.size()) {
    const char32_t cp = to_upper(decode_one(raw, i));
    if (is_ascii_space(cp)) {
      mapped += ' ';
    } else if (cp < 0x80 && is_canonical_char(static_cast<char>(cp))) {
      mapped += static_cast<char>(cp);
    } else if (const std::string* rep = table.find(cp)) {
      mapped += *rep;
    } else {
      mapped += ' ';
      if (diagnostics) ++diagnostics->unmapped[cp];
    }
  }

  // Periods are decided against the mapped stream, which never changes a
  // word character, so survivors stay flanked on a second pass.
  std::string out = mapped;
  for (std::size_t k = 0; k < mapped.size(); ++k) {
    if (mapped[k] != '.') continue;
    const bool flanked = k > 0 && k + 1 < mapped.size() &&
                         is_word_char(mapped[k - 1]) && is_word_char(mapped[k + 1]);
    if (!flanked) out[k] = ' ';
  }
  return CanonicalText(std::move(out));
}

}  // namespace corpfreq
