#include "corpfreq/lemmatizer.hpp"

#include "corpfreq/error.hpp"
#include "text_util.hpp"

namespace corpfreq {

namespace {

constexpr std::string_view kSicMarker = "(SIC)";

bool starts_with_letter(std::string_view s) noexcept {
  return !s.empty() && s.front() >= 'A' && s.front() <= 'Z';
}

bool starts_with_digit(std::string_view s) noexcept {
  return !s.empty() && s.front() >= '0' && s.front() <= '9';
}

bool context_holds(ContextClass cls, const Token* neighbour) noexcept {
  switch (cls) {
    case ContextClass::Any: return true;
    case ContextClass::Absent: return neighbour == nullptr;
    case ContextClass::Word: return neighbour && starts_with_letter(neighbour->lemma);
    case ContextClass::Digit: return neighbour && starts_with_digit(neighbour->lemma);
  }
  return false;
}

ContextClass parse_context(std::string_view text) {
  if (text == "*") return ContextClass::Any;
  if (text == "@ABSENT") return ContextClass::Absent;
  if (text == "@WORD") return ContextClass::Word;
  if (text == "@DIGIT") return ContextClass::Digit;
  throw Error(ErrorKind::InvalidRule, "unknown context '" + std::string(text) + "'");
}

std::string_view context_name(ContextClass cls) noexcept {
  switch (cls) {
    case ContextClass::Any: return "*";
    case ContextClass::Absent: return "@ABSENT";
    case ContextClass::Word: return "@WORD";
    case ContextClass::Digit: return "@DIGIT";
  }
  return "*";
}

// Reads a parenthesized group starting at text[i] == '(' and returns it with
// internal spaces removed. Nested groups are kept.
std::string read_group(std::string_view text, std::size_t& i) {
  std::string group;
  int depth = 0;
  for (; i < text.size(); ++i) {
    const char c = text[i];
    if (c == '(') {
      ++depth;
    } else if (c == ')') {
      --depth;
    } else if (c == ' ') {
      continue;
    }
    group += c;
    if (depth == 0) {
      ++i;
      return group;
    }
  }
  throw Error(ErrorKind::UnbalancedParenthesis, "unclosed '(' in '" + group + "'");
}

}  // namespace

std::vector<Token> tokenize(const CanonicalText& canonical, const TokenizerOptions& options) {
  const std::string_view text = canonical.str();
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    if (text[i] == ' ') {
      ++i;
      continue;
    }
    std::string word;
    while (i < text.size() && text[i] != ' ') {
      if (text[i] == '(') {
        word += read_group(text, i);
      } else if (text[i] == ')') {
        throw Error(ErrorKind::UnbalancedParenthesis,
                    "unmatched ')' after '" + word + "'");
      } else {
        word += text[i++];
      }
    }

    if (word == kSicMarker) {
      if (tokens.empty()) {
        throw Error(ErrorKind::DanglingSicMarker, "(SIC) with no preceding word");
      }
      tokens.back().flags.sic = true;
      continue;
    }

    TokenFlags flags;
    if (word.size() > kSicMarker.size() && word.ends_with(kSicMarker)) {
      word.resize(word.size() - kSicMarker.size());
      flags.sic = true;
    }
    if (word.size() > 2 && word.back() == ')') {
      const auto open = word.rfind('(');
      if (open != std::string::npos && open > 0) {
        const std::string_view tag =
            std::string_view(word).substr(open + 1, word.size() - open - 2);
        if (options.foreign_tags.contains(tag)) flags.foreign = std::string(tag);
      }
    }
    tokens.push_back(Token{std::move(word), tokens.size(), std::move(flags)});
  }
  return tokens;
}

std::string render_tokens(std::span<const Token> tokens) {
  std::string out;
  for (const auto& t : tokens) {
    if (!out.empty()) out += ' ';
    out += t.lemma;
    if (t.flags.sic) {
      out += ' ';
      out += kSicMarker;
    }
  }
  return out;
}

bool DisambiguationRule::matches(const Token& token, const Token* previous,
                                 const Token* next) const {
  if (token.lemma != target) return false;
  if (!context_holds(left, previous)) return false;
  if (right_prefixes.empty()) return context_holds(right, next);
  if (!next) return false;
  for (const auto& prefix : right_prefixes) {
    if (next->lemma.starts_with(prefix)) return true;
  }
  return false;
}

RuleSet RuleSet::defaults() {
  RuleSet rules;
  rules.add({"E", ContextClass::Any, ContextClass::Any, {"HI"}, "E(CONJ)"});
  rules.add({"U", ContextClass::Any, ContextClass::Any, {"O", "HO"}, "U(CONJ)"});
  rules.add({"O", ContextClass::Word, ContextClass::Word, {}, "O(DISJ)"});
  return rules;
}

void RuleSet::add(DisambiguationRule rule) {
  if (rule.target.empty() || rule.replacement.empty()) {
    throw Error(ErrorKind::InvalidRule, "empty target or replacement");
  }
  if (rule.target == rule.replacement) {
    throw Error(ErrorKind::InvalidRule, "replacement equals target '" + rule.target + "'");
  }
  if (!is_canonical(rule.target) || !is_canonical(rule.replacement)) {
    throw Error(ErrorKind::InvalidRule,
                "non-canonical rule '" + rule.target + "' -> '" + rule.replacement + "'");
  }
  for (const auto& p : rule.right_prefixes) {
    if (p.empty() || !is_canonical(p)) {
      throw Error(ErrorKind::InvalidRule, "bad right-context prefix '" + p + "'");
    }
  }
  rules_.push_back(std::move(rule));
}

RuleSet RuleSet::parse(std::string_view tsv) {
  RuleSet rules;
  for (auto line : detail::lines(tsv)) {
    if (detail::trim(line).empty() || line.front() == '#') continue;
    const auto cols = detail::split(line, '\t');
    if (cols.size() != 4) {
      throw Error(ErrorKind::InvalidRule,
                  "expected 4 tab-separated columns: '" + std::string(line) + "'");
    }
    DisambiguationRule rule;
    rule.target = std::string(detail::trim(cols[0]));
    rule.left = parse_context(detail::trim(cols[1]));
    const std::string_view right = detail::trim(cols[2]);
    if (right.starts_with('@') || right == "*") {
      rule.right = parse_context(right);
    } else {
      for (auto p : detail::split(right, '|')) rule.right_prefixes.emplace_back(detail::trim(p));
    }
    rule.replacement = std::string(detail::trim(cols[3]));
    rules.add(std::move(rule));
  }
  return rules;
}

std::string RuleSet::serialize() const {
  std::string out = "# target\tleft\tright\treplacement\n";
  for (const auto& r : rules_) {
    out += r.target + '\t' + std::string(context_name(r.left)) + '\t';
    if (r.right_prefixes.empty()) {
      out += context_name(r.right);
    } else {
      for (std::size_t k = 0; k < r.right_prefixes.size(); ++k) {
        if (k) out += '|';
        out += r.right_prefixes[k];
      }
    }
    out += '\t' + r.replacement + '\n';
  }
  return out;
}

std::vector<Token> apply_rules(std::span<const Token> tokens, const RuleSet& rules) {
  std::vector<Token> out(tokens.begin(), tokens.end());
  for (std::size_t k = 0; k < tokens.size(); ++k) {
    const Token* previous = k > 0 ? &tokens[k - 1] : nullptr;
    const Token* next = k + 1 < tokens.size() ? &tokens[k + 1] : nullptr;
    for (const auto& rule : rules.rules()) {
      if (rule.matches(tokens[k], previous, next)) {
        out[k].lemma = rule.replacement;
        break;
      }
    }
  }
  return out;
}

std::size_t count_words(std::span<const Token> tokens) noexcept { return tokens.size(); }

}  // namespace corpfreq
