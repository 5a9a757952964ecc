#pragma once

// Tokenization of canonical text and the single-letter conjunction rules.
//
// Annotation syntax inside sample bodies:
//   PARTE(LA)     disambiguator glued to the word, kept as part of the lemma
//   KASA (SIC)    standalone marker flagging the previous token; not a token
//   (H2 O)        parenthesized group, a single token with spaces removed
//   OK(ENG)       foreign-language tag; the token is flagged FOREIGN(ENG)

#include <cstddef>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "corpfreq/text_normalizer.hpp"

namespace corpfreq {

struct TokenFlags {
  bool sic = false;
  // Language tag, empty when the token is not foreign.
  std::string foreign;

  friend bool operator==(const TokenFlags&, const TokenFlags&) = default;
};

struct Token {
  std::string lemma;
  std::size_t position = 0;
  TokenFlags flags;

  friend bool operator==(const Token&, const Token&) = default;
};

struct TokenizerOptions {
  std::set<std::string, std::less<>> foreign_tags = {"ENG", "FRA", "ITA",
                                                     "POR", "DEU", "LAT"};
};

std::vector<Token> tokenize(const CanonicalText& text,
                            const TokenizerOptions& options = {});

/// Joins tokens back into canonical text; SIC tokens get a " (SIC)" marker.
/// tokenize(normalize(render_tokens(t))) reproduces t.
std::string render_tokens(std::span<const Token> tokens);

enum class ContextClass {
  Any,     // no constraint
  Absent,  // no neighbouring token
  Word,    // neighbour starts with a letter
  Digit,   // neighbour starts with a digit
};

struct DisambiguationRule {
  std::string target;
  ContextClass left = ContextClass::Any;
  // When `right_prefixes` is non-empty the next token must start with one of
  // them and `right` is ignored.
  ContextClass right = ContextClass::Any;
  std::vector<std::string> right_prefixes;
  std::string replacement;

  bool matches(const Token& token, const Token* previous, const Token* next) const;

  friend bool operator==(const DisambiguationRule&, const DisambiguationRule&) = default;
};

/// Ordered rules; the first match wins.
class RuleSet {
 public:
  /// E(CONJ) before HI-, U(CONJ) before O-/HO-, O(DISJ) between words.
  static RuleSet defaults();

  /// Tab-separated: target, left context, right context, replacement. Context
  /// columns take `*`, `@ABSENT`, `@WORD`, `@DIGIT`; the right column may
  /// instead hold a `|`-separated prefix list. Lines starting with '#' are
  /// comments.
  static RuleSet parse(std::string_view tsv);
  std::string serialize() const;

  void add(DisambiguationRule rule);
  std::span<const DisambiguationRule> rules() const noexcept { return rules_; }

  friend bool operator==(const RuleSet&, const RuleSet&) = default;

 private:
  std::vector<DisambiguationRule> rules_;
};

/// Contexts are read from the input sequence, so the result does not depend
/// on the order in which rules fire.
std::vector<Token> apply_rules(std::span<const Token> tokens, const RuleSet& rules);

std::size_t count_words(std::span<const Token> tokens) noexcept;

}  // namespace corpfreq
