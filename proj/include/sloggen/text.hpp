#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "sloggen/tags.hpp"

namespace sloggen {

struct Token {
  std::string surface;  // original form; non-empty, no whitespace
  std::string norm;     // case-folded surface, used for lexicon lookups

  bool operator==(const Token&) const = default;
};

// ASCII case fold; bytes outside ASCII pass through unchanged.
std::string casefold(std::string_view text);

Token make_token(std::string surface);

// Whitespace split, then . , ! ? ' ’ - … become their own tokens.
// Apostrophes and hyphens between word characters stay attached. Total on
// arbitrary byte sequences; empty input yields an empty sequence.
std::vector<Token> tokenize(std::string_view raw);

// Space join, with no space before . , ! ? ' ’ and none after an
// opening quote token.
std::string detokenize(const std::vector<Token>& tokens);

struct TaggedSentence {
  std::vector<Token> tokens;
  std::vector<TagPair> tags;
  std::string text;  // detokenize(tokens)

  bool operator==(const TaggedSentence&) const = default;
};

// Sentence-case rendering used when presenting slogans: the first ASCII
// letter is uppercased, everything else keeps its stored case.
std::string display_text(const TaggedSentence& sentence);

std::vector<PennTag> skeleton_standard(const TaggedSentence& sentence);
std::vector<UniversalTag> skeleton_universal(const TaggedSentence& sentence);

// Skeletons packed one tag per byte; used as set keys by the corpus index.
std::string skeleton_key(const TaggedSentence& sentence, Tagset tagset);

// Lexicon-first tagger with a fixed fallback rule ladder:
// punctuation shape, lexicon, -ly, -ing, -ed, -s over a known noun stem,
// capitalized mid-sentence, digit shape, then NN. Deterministic and total
// on non-empty input.
class Tagger {
 public:
  Tagger(std::unordered_map<std::string, PennTag> lexicon, CoarseMap coarse);

  static Tagger load(const std::string& lexicon_path,
                     const std::string& coarse_map_path);

  TaggedSentence tag(std::vector<Token> tokens) const;
  TaggedSentence tag_text(std::string_view raw) const;

  std::optional<PennTag> lexicon_lookup(std::string_view norm) const;
  const CoarseMap& coarse_map() const { return coarse_; }
  std::size_t lexicon_size() const { return lexicon_.size(); }

 private:
  PennTag classify(const Token& token, std::size_t index) const;

  std::unordered_map<std::string, PennTag> lexicon_;
  CoarseMap coarse_;
};

}  // namespace sloggen
