#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace sloggen {

// Fine tagset: the 36 Penn Treebank word classes plus the four punctuation
// tags produced by the tokenizer (rendered ".", ",", ":" and "''").
enum class PennTag : std::uint8_t {
  CC, CD, DT, EX, FW, IN, JJ, JJR, JJS, LS, MD, NN, NNS, NNP, NNPS, PDT,
  POS, PRP, PRPS, RB, RBR, RBS, RP, SYM, TO, UH, VB, VBD, VBG, VBN, VBP,
  VBZ, WDT, WP, WPS, WRB,
  Period, Comma, Colon, Quote,
};

inline constexpr std::size_t kPennWordTagCount = 36;
inline constexpr std::size_t kPennTagCount = 40;

// Coarse tagset: the 12-tag universal inventory. Punct renders as ".".
enum class UniversalTag : std::uint8_t {
  VERB, NOUN, PRON, ADJ, ADV, ADP, CONJ, DET, NUM, PRT, X, Punct,
};

inline constexpr std::size_t kUniversalTagCount = 12;

enum class Tagset { Standard, Universal };

std::string_view to_string(PennTag tag);
std::string_view to_string(UniversalTag tag);
std::optional<PennTag> parse_penn_tag(std::string_view text);
// Accepts both "PUNCT" and "." for the punctuation class.
std::optional<UniversalTag> parse_universal_tag(std::string_view text);

// Penn -> universal projection, loaded from the shipped two-column mapping
// file. The loader rejects files that do not cover every Penn tag.
class CoarseMap {
 public:
  static CoarseMap load(const std::string& path);

  UniversalTag map(PennTag tag) const {
    return table_[static_cast<std::size_t>(tag)];
  }

 private:
  std::array<UniversalTag, kPennTagCount> table_{};
};

struct TagPair {
  PennTag standard;
  UniversalTag universal;

  bool operator==(const TagPair&) const = default;
};

}  // namespace sloggen
