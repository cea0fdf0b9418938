#include "sloggen/tags.hpp"

#include <fstream>
#include <sstream>
#include <vector>

#include "sloggen/errors.hpp"

namespace sloggen {

namespace {

constexpr std::string_view kPennNames[kPennTagCount] = {
    "CC",  "CD",  "DT",   "EX",  "FW",  "IN",  "JJ",  "JJR", "JJS", "LS",
    "MD",  "NN",  "NNS",  "NNP", "NNPS", "PDT", "POS", "PRP", "PRP$", "RB",
    "RBR", "RBS", "RP",   "SYM", "TO",  "UH",  "VB",  "VBD", "VBG", "VBN",
    "VBP", "VBZ", "WDT",  "WP",  "WP$", "WRB", ".",   ",",   ":",   "''",
};

constexpr std::string_view kUniversalNames[kUniversalTagCount] = {
    "VERB", "NOUN", "PRON", "ADJ", "ADV", "ADP",
    "CONJ", "DET",  "NUM",  "PRT", "X",   ".",
};

}  // namespace

std::string_view to_string(PennTag tag) {
  return kPennNames[static_cast<std::size_t>(tag)];
}

std::string_view to_string(UniversalTag tag) {
  return kUniversalNames[static_cast<std::size_t>(tag)];
}

std::optional<PennTag> parse_penn_tag(std::string_view text) {
  for (std::size_t i = 0; i < kPennTagCount; ++i) {
    if (kPennNames[i] == text) return static_cast<PennTag>(i);
  }
  return std::nullopt;
}

std::optional<UniversalTag> parse_universal_tag(std::string_view text) {
  if (text == "PUNCT") return UniversalTag::Punct;
  for (std::size_t i = 0; i < kUniversalTagCount; ++i) {
    if (kUniversalNames[i] == text) return static_cast<UniversalTag>(i);
  }
  return std::nullopt;
}

CoarseMap CoarseMap::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FileNotFoundError(path);

  CoarseMap result;
  std::vector<bool> covered(kPennTagCount, false);

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;

    const auto tab = line.find('\t');
    if (tab == std::string::npos) {
      throw DataError(path + ":" + std::to_string(line_no) +
                      ": expected PENN_TAG<TAB>UNIVERSAL_TAG");
    }
    const auto penn = parse_penn_tag(std::string_view(line).substr(0, tab));
    const auto uni = parse_universal_tag(std::string_view(line).substr(tab + 1));
    if (!penn || !uni) {
      throw DataError(path + ":" + std::to_string(line_no) +
                      ": unknown tag in mapping: " + line);
    }
    result.table_[static_cast<std::size_t>(*penn)] = *uni;
    covered[static_cast<std::size_t>(*penn)] = true;
  }

  for (std::size_t i = 0; i < kPennTagCount; ++i) {
    if (!covered[i]) {
      throw DataError(path + ": incomplete coarse map, missing tag " +
                      std::string(kPennNames[i]));
    }
  }
  return result;
}

}  // namespace sloggen
