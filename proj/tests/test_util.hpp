#pragma once

// Shared fixtures: shipped data paths, lazily loaded singletons, and small
// deterministic generators used by the property-style tests.

#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "sloggen/corpus.hpp"
#include "sloggen/embedding.hpp"
#include "sloggen/rng.hpp"
#include "sloggen/seeds.hpp"
#include "sloggen/text.hpp"

namespace testutil {

inline std::string data_path(const std::string& name) {
  return std::string(SLOGGEN_DATA_DIR_PATH) + "/" + name;
}

inline const sloggen::Tagger& tagger() {
  static const sloggen::Tagger instance = sloggen::Tagger::load(
      data_path("tag_lexicon.tsv"), data_path("penn_to_universal.tsv"));
  return instance;
}

inline const sloggen::StopwordSet& stopwords() {
  static const sloggen::StopwordSet instance =
      sloggen::load_stopwords(data_path("stopwords.txt"));
  return instance;
}

inline const sloggen::SloganCorpus& demo_corpus() {
  static const sloggen::SloganCorpus instance =
      sloggen::load_corpus(data_path("slogans_demo.txt"), tagger());
  return instance;
}

inline const sloggen::EmbeddingTable& embeddings() {
  static const sloggen::EmbeddingTable instance =
      sloggen::EmbeddingTable::load(data_path("embeddings_demo.txt"));
  return instance;
}

// A word pool mixing lexicon-covered words with out-of-lexicon shapes, used
// to build random sentences.
inline const std::vector<std::string>& word_pool() {
  static const std::vector<std::string> pool = {
      "the",     "a",       "magic",    "taste",   "world",   "life",
      "quality", "you",     "can",      "trust",   "of",      "in",
      "your",    "day",     "every",    "is",      "for",     "we",
      "make",    "things",  "simple",   "better",  "go",      "fresh",
      "zorp",    "blivet",  "craftly",  "snorfing", "glorped", "quux",
      "7",       "42",      ",",        ".",       "!",       "brand",
      "home",    "comfort", "discover", "together",
  };
  return pool;
}

inline std::vector<sloggen::Token> random_tokens(sloggen::Rng& rng,
                                                 std::size_t min_len = 1,
                                                 std::size_t max_len = 8) {
  const auto& pool = word_pool();
  const std::size_t len = min_len + rng.bounded(max_len - min_len + 1);
  std::vector<sloggen::Token> tokens;
  tokens.reserve(len);
  for (std::size_t i = 0; i < len; ++i) {
    tokens.push_back(sloggen::make_token(pool[rng.bounded(pool.size())]));
  }
  return tokens;
}

inline sloggen::TaggedSentence random_sentence(sloggen::Rng& rng,
                                               std::size_t min_len = 1,
                                               std::size_t max_len = 8) {
  return tagger().tag(random_tokens(rng, min_len, max_len));
}

// Random mini-corpus built in memory; no file needed.
inline sloggen::SloganCorpus random_corpus(sloggen::Rng& rng,
                                           std::size_t max_slogans = 20) {
  sloggen::SloganCorpus corpus;
  corpus.source_path = "<synthetic>";
  const std::size_t count = 1 + rng.bounded(max_slogans);
  for (std::size_t i = 0; i < count; ++i) {
    corpus.slogans.push_back(random_sentence(rng, 1, 8));
  }
  return corpus;
}

inline std::string write_temp_file(const std::string& name,
                                   const std::string& contents) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream out(path);
  out << contents;
  out.close();
  return path.string();
}

}  // namespace testutil
