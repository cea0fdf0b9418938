#pragma once

#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "sloggen/embedding.hpp"
#include "sloggen/text.hpp"

namespace sloggen {

using StopwordSet = std::unordered_set<std::string>;

StopwordSet load_stopwords(const std::string& path);

enum class WordClass { Noun, Verb };
enum class SeedOrigin { Summary, Related };

std::string_view to_string(SeedOrigin origin);

// Replacement vocabulary for mutation: lowercase nouns and verbs, summary
// words first, then related words in provider order. No duplicates, no
// stopwords.
struct SeedLexicon {
  std::vector<std::string> nouns;
  std::vector<std::string> verbs;
  std::unordered_map<std::string, SeedOrigin> origin;

  bool contains(std::string_view word) const {
    return origin.find(std::string(word)) != origin.end();
  }
  bool empty() const { return nouns.empty() && verbs.empty(); }
};

// Ranked related words of one POS class. Implementations must return single
// lowercase tokens that the tagger classifies as the requested class; callers
// enforce the contract again on the way in.
class RelatedWordProvider {
 public:
  virtual ~RelatedWordProvider() = default;
  virtual std::vector<std::string> related(const std::string& word,
                                           WordClass word_class,
                                           std::size_t max_results) const = 0;
};

// Nouns and verbs of the summary (by universal tag), minus stopwords and
// words shorter than three characters. Throws NoSeedsError when nothing
// survives.
SeedLexicon extract_seeds(std::string_view summary, const Tagger& tagger,
                          const StopwordSet& stopwords);

struct ExpandStats {
  std::size_t provider_failures = 0;
  std::size_t rejected_words = 0;
};

// Appends up to k related words per summary word. Per-word provider failures
// degrade to zero additions for that word and are counted, never fatal.
SeedLexicon expand_seeds(const SeedLexicon& base,
                         const RelatedWordProvider& provider, std::size_t k,
                         const Tagger& tagger, const StopwordSet& stopwords,
                         ExpandStats* stats = nullptr);

// Default provider: k-nearest-neighbour search by cosine over the loaded
// embedding table, restricted to words the tagger classifies as the
// requested class. Ties break lexicographically.
class OfflineRelatedWordProvider : public RelatedWordProvider {
 public:
  OfflineRelatedWordProvider(const EmbeddingTable& table, const Tagger& tagger);

  std::vector<std::string> related(const std::string& word,
                                   WordClass word_class,
                                   std::size_t max_results) const override;

 private:
  const EmbeddingTable& table_;
  std::vector<std::string> nouns_;  // vocabulary partitioned by tagged class
  std::vector<std::string> verbs_;
};

}  // namespace sloggen
