#pragma once

#include <string>
#include <unordered_set>
#include <vector>

#include "sloggen/rng.hpp"
#include "sloggen/text.hpp"

namespace sloggen {

struct SloganCorpus {
  std::vector<TaggedSentence> slogans;
  std::string source_path;
};

// One slogan per line; blank lines and exact duplicates dropped, order kept.
SloganCorpus load_corpus(const std::string& path, const Tagger& tagger);

// Unique corpus skeletons plus the contiguous tag 3-grams over them, held
// separately for each tagset. Immutable after build.
class SkeletonIndex {
 public:
  static SkeletonIndex build(const SloganCorpus& corpus);

  bool contains_skeleton(const std::string& key, Tagset tagset) const;
  bool contains_trigram(const std::string& key, Tagset tagset) const;
  std::size_t skeleton_count(Tagset tagset) const;
  std::size_t trigram_count(Tagset tagset) const;

  const std::unordered_set<std::string>& skeletons(Tagset tagset) const;
  const std::unordered_set<std::string>& trigrams(Tagset tagset) const;

 private:
  std::unordered_set<std::string> skeletons_std_;
  std::unordered_set<std::string> skeletons_univ_;
  std::unordered_set<std::string> trigrams_std_;
  std::unordered_set<std::string> trigrams_univ_;
};

// Case-insensitive surface 2-/3-gram sets. Keys are space-joined norm forms.
struct SurfaceNgramSet {
  std::unordered_set<std::string> bigrams;
  std::unordered_set<std::string> trigrams;
  std::size_t skipped_lines = 0;  // lines whose arity was not 2 or 3
};

SurfaceNgramSet load_surface_ngrams(const std::string& path);

// Uniform draw; the returned sentence is an independent copy.
TaggedSentence sample_individual(const SloganCorpus& corpus, Rng& rng);

}  // namespace sloggen
