#include "sloggen/corpus.hpp"

#include <fstream>
#include <sstream>

#include "sloggen/errors.hpp"

namespace sloggen {

namespace {

std::string trim(const std::string& s) {
  std::size_t begin = 0;
  std::size_t end = s.size();
  while (begin < end && std::isspace(static_cast<unsigned char>(s[begin]))) {
    ++begin;
  }
  while (end > begin && std::isspace(static_cast<unsigned char>(s[end - 1]))) {
    --end;
  }
  return s.substr(begin, end - begin);
}

}  // namespace

SloganCorpus load_corpus(const std::string& path, const Tagger& tagger) {
  std::ifstream in(path);
  if (!in) throw FileNotFoundError(path);

  SloganCorpus corpus;
  corpus.source_path = path;

  std::unordered_set<std::string> seen;
  std::string line;
  while (std::getline(in, line)) {
    const std::string slogan = trim(line);
    if (slogan.empty()) continue;
    if (!seen.insert(slogan).second) continue;
    corpus.slogans.push_back(tagger.tag_text(slogan));
  }
  if (corpus.slogans.empty()) throw EmptyCorpusError(path);
  return corpus;
}

SkeletonIndex SkeletonIndex::build(const SloganCorpus& corpus) {
  SkeletonIndex index;
  for (const auto& slogan : corpus.slogans) {
    index.skeletons_std_.insert(skeleton_key(slogan, Tagset::Standard));
    index.skeletons_univ_.insert(skeleton_key(slogan, Tagset::Universal));
  }
  auto add_trigrams = [](const std::unordered_set<std::string>& skeletons,
                         std::unordered_set<std::string>& trigrams) {
    for (const auto& key : skeletons) {
      if (key.size() < 3) continue;
      for (std::size_t i = 0; i + 3 <= key.size(); ++i) {
        trigrams.insert(key.substr(i, 3));
      }
    }
  };
  add_trigrams(index.skeletons_std_, index.trigrams_std_);
  add_trigrams(index.skeletons_univ_, index.trigrams_univ_);
  return index;
}

bool SkeletonIndex::contains_skeleton(const std::string& key,
                                      Tagset tagset) const {
  return skeletons(tagset).count(key) > 0;
}

bool SkeletonIndex::contains_trigram(const std::string& key,
                                     Tagset tagset) const {
  return trigrams(tagset).count(key) > 0;
}

std::size_t SkeletonIndex::skeleton_count(Tagset tagset) const {
  return skeletons(tagset).size();
}

std::size_t SkeletonIndex::trigram_count(Tagset tagset) const {
  return trigrams(tagset).size();
}

const std::unordered_set<std::string>& SkeletonIndex::skeletons(
    Tagset tagset) const {
  return tagset == Tagset::Standard ? skeletons_std_ : skeletons_univ_;
}

const std::unordered_set<std::string>& SkeletonIndex::trigrams(
    Tagset tagset) const {
  return tagset == Tagset::Standard ? trigrams_std_ : trigrams_univ_;
}

SurfaceNgramSet load_surface_ngrams(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FileNotFoundError(path);

  SurfaceNgramSet set;
  std::string line;
  while (std::getline(in, line)) {
    const std::string entry = trim(line);
    if (entry.empty() || entry[0] == '#') continue;

    std::istringstream parts(entry);
    std::vector<std::string> words;
    std::string word;
    while (parts >> word) words.push_back(casefold(word));

    if (words.size() == 2) {
      set.bigrams.insert(words[0] + ' ' + words[1]);
    } else if (words.size() == 3) {
      set.trigrams.insert(words[0] + ' ' + words[1] + ' ' + words[2]);
    } else {
      ++set.skipped_lines;
    }
  }
  if (set.bigrams.empty() && set.trigrams.empty()) throw EmptySetError(path);
  return set;
}

TaggedSentence sample_individual(const SloganCorpus& corpus, Rng& rng) {
  return corpus.slogans[rng.bounded(corpus.slogans.size())];
}

}  // namespace sloggen
