#include "sloggen/seeds.hpp"

#include <algorithm>
#include <fstream>

#include "sloggen/errors.hpp"

namespace sloggen {

namespace {

constexpr std::size_t kMinSeedLength = 3;

UniversalTag target_tag(WordClass word_class) {
  return word_class == WordClass::Noun ? UniversalTag::NOUN
                                       : UniversalTag::VERB;
}

// Single lowercase token of the requested class when tagged in isolation.
bool satisfies_contract(const std::string& word, WordClass word_class,
                        const Tagger& tagger) {
  if (word.empty() || casefold(word) != word) return false;
  auto tokens = tokenize(word);
  if (tokens.size() != 1 || tokens[0].surface != word) return false;
  const auto sentence = tagger.tag(std::move(tokens));
  return sentence.tags[0].universal == target_tag(word_class);
}

}  // namespace

std::string_view to_string(SeedOrigin origin) {
  return origin == SeedOrigin::Summary ? "summary" : "related";
}

StopwordSet load_stopwords(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FileNotFoundError(path);

  StopwordSet words;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    words.insert(casefold(line));
  }
  return words;
}

SeedLexicon extract_seeds(std::string_view summary, const Tagger& tagger,
                          const StopwordSet& stopwords) {
  auto tokens = tokenize(summary);
  if (tokens.empty()) {
    throw NoSeedsError("summary contains no tokens");
  }
  const auto sentence = tagger.tag(std::move(tokens));

  SeedLexicon seeds;
  for (std::size_t i = 0; i < sentence.tokens.size(); ++i) {
    const auto& word = sentence.tokens[i].norm;
    if (word.size() < kMinSeedLength) continue;
    if (stopwords.count(word) > 0) continue;
    if (seeds.contains(word)) continue;

    const UniversalTag tag = sentence.tags[i].universal;
    if (tag == UniversalTag::NOUN) {
      seeds.nouns.push_back(word);
    } else if (tag == UniversalTag::VERB) {
      seeds.verbs.push_back(word);
    } else {
      continue;
    }
    seeds.origin.emplace(word, SeedOrigin::Summary);
  }

  if (seeds.empty()) {
    throw NoSeedsError("no seed nouns or verbs in summary");
  }
  return seeds;
}

SeedLexicon expand_seeds(const SeedLexicon& base,
                         const RelatedWordProvider& provider, std::size_t k,
                         const Tagger& tagger, const StopwordSet& stopwords,
                         ExpandStats* stats) {
  SeedLexicon result = base;
  if (k == 0) return result;

  auto expand_class = [&](const std::vector<std::string>& summary_words,
                          std::vector<std::string>& target,
                          WordClass word_class) {
    for (const auto& word : summary_words) {
      std::vector<std::string> candidates;
      try {
        candidates = provider.related(word, word_class, k);
      } catch (const std::exception&) {
        if (stats) ++stats->provider_failures;
        continue;
      }
      std::size_t added = 0;
      for (const auto& candidate : candidates) {
        if (added >= k) break;
        if (!satisfies_contract(candidate, word_class, tagger)) {
          if (stats) ++stats->rejected_words;
          continue;
        }
        if (candidate.size() < kMinSeedLength) continue;
        if (stopwords.count(candidate) > 0) continue;
        if (result.contains(candidate)) continue;
        target.push_back(candidate);
        result.origin.emplace(candidate, SeedOrigin::Related);
        ++added;
      }
    }
  };

  // Only summary words are expanded; iterating the base lists keeps the
  // provider call order deterministic.
  std::vector<std::string> summary_nouns;
  std::vector<std::string> summary_verbs;
  for (const auto& w : base.nouns) {
    if (base.origin.at(w) == SeedOrigin::Summary) summary_nouns.push_back(w);
  }
  for (const auto& w : base.verbs) {
    if (base.origin.at(w) == SeedOrigin::Summary) summary_verbs.push_back(w);
  }
  expand_class(summary_nouns, result.nouns, WordClass::Noun);
  expand_class(summary_verbs, result.verbs, WordClass::Verb);
  return result;
}

OfflineRelatedWordProvider::OfflineRelatedWordProvider(
    const EmbeddingTable& table, const Tagger& tagger)
    : table_(table) {
  for (const auto& word : table.vocabulary()) {
    auto tokens = tokenize(word);
    if (tokens.size() != 1 || tokens[0].surface != word) continue;
    const auto sentence = tagger.tag(std::move(tokens));
    const UniversalTag tag = sentence.tags[0].universal;
    if (tag == UniversalTag::NOUN) {
      nouns_.push_back(word);
    } else if (tag == UniversalTag::VERB) {
      verbs_.push_back(word);
    }
  }
}

std::vector<std::string> OfflineRelatedWordProvider::related(
    const std::string& word, WordClass word_class,
    std::size_t max_results) const {
  const std::string query = casefold(word);
  const auto query_vec = table_.find(query);
  if (!query_vec || max_results == 0) return {};

  const auto& pool = word_class == WordClass::Noun ? nouns_ : verbs_;
  std::vector<std::pair<double, const std::string*>> scored;
  scored.reserve(pool.size());
  for (const auto& candidate : pool) {
    if (candidate == query) continue;
    const auto vec = table_.find(candidate);
    scored.emplace_back(EmbeddingTable::cosine(*query_vec, *vec), &candidate);
  }

  const std::size_t take = std::min(max_results, scored.size());
  std::partial_sort(scored.begin(), scored.begin() + take, scored.end(),
                    [](const auto& a, const auto& b) {
                      if (a.first != b.first) return a.first > b.first;
                      return *a.second < *b.second;
                    });

  std::vector<std::string> out;
  out.reserve(take);
  for (std::size_t i = 0; i < take; ++i) out.push_back(*scored[i].second);
  return out;
}

}  // namespace sloggen
