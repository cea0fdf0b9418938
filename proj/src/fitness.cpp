#include "sloggen/fitness.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

#include "sloggen/errors.hpp"

namespace sloggen {

namespace {

constexpr std::string_view kMeasureNames[] = {
    "full_skeleton_std", "full_skeleton_univ", "skeleton_trigram_std",
    "skeleton_trigram_univ", "surface_ngram",
};

double clamp01(double v) { return std::min(1.0, std::max(0.0, v)); }

// A content word carries at least one alphanumeric ASCII byte or any
// non-ASCII byte; pure punctuation tokens are not content.
bool has_word_char(std::string_view norm) {
  for (const char c : norm) {
    if (std::isalnum(static_cast<unsigned char>(c))) return true;
    if (static_cast<unsigned char>(c) >= 0x80) return true;
  }
  return false;
}

}  // namespace

std::string_view measure_name(EnglishnessMeasure measure) {
  switch (measure.kind) {
    case MeasureKind::FullSkeleton:
      return measure.tagset == Tagset::Standard ? kMeasureNames[0]
                                                : kMeasureNames[1];
    case MeasureKind::SkeletonTrigram:
      return measure.tagset == Tagset::Standard ? kMeasureNames[2]
                                                : kMeasureNames[3];
    case MeasureKind::SurfaceNgram:
      return kMeasureNames[4];
  }
  return kMeasureNames[0];
}

std::optional<EnglishnessMeasure> parse_measure(std::string_view name) {
  if (name == kMeasureNames[0]) {
    return EnglishnessMeasure{MeasureKind::FullSkeleton, Tagset::Standard};
  }
  if (name == kMeasureNames[1]) {
    return EnglishnessMeasure{MeasureKind::FullSkeleton, Tagset::Universal};
  }
  if (name == kMeasureNames[2]) {
    return EnglishnessMeasure{MeasureKind::SkeletonTrigram, Tagset::Standard};
  }
  if (name == kMeasureNames[3]) {
    return EnglishnessMeasure{MeasureKind::SkeletonTrigram, Tagset::Universal};
  }
  if (name == kMeasureNames[4]) {
    return EnglishnessMeasure{MeasureKind::SurfaceNgram, Tagset::Standard};
  }
  return std::nullopt;
}

FitnessWeights FitnessWeights::normalized(double english_raw,
                                          double similarity_raw) {
  if (!(english_raw >= 0.0) || !(similarity_raw >= 0.0) ||
      !std::isfinite(english_raw) || !std::isfinite(similarity_raw)) {
    throw ConfigError("fitness weights must be finite and non-negative");
  }
  const double sum = english_raw + similarity_raw;
  if (sum <= 0.0) {
    throw ConfigError("fitness weights must not both be zero");
  }
  const double english = english_raw / sum;
  const double similarity = similarity_raw / sum;
  if (!(similarity < english)) {
    throw ConfigError(
        "similarity weight must be strictly smaller than englishness weight");
  }
  return FitnessWeights(english, similarity);
}

FitnessWeights default_weights() { return FitnessWeights::normalized(0.8, 0.2); }

double breakdown_value(const FitnessReport& report, std::string_view name) {
  for (const auto& [key, value] : report.breakdown) {
    if (key == name) return value;
  }
  throw std::out_of_range("no such metric: " + std::string(name));
}

EmbeddingSimilarityProvider::EmbeddingSimilarityProvider(
    const EmbeddingTable& table, const StopwordSet& stopwords)
    : table_(table), stopwords_(stopwords) {}

SimilarityProvider::Scores EmbeddingSimilarityProvider::similarity(
    std::string_view a, std::string_view b) const {
  const auto tokens_a = tokenize(a);
  const auto tokens_b = tokenize(b);

  auto content_set = [this](const std::vector<Token>& tokens) {
    std::unordered_set<std::string> words;
    for (const auto& token : tokens) {
      if (has_word_char(token.norm) && stopwords_.count(token.norm) == 0) {
        words.insert(token.norm);
      }
    }
    return words;
  };
  const auto set_a = content_set(tokens_a);
  const auto set_b = content_set(tokens_b);

  Scores scores;
  if (set_a.empty() && set_b.empty()) {
    scores.jaccard_distance = 0.0;
  } else if (set_a.empty() || set_b.empty()) {
    scores.jaccard_distance = 1.0;
  } else {
    std::size_t intersection = 0;
    for (const auto& word : set_a) intersection += set_b.count(word);
    const std::size_t unions = set_a.size() + set_b.size() - intersection;
    scores.jaccard_distance =
        1.0 - static_cast<double>(intersection) / static_cast<double>(unions);
  }

  auto norms = [](const std::vector<Token>& tokens) {
    std::vector<std::string> out;
    out.reserve(tokens.size());
    for (const auto& token : tokens) out.push_back(token.norm);
    return out;
  };
  const auto centroid_a = table_.centroid(norms(tokens_a));
  const auto centroid_b = table_.centroid(norms(tokens_b));

  if (!centroid_a || !centroid_b) {
    // All words out of vocabulary on one side: no semantic signal.
    scores.cosine = 0.0;
    scores.euclidean_distance = 0.0;
    scores.weighted = 0.0;
    return scores;
  }

  scores.cosine = EmbeddingTable::cosine(*centroid_a, *centroid_b);
  scores.euclidean_distance =
      EmbeddingTable::euclidean(*centroid_a, *centroid_b);
  scores.weighted = 0.25 * (1.0 - scores.jaccard_distance) +
                    0.5 * clamp01(scores.cosine) +
                    0.25 / (1.0 + scores.euclidean_distance);
  return scores;
}

double score_full_skeleton(const TaggedSentence& sentence,
                           const SkeletonIndex& index, Tagset tagset) {
  return index.contains_skeleton(skeleton_key(sentence, tagset), tagset)
             ? 1.0
             : 0.0;
}

double score_skeleton_trigrams(const TaggedSentence& sentence,
                               const SkeletonIndex& index, Tagset tagset) {
  const std::string key = skeleton_key(sentence, tagset);
  if (key.size() < 3) {
    return score_full_skeleton(sentence, index, tagset);
  }
  const std::size_t total = key.size() - 2;
  std::size_t hits = 0;
  for (std::size_t i = 0; i + 3 <= key.size(); ++i) {
    if (index.contains_trigram(key.substr(i, 3), tagset)) ++hits;
  }
  return static_cast<double>(hits) / static_cast<double>(total);
}

double score_surface_ngrams(const TaggedSentence& sentence,
                            const SurfaceNgramSet& ngrams) {
  const auto& tokens = sentence.tokens;
  std::size_t matched = 0;
  for (std::size_t i = 0; i + 2 <= tokens.size(); ++i) {
    if (ngrams.bigrams.count(tokens[i].norm + ' ' + tokens[i + 1].norm) > 0) {
      ++matched;
    }
  }
  for (std::size_t i = 0; i + 3 <= tokens.size(); ++i) {
    if (ngrams.trigrams.count(tokens[i].norm + ' ' + tokens[i + 1].norm + ' ' +
                              tokens[i + 2].norm) > 0) {
      ++matched;
    }
  }
  return clamp01(static_cast<double>(matched) /
                 static_cast<double>(tokens.size()));
}

double similarity_score(std::string_view slogan_text, std::string_view summary,
                        const SimilarityProvider& provider,
                        std::atomic<std::uint64_t>* failures) {
  try {
    return clamp01(provider.similarity(slogan_text, summary).weighted);
  } catch (const std::exception&) {
    if (failures != nullptr) failures->fetch_add(1);
    return 0.0;
  }
}

FitnessReport evaluate(const TaggedSentence& sentence,
                       const ScoringContext& ctx) {
  FitnessReport report;

  const double full_std =
      score_full_skeleton(sentence, *ctx.skeletons, Tagset::Standard);
  const double full_univ =
      score_full_skeleton(sentence, *ctx.skeletons, Tagset::Universal);
  const double tri_std =
      score_skeleton_trigrams(sentence, *ctx.skeletons, Tagset::Standard);
  const double tri_univ =
      score_skeleton_trigrams(sentence, *ctx.skeletons, Tagset::Universal);
  const double surface = score_surface_ngrams(sentence, *ctx.ngrams);

  SimilarityProvider::Scores sims;
  try {
    sims = ctx.provider->similarity(sentence.text, ctx.summary);
  } catch (const std::exception&) {
    ctx.provider_failures.fetch_add(1);
    sims = SimilarityProvider::Scores{};  // placeholder values, weighted 0
  }

  report.breakdown = {
      {"full_skeleton_std", full_std},
      {"full_skeleton_univ", full_univ},
      {"skeleton_trigram_std", tri_std},
      {"skeleton_trigram_univ", tri_univ},
      {"surface_ngram", surface},
      {"sim_jaccard", sims.jaccard_distance},
      {"sim_cosine", sims.cosine},
      {"sim_euclidean", sims.euclidean_distance},
      {"sim_weighted", sims.weighted},
  };

  report.englishness = breakdown_value(report, measure_name(ctx.measure));
  report.similarity = clamp01(sims.weighted);
  report.total = ctx.weights.english() * report.englishness +
                 ctx.weights.similarity() * report.similarity;
  return report;
}

}  // namespace sloggen
