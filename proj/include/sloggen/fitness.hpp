#pragma once

#include <atomic>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sloggen/corpus.hpp"
#include "sloggen/embedding.hpp"
#include "sloggen/seeds.hpp"
#include "sloggen/text.hpp"

namespace sloggen {

enum class MeasureKind { FullSkeleton, SkeletonTrigram, SurfaceNgram };

// One englishness measure per run. The tagset is ignored for SurfaceNgram,
// which leaves five valid variants.
struct EnglishnessMeasure {
  MeasureKind kind = MeasureKind::FullSkeleton;
  Tagset tagset = Tagset::Standard;

  bool operator==(const EnglishnessMeasure&) const = default;
};

// Stable measure names: full_skeleton_std, full_skeleton_univ,
// skeleton_trigram_std, skeleton_trigram_univ, surface_ngram.
std::string_view measure_name(EnglishnessMeasure measure);
std::optional<EnglishnessMeasure> parse_measure(std::string_view name);

// Normalized convex pair with the englishness side strictly heavier.
class FitnessWeights {
 public:
  // Accepts raw positive weights and normalizes them to sum to one. Throws
  // ConfigError unless 0 <= similarity < english after normalization.
  static FitnessWeights normalized(double english_raw, double similarity_raw);

  double english() const { return english_; }
  double similarity() const { return similarity_; }

 private:
  FitnessWeights(double english, double similarity)
      : english_(english), similarity_(similarity) {}

  double english_ = 0.8;
  double similarity_ = 0.2;
};

FitnessWeights default_weights();

struct FitnessReport {
  double englishness = 0.0;
  double similarity = 0.0;
  double total = 0.0;
  // Fixed-order per-metric breakdown; see kBreakdownNames.
  std::vector<std::pair<std::string, double>> breakdown;
};

double breakdown_value(const FitnessReport& report, std::string_view name);

// Four-metric semantic similarity contract.
class SimilarityProvider {
 public:
  struct Scores {
    double jaccard_distance = 1.0;  // [0,1], 0 = identical
    double cosine = 0.0;            // [-1,1]
    double euclidean_distance = 0.0;
    double weighted = 0.0;          // [0,1]
  };

  virtual ~SimilarityProvider() = default;
  virtual Scores similarity(std::string_view a, std::string_view b) const = 0;
};

// Default provider: Jaccard distance over content-word sets, cosine and
// Euclidean distance over embedding centroids (one contribution per token
// occurrence, out-of-vocabulary tokens skipped), combined as
//   weighted = 0.25*(1 - jaccard) + 0.5*clamp01(cosine) + 0.25/(1 + euclidean)
// A text with no in-vocabulary token scores weighted 0.
class EmbeddingSimilarityProvider : public SimilarityProvider {
 public:
  EmbeddingSimilarityProvider(const EmbeddingTable& table,
                              const StopwordSet& stopwords);

  Scores similarity(std::string_view a, std::string_view b) const override;

 private:
  const EmbeddingTable& table_;
  const StopwordSet& stopwords_;
};

// 1.0 iff the sentence's skeleton is in the index, else 0.0.
double score_full_skeleton(const TaggedSentence& sentence,
                           const SkeletonIndex& index, Tagset tagset);

// Fraction of the sentence's tag 3-grams found in the index, counted per
// occurrence. Sentences shorter than three tokens fall back to the
// full-skeleton score.
double score_skeleton_trigrams(const TaggedSentence& sentence,
                               const SkeletonIndex& index, Tagset tagset);

// (matched 2-grams + matched 3-grams) / token count, clamped to [0,1].
double score_surface_ngrams(const TaggedSentence& sentence,
                            const SurfaceNgramSet& ngrams);

// Everything evaluate() needs; immutable during a run apart from the
// failure counter, which is atomic so niches may score concurrently.
struct ScoringContext {
  const SkeletonIndex* skeletons = nullptr;
  const SurfaceNgramSet* ngrams = nullptr;
  const SimilarityProvider* provider = nullptr;
  std::string summary;
  EnglishnessMeasure measure;
  FitnessWeights weights = default_weights();
  mutable std::atomic<std::uint64_t> provider_failures{0};
};

// Provider's weighted metric clamped to [0,1]; provider failures score 0.0
// and bump the context counter so evolution never aborts.
double similarity_score(std::string_view slogan_text, std::string_view summary,
                        const SimilarityProvider& provider,
                        std::atomic<std::uint64_t>* failures = nullptr);

FitnessReport evaluate(const TaggedSentence& sentence,
                       const ScoringContext& ctx);

}  // namespace sloggen
