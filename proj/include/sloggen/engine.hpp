#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sloggen/corpus.hpp"
#include "sloggen/fitness.hpp"
#include "sloggen/rng.hpp"
#include "sloggen/seeds.hpp"
#include "sloggen/text.hpp"

namespace sloggen {

// Provenance of a population member. The mutated class is split by parent
// pool so the generation census can be checked exactly.
enum class Lineage { Sampled, MutatedTop, MutatedBottom, Elite };

std::string_view to_string(Lineage lineage);

struct Individual {
  TaggedSentence sentence;
  std::optional<FitnessReport> fitness;  // cleared by mutation
  Lineage lineage = Lineage::Sampled;
};

struct EngineConfig {
  std::size_t population_size = 120;  // >= 6 and divisible by 6
  std::size_t generations = 50;       // 0 ranks the initial sample
  std::size_t niches = 3;
  std::uint64_t rng_seed = 42;
  EnglishnessMeasure measure;
  FitnessWeights weights = default_weights();
  std::size_t top_output = 10;

  void validate() const;  // throws ConfigError
};

struct GenerationStats {
  std::size_t generation = 0;
  double best = 0.0;
  double mean = 0.0;
};

struct RankedSlogan {
  std::string text;  // display rendering
  FitnessReport fitness;
};

struct NicheResult {
  std::size_t niche_id = 0;
  std::vector<RankedSlogan> top;  // ranked, deduplicated by text
  std::vector<GenerationStats> history;
};

// Shared, read-only state for a run.
struct EngineContext {
  const SloganCorpus* corpus = nullptr;
  const Tagger* tagger = nullptr;
  const SeedLexicon* seeds = nullptr;
  const ScoringContext* scoring = nullptr;
  EngineConfig config;
};

struct MutationResult {
  Individual individual;
  bool mutated = false;  // false when no mutable slot existed
};

// Replaces one uniformly chosen noun/verb slot with a uniformly chosen seed
// word of the same class, re-tags and re-renders. Lineage is left for the
// caller to assign.
MutationResult mutate(const Individual& individual, const SeedLexicon& seeds,
                      const Tagger& tagger, Rng& rng);

// One generation: 1/3 fresh samples, 1/6 mutants of distinct top-third
// parents, 1/6 mutants of distinct bottom-third parents, 1/3 elites carried
// over unmodified. Input must be fully scored; output is fully scored.
std::vector<Individual> step_generation(const std::vector<Individual>& pop,
                                        const EngineContext& ctx,
                                        Rng& sample_rng, Rng& mutate_rng);

NicheResult run_niche(const EngineContext& ctx, std::size_t niche_id);

// Runs niches 1..config.niches (or an explicit id list) on independent RNG
// streams. Per-niche failures are collected into `errors` when given; at
// least one niche must succeed or RunFailedError is thrown.
std::vector<NicheResult> run(const EngineContext& ctx,
                             std::vector<std::string>* errors = nullptr);
std::vector<NicheResult> run(const EngineContext& ctx,
                             std::span<const std::size_t> niche_ids,
                             std::vector<std::string>* errors = nullptr);

// Ranking used everywhere results are ordered: total descending, then
// sentence text ascending, then insertion order.
bool ranks_before(const Individual& a, const Individual& b);

}  // namespace sloggen
