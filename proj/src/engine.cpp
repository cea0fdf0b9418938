#include "sloggen/engine.hpp"

#include <algorithm>
#include <numeric>

#include "sloggen/errors.hpp"

namespace sloggen {

namespace {

// Stream ids for the per-niche role split; see rng.hpp.
constexpr std::uint64_t kSamplingStream = 1;
constexpr std::uint64_t kMutationStream = 2;

Individual scored_sample(const EngineContext& ctx, Rng& sample_rng) {
  Individual ind;
  ind.sentence = sample_individual(*ctx.corpus, sample_rng);
  ind.lineage = Lineage::Sampled;
  ind.fitness = evaluate(ind.sentence, *ctx.scoring);
  return ind;
}

// Indices of `pop` ordered by the ranking rule. `pop` order is the
// insertion order, which supplies the final tie-break.
std::vector<std::size_t> ranked_indices(const std::vector<Individual>& pop) {
  std::vector<std::size_t> order(pop.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&pop](std::size_t a, std::size_t b) {
                     return ranks_before(pop[a], pop[b]);
                   });
  return order;
}

// k distinct picks from `candidates`, via partial Fisher-Yates.
std::vector<std::size_t> pick_distinct(std::vector<std::size_t> candidates,
                                       std::size_t k, Rng& rng) {
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t j = i + rng.bounded(candidates.size() - i);
    std::swap(candidates[i], candidates[j]);
  }
  candidates.resize(k);
  return candidates;
}

GenerationStats stats_for(std::size_t generation,
                          const std::vector<Individual>& pop) {
  GenerationStats stats;
  stats.generation = generation;
  double best = 0.0;
  double sum = 0.0;
  for (const auto& ind : pop) {
    const double total = ind.fitness->total;
    best = std::max(best, total);
    sum += total;
  }
  stats.best = best;
  stats.mean = pop.empty() ? 0.0 : sum / static_cast<double>(pop.size());
  return stats;
}

}  // namespace

std::string_view to_string(Lineage lineage) {
  switch (lineage) {
    case Lineage::Sampled:
      return "sampled";
    case Lineage::MutatedTop:
      return "mutated_top";
    case Lineage::MutatedBottom:
      return "mutated_bottom";
    case Lineage::Elite:
      return "elite";
  }
  return "sampled";
}

void EngineConfig::validate() const {
  if (population_size < 6 || population_size % 6 != 0) {
    throw ConfigError("population size must be >= 6 and divisible by 6, got " +
                      std::to_string(population_size));
  }
  if (niches == 0) throw ConfigError("niche count must be positive");
  if (top_output == 0) throw ConfigError("top output count must be positive");
}

bool ranks_before(const Individual& a, const Individual& b) {
  const double ta = a.fitness ? a.fitness->total : 0.0;
  const double tb = b.fitness ? b.fitness->total : 0.0;
  if (ta != tb) return ta > tb;
  return a.sentence.text < b.sentence.text;
}

MutationResult mutate(const Individual& individual, const SeedLexicon& seeds,
                      const Tagger& tagger, Rng& rng) {
  std::vector<std::size_t> slots;
  const auto& tags = individual.sentence.tags;
  for (std::size_t i = 0; i < tags.size(); ++i) {
    const UniversalTag tag = tags[i].universal;
    if ((tag == UniversalTag::NOUN && !seeds.nouns.empty()) ||
        (tag == UniversalTag::VERB && !seeds.verbs.empty())) {
      slots.push_back(i);
    }
  }
  if (slots.empty()) {
    return {individual, false};
  }

  const std::size_t slot = slots[rng.bounded(slots.size())];
  const auto& pool = tags[slot].universal == UniversalTag::NOUN ? seeds.nouns
                                                                : seeds.verbs;
  const std::string& replacement = pool[rng.bounded(pool.size())];

  auto tokens = individual.sentence.tokens;
  tokens[slot] = make_token(replacement);

  MutationResult result;
  result.individual.sentence = tagger.tag(std::move(tokens));
  result.individual.fitness = std::nullopt;
  result.individual.lineage = individual.lineage;
  result.mutated = true;
  return result;
}

std::vector<Individual> step_generation(const std::vector<Individual>& pop,
                                        const EngineContext& ctx,
                                        Rng& sample_rng, Rng& mutate_rng) {
  const std::size_t n = pop.size();
  const std::size_t third = n / 3;
  const std::size_t sixth = n / 6;

  const auto order = ranked_indices(pop);
  const std::vector<std::size_t> top_third(order.begin(), order.begin() + third);
  const std::vector<std::size_t> bottom_third(order.end() - third, order.end());

  std::vector<Individual> next;
  next.reserve(n);

  // 1/3 fresh corpus samples.
  for (std::size_t i = 0; i < third; ++i) {
    next.push_back(scored_sample(ctx, sample_rng));
  }

  // 1/6 mutants of distinct top-third parents, 1/6 of bottom-third parents.
  auto add_mutants = [&](const std::vector<std::size_t>& pool,
                         Lineage lineage) {
    for (const std::size_t parent : pick_distinct(pool, sixth, mutate_rng)) {
      auto result = mutate(pop[parent], *ctx.seeds, *ctx.tagger, mutate_rng);
      result.individual.lineage = lineage;
      if (!result.individual.fitness) {
        result.individual.fitness =
            evaluate(result.individual.sentence, *ctx.scoring);
      }
      next.push_back(std::move(result.individual));
    }
  };
  add_mutants(top_third, Lineage::MutatedTop);
  add_mutants(bottom_third, Lineage::MutatedBottom);

  // 1/3 elites, fitness retained.
  for (std::size_t i = 0; i < third; ++i) {
    Individual elite = pop[order[i]];
    elite.lineage = Lineage::Elite;
    next.push_back(std::move(elite));
  }
  return next;
}

NicheResult run_niche(const EngineContext& ctx, std::size_t niche_id) {
  const auto& config = ctx.config;
  const std::uint64_t niche_seed = derive_stream(config.rng_seed, niche_id);
  Rng sample_rng(derive_stream(niche_seed, kSamplingStream));
  Rng mutate_rng(derive_stream(niche_seed, kMutationStream));

  std::vector<Individual> pop;
  pop.reserve(config.population_size);
  for (std::size_t i = 0; i < config.population_size; ++i) {
    pop.push_back(scored_sample(ctx, sample_rng));
  }

  NicheResult result;
  result.niche_id = niche_id;
  result.history.push_back(stats_for(0, pop));

  for (std::size_t gen = 1; gen <= config.generations; ++gen) {
    pop = step_generation(pop, ctx, sample_rng, mutate_rng);
    result.history.push_back(stats_for(gen, pop));
  }

  // Ranked output, deduplicated on the rendered text.
  std::unordered_set<std::string> seen;
  for (const std::size_t idx : ranked_indices(pop)) {
    if (result.top.size() >= std::min(config.top_output, pop.size())) break;
    std::string text = display_text(pop[idx].sentence);
    if (!seen.insert(text).second) continue;
    result.top.push_back({std::move(text), *pop[idx].fitness});
  }
  return result;
}

std::vector<NicheResult> run(const EngineContext& ctx,
                             std::vector<std::string>* errors) {
  std::vector<std::size_t> ids(ctx.config.niches);
  std::iota(ids.begin(), ids.end(), 1);
  return run(ctx, ids, errors);
}

std::vector<NicheResult> run(const EngineContext& ctx,
                             std::span<const std::size_t> niche_ids,
                             std::vector<std::string>* errors) {
  ctx.config.validate();

  std::vector<NicheResult> results;
  std::vector<std::string> failures;
  for (const std::size_t id : niche_ids) {
    try {
      results.push_back(run_niche(ctx, id));
    } catch (const std::exception& e) {
      failures.push_back("niche " + std::to_string(id) + ": " + e.what());
    }
  }
  if (errors != nullptr) *errors = failures;
  if (results.empty()) {
    std::string message = "all niches failed";
    for (const auto& f : failures) message += "; " + f;
    throw RunFailedError(message);
  }
  return results;
}

}  // namespace sloggen
