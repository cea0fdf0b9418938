#include "sloggen/report.hpp"

#include <iomanip>
#include <sstream>

namespace sloggen {

namespace {

Json ranked_json(const std::vector<RankedSlogan>& top) {
  Json out = Json::array();
  std::size_t rank = 1;
  for (const auto& entry : top) {
    Json item;
    item["rank"] = rank++;
    item["text"] = entry.text;
    item["length"] = tokenize(entry.text).size();
    item["fitness"] = fitness_json(entry.fitness);
    out.push_back(std::move(item));
  }
  return out;
}

std::string format_total(double value) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(4) << value;
  return out.str();
}

}  // namespace

Json fitness_json(const FitnessReport& report) {
  Json out;
  out["englishness"] = report.englishness;
  out["similarity"] = report.similarity;
  out["total"] = report.total;
  Json breakdown;
  for (const auto& [name, value] : report.breakdown) breakdown[name] = value;
  out["breakdown"] = std::move(breakdown);
  return out;
}

Json seed_lexicon_json(const SeedLexicon& seeds) {
  auto words_json = [&seeds](const std::vector<std::string>& words) {
    Json out = Json::array();
    for (const auto& word : words) {
      Json item;
      item["word"] = word;
      item["origin"] = std::string(to_string(seeds.origin.at(word)));
      out.push_back(std::move(item));
    }
    return out;
  };
  Json out;
  out["nouns"] = words_json(seeds.nouns);
  out["verbs"] = words_json(seeds.verbs);
  return out;
}

Json niche_json(const NicheResult& result) {
  Json out;
  out["id"] = result.niche_id;
  out["top"] = ranked_json(result.top);
  Json history = Json::array();
  for (const auto& stats : result.history) {
    Json item;
    item["generation"] = stats.generation;
    item["best"] = stats.best;
    item["mean"] = stats.mean;
    history.push_back(std::move(item));
  }
  out["history"] = std::move(history);
  return out;
}

Json config_json(const ReportConfig& config) {
  Json out;
  out["population"] = config.engine.population_size;
  out["generations"] = config.engine.generations;
  out["niches"] = config.engine.niches;
  out["seed"] = config.engine.rng_seed;
  out["measure"] = std::string(measure_name(config.engine.measure));
  out["w_english"] = config.engine.weights.english();
  out["w_similarity"] = config.engine.weights.similarity();
  out["top"] = config.engine.top_output;
  out["related_k"] = config.related_k;
  out["provider"] = config.provider_name;
  Json files;
  files["corpus"] = config.paths.corpus;
  files["ngrams"] = config.paths.ngrams;
  files["embeddings"] = config.paths.embeddings;
  files["tag_lexicon"] = config.paths.tag_lexicon;
  files["coarse_map"] = config.paths.coarse_map;
  files["stopwords"] = config.paths.stopwords;
  out["data_files"] = std::move(files);
  return out;
}

Json warnings_json(const RunWarnings& warnings) {
  Json out;
  out["provider_failures"] = warnings.provider_failures;
  out["skipped_ngram_lines"] = warnings.skipped_ngram_lines;
  out["seed_provider_failures"] = warnings.seed_provider_failures;
  out["rejected_related_words"] = warnings.rejected_related_words;
  out["niche_errors"] = warnings.niche_errors;
  return out;
}

Json generate_report(const ReportConfig& config, const std::string& summary,
                     const SeedLexicon& seeds,
                     const std::vector<NicheResult>& niches,
                     const RunWarnings& warnings,
                     std::optional<double> duration_ms) {
  Json out;
  out["command"] = "generate";
  out["config"] = config_json(config);
  out["summary"] = summary;
  out["seed_lexicon"] = seed_lexicon_json(seeds);
  Json niche_array = Json::array();
  for (const auto& niche : niches) niche_array.push_back(niche_json(niche));
  out["niches"] = std::move(niche_array);
  out["warnings"] = warnings_json(warnings);
  if (duration_ms) out["duration_ms"] = *duration_ms;
  return out;
}

Json compare_report(const ReportConfig& config, const std::string& summary,
                    const SeedLexicon& seeds,
                    const std::vector<MeasureGroup>& groups,
                    const RunWarnings& warnings,
                    std::optional<double> duration_ms) {
  Json out;
  out["command"] = "compare_measures";
  out["config"] = config_json(config);
  out["summary"] = summary;
  out["seed_lexicon"] = seed_lexicon_json(seeds);
  Json group_array = Json::array();
  for (const auto& group : groups) {
    Json item;
    item["measure"] = std::string(measure_name(group.measure));
    item["mean_top_length"] = group.mean_top_length;
    item["niche"] = niche_json(group.result);
    group_array.push_back(std::move(item));
  }
  out["groups"] = std::move(group_array);
  out["warnings"] = warnings_json(warnings);
  if (duration_ms) out["duration_ms"] = *duration_ms;
  return out;
}

Json score_report(const ReportConfig& config, const std::string& text,
                  const FitnessReport& fitness, const RunWarnings& warnings) {
  Json out;
  out["command"] = "score";
  out["config"] = config_json(config);
  out["text"] = text;
  out["fitness"] = fitness_json(fitness);
  out["warnings"] = warnings_json(warnings);
  return out;
}

std::string generate_text(const ReportConfig& config,
                          const std::string& summary, const SeedLexicon& seeds,
                          const std::vector<NicheResult>& niches,
                          const RunWarnings& warnings,
                          std::optional<double> duration_ms) {
  std::ostringstream out;
  out << "measure: " << measure_name(config.engine.measure)
      << "  population: " << config.engine.population_size
      << "  generations: " << config.engine.generations
      << "  niches: " << config.engine.niches
      << "  seed: " << config.engine.rng_seed << "\n";
  out << "summary: " << summary << "\n";
  out << "seed nouns:";
  for (const auto& word : seeds.nouns) out << ' ' << word;
  out << "\nseed verbs:";
  for (const auto& word : seeds.verbs) out << ' ' << word;
  out << "\n";
  for (const auto& niche : niches) {
    out << "\nniche " << niche.niche_id << "\n";
    std::size_t rank = 1;
    for (const auto& entry : niche.top) {
      out << "  " << rank++ << ". [" << format_total(entry.fitness.total)
          << "] " << entry.text << "\n";
    }
  }
  if (warnings.provider_failures > 0 || warnings.seed_provider_failures > 0 ||
      warnings.skipped_ngram_lines > 0 || !warnings.niche_errors.empty()) {
    out << "\nwarnings: provider_failures=" << warnings.provider_failures
        << " seed_provider_failures=" << warnings.seed_provider_failures
        << " skipped_ngram_lines=" << warnings.skipped_ngram_lines << "\n";
    for (const auto& err : warnings.niche_errors) out << "  " << err << "\n";
  }
  if (duration_ms) out << "\nduration_ms: " << *duration_ms << "\n";
  return out.str();
}

std::string compare_text(const ReportConfig& config,
                         const std::vector<MeasureGroup>& groups,
                         std::optional<double> duration_ms) {
  std::ostringstream out;
  out << "population: " << config.engine.population_size
      << "  generations: " << config.engine.generations
      << "  seed: " << config.engine.rng_seed << "\n";
  for (const auto& group : groups) {
    out << "\n== " << measure_name(group.measure)
        << " (mean top length " << format_total(group.mean_top_length)
        << ") ==\n";
    std::size_t rank = 1;
    for (const auto& entry : group.result.top) {
      out << "  " << rank++ << ". [" << format_total(entry.fitness.total)
          << "] " << entry.text << "\n";
    }
  }
  if (duration_ms) out << "\nduration_ms: " << *duration_ms << "\n";
  return out.str();
}

std::string score_text(const std::string& text, const FitnessReport& fitness) {
  std::ostringstream out;
  out << "text: " << text << "\n";
  out << "englishness: " << fitness.englishness << "\n";
  out << "similarity: " << fitness.similarity << "\n";
  out << "total: " << fitness.total << "\n";
  for (const auto& [name, value] : fitness.breakdown) {
    out << "  " << name << ": " << value << "\n";
  }
  return out.str();
}

}  // namespace sloggen
