#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "sloggen/engine.hpp"
#include "sloggen/seeds.hpp"

namespace sloggen {

using Json = nlohmann::ordered_json;

struct DataPaths {
  std::string corpus;
  std::string ngrams;
  std::string embeddings;
  std::string tag_lexicon;
  std::string coarse_map;
  std::string stopwords;
};

struct RunWarnings {
  std::uint64_t provider_failures = 0;     // similarity provider
  std::size_t skipped_ngram_lines = 0;     // bad arity in the n-gram file
  std::size_t seed_provider_failures = 0;  // related-word provider
  std::size_t rejected_related_words = 0;  // contract violations
  std::vector<std::string> niche_errors;
};

struct ReportConfig {
  EngineConfig engine;
  std::string provider_name;  // "offline" or "http"
  std::size_t related_k = 5;
  DataPaths paths;
};

Json fitness_json(const FitnessReport& report);
Json seed_lexicon_json(const SeedLexicon& seeds);
Json niche_json(const NicheResult& result);
Json config_json(const ReportConfig& config);
Json warnings_json(const RunWarnings& warnings);

Json generate_report(const ReportConfig& config, const std::string& summary,
                     const SeedLexicon& seeds,
                     const std::vector<NicheResult>& niches,
                     const RunWarnings& warnings,
                     std::optional<double> duration_ms);

struct MeasureGroup {
  EnglishnessMeasure measure;
  NicheResult result;
  double mean_top_length = 0.0;  // mean token count over the top list
};

Json compare_report(const ReportConfig& config, const std::string& summary,
                    const SeedLexicon& seeds,
                    const std::vector<MeasureGroup>& groups,
                    const RunWarnings& warnings,
                    std::optional<double> duration_ms);

Json score_report(const ReportConfig& config, const std::string& text,
                  const FitnessReport& fitness, const RunWarnings& warnings);

// Line-oriented text renderings of the same content.
std::string generate_text(const ReportConfig& config, const std::string& summary,
                          const SeedLexicon& seeds,
                          const std::vector<NicheResult>& niches,
                          const RunWarnings& warnings,
                          std::optional<double> duration_ms);
std::string compare_text(const ReportConfig& config,
                         const std::vector<MeasureGroup>& groups,
                         std::optional<double> duration_ms);
std::string score_text(const std::string& text, const FitnessReport& fitness);

}  // namespace sloggen
