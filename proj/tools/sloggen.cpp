// sloggen - evolutionary slogan generation from a product/company summary.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "sloggen/corpus.hpp"
#include "sloggen/embedding.hpp"
#include "sloggen/engine.hpp"
#include "sloggen/errors.hpp"
#include "sloggen/fitness.hpp"
#include "sloggen/http_provider.hpp"
#include "sloggen/report.hpp"
#include "sloggen/seeds.hpp"
#include "sloggen/text.hpp"

namespace {

using namespace sloggen;

struct CliOptions {
  std::string summary_text;
  std::string summary_file;
  std::string corpus_path;
  std::string ngrams_path;
  std::string embeddings_path;
  std::string tag_lexicon_path;
  std::string coarse_map_path;
  std::string stopwords_path;
  std::string measure = "full_skeleton_std";
  double w_english = 0.8;
  double w_similarity = 0.2;
  std::size_t population = 120;
  std::size_t generations = 50;
  std::size_t niches = 3;
  std::size_t top = 10;
  std::uint64_t seed = 42;
  std::string format = "text";
  std::size_t related_k = 5;
  std::string provider = "offline";
  std::string provider_url;
  int provider_timeout_ms = 2000;
  int provider_retries = 2;
  bool timing = false;
  std::string score_text_arg;
};

std::string resolve_path(const std::string& flag_value,
                         const std::string& file_name) {
  if (!flag_value.empty()) return flag_value;
  if (const char* base = std::getenv("SLOGGEN_DATA_DIR")) {
    return std::string(base) + "/" + file_name;
  }
  return "data/" + file_name;
}

DataPaths resolve_paths(const CliOptions& opts) {
  DataPaths paths;
  paths.corpus = resolve_path(opts.corpus_path, "slogans_demo.txt");
  paths.ngrams = resolve_path(opts.ngrams_path, "ngrams_demo.txt");
  paths.embeddings = resolve_path(opts.embeddings_path, "embeddings_demo.txt");
  paths.tag_lexicon = resolve_path(opts.tag_lexicon_path, "tag_lexicon.tsv");
  paths.coarse_map = resolve_path(opts.coarse_map_path, "penn_to_universal.tsv");
  paths.stopwords = resolve_path(opts.stopwords_path, "stopwords.txt");
  return paths;
}

std::string read_summary(const CliOptions& opts) {
  const bool has_text = !opts.summary_text.empty();
  const bool has_file = !opts.summary_file.empty();
  if (has_text == has_file) {
    throw ConfigError("exactly one of --summary and --summary-file required");
  }
  if (has_text) return opts.summary_text;

  std::ifstream in(opts.summary_file);
  if (!in) throw FileNotFoundError(opts.summary_file);
  std::ostringstream content;
  content << in.rdbuf();
  return content.str();
}

struct Pipeline {
  Tagger tagger;
  StopwordSet stopwords;
  SloganCorpus corpus;
  SkeletonIndex index;
  SurfaceNgramSet ngrams;
  EmbeddingTable embeddings;
};

Pipeline load_pipeline(const DataPaths& paths) {
  Tagger tagger = Tagger::load(paths.tag_lexicon, paths.coarse_map);
  StopwordSet stopwords = load_stopwords(paths.stopwords);
  SloganCorpus corpus = load_corpus(paths.corpus, tagger);
  SkeletonIndex index = SkeletonIndex::build(corpus);
  SurfaceNgramSet ngrams = load_surface_ngrams(paths.ngrams);
  EmbeddingTable embeddings = EmbeddingTable::load(paths.embeddings);
  return Pipeline{std::move(tagger), std::move(stopwords), std::move(corpus),
                  std::move(index),  std::move(ngrams),    std::move(embeddings)};
}

std::unique_ptr<RelatedWordProvider> make_related_provider(
    const CliOptions& opts, const Pipeline& pipeline) {
  if (opts.provider == "offline") {
    return std::make_unique<OfflineRelatedWordProvider>(pipeline.embeddings,
                                                        pipeline.tagger);
  }
  if (opts.provider_url.empty()) {
    throw ConfigError("--provider http requires --provider-url");
  }
  HttpProviderOptions http;
  http.url = opts.provider_url;
  http.timeout_ms = opts.provider_timeout_ms;
  http.max_retries = opts.provider_retries;
  return std::make_unique<HttpRelatedWordProvider>(std::move(http));
}

EngineConfig build_engine_config(const CliOptions& opts) {
  const auto measure = parse_measure(opts.measure);
  if (!measure) {
    throw ConfigError("unknown measure: " + opts.measure);
  }
  EngineConfig config;
  config.population_size = opts.population;
  config.generations = opts.generations;
  config.niches = opts.niches;
  config.rng_seed = opts.seed;
  config.measure = *measure;
  config.weights = FitnessWeights::normalized(opts.w_english, opts.w_similarity);
  config.top_output = opts.top;
  config.validate();
  return config;
}

void emit(const CliOptions& opts, const Json& json, const std::string& text) {
  if (opts.format == "json") {
    std::cout << json.dump(2) << "\n";
  } else {
    std::cout << text;
  }
}

double mean_top_length(const NicheResult& result) {
  if (result.top.empty()) return 0.0;
  std::size_t sum = 0;
  for (const auto& entry : result.top) sum += tokenize(entry.text).size();
  return static_cast<double>(sum) / static_cast<double>(result.top.size());
}

int cmd_generate(const CliOptions& opts) {
  const auto start = std::chrono::steady_clock::now();

  const DataPaths paths = resolve_paths(opts);
  const std::string summary = read_summary(opts);
  const EngineConfig engine_config = build_engine_config(opts);
  const Pipeline pipeline = load_pipeline(paths);

  const auto related = make_related_provider(opts, pipeline);
  ExpandStats expand_stats;
  const SeedLexicon seeds = expand_seeds(
      extract_seeds(summary, pipeline.tagger, pipeline.stopwords), *related,
      opts.related_k, pipeline.tagger, pipeline.stopwords, &expand_stats);

  EmbeddingSimilarityProvider similarity(pipeline.embeddings,
                                         pipeline.stopwords);
  ScoringContext scoring;
  scoring.skeletons = &pipeline.index;
  scoring.ngrams = &pipeline.ngrams;
  scoring.provider = &similarity;
  scoring.summary = summary;
  scoring.measure = engine_config.measure;
  scoring.weights = engine_config.weights;

  EngineContext engine_ctx;
  engine_ctx.corpus = &pipeline.corpus;
  engine_ctx.tagger = &pipeline.tagger;
  engine_ctx.seeds = &seeds;
  engine_ctx.scoring = &scoring;
  engine_ctx.config = engine_config;

  std::vector<std::string> niche_errors;
  const std::vector<NicheResult> niches = run(engine_ctx, &niche_errors);

  RunWarnings warnings;
  warnings.provider_failures = scoring.provider_failures.load();
  warnings.skipped_ngram_lines = pipeline.ngrams.skipped_lines;
  warnings.seed_provider_failures = expand_stats.provider_failures;
  warnings.rejected_related_words = expand_stats.rejected_words;
  warnings.niche_errors = niche_errors;

  ReportConfig report_config{engine_config, opts.provider, opts.related_k,
                             paths};
  const auto elapsed = std::chrono::duration<double, std::milli>(
                           std::chrono::steady_clock::now() - start)
                           .count();
  const std::optional<double> duration =
      opts.timing ? std::optional<double>(elapsed) : std::nullopt;

  emit(opts,
       generate_report(report_config, summary, seeds, niches, warnings,
                       duration),
       generate_text(report_config, summary, seeds, niches, warnings,
                     duration));
  return 0;
}

int cmd_compare_measures(const CliOptions& opts) {
  const auto start = std::chrono::steady_clock::now();

  const DataPaths paths = resolve_paths(opts);
  const std::string summary = read_summary(opts);
  const EngineConfig engine_config = build_engine_config(opts);
  const Pipeline pipeline = load_pipeline(paths);

  const auto related = make_related_provider(opts, pipeline);
  ExpandStats expand_stats;
  const SeedLexicon seeds = expand_seeds(
      extract_seeds(summary, pipeline.tagger, pipeline.stopwords), *related,
      opts.related_k, pipeline.tagger, pipeline.stopwords, &expand_stats);

  EmbeddingSimilarityProvider similarity(pipeline.embeddings,
                                         pipeline.stopwords);

  // One niche per skeleton-based measure, in the order used throughout.
  // Every group runs on niche id 1 so the sampling streams coincide and
  // output differences come from scoring alone.
  const EnglishnessMeasure variants[] = {
      {MeasureKind::FullSkeleton, Tagset::Standard},
      {MeasureKind::FullSkeleton, Tagset::Universal},
      {MeasureKind::SkeletonTrigram, Tagset::Standard},
      {MeasureKind::SkeletonTrigram, Tagset::Universal},
  };

  std::vector<MeasureGroup> groups;
  std::uint64_t provider_failures = 0;
  for (const auto& variant : variants) {
    ScoringContext scoring;
    scoring.skeletons = &pipeline.index;
    scoring.ngrams = &pipeline.ngrams;
    scoring.provider = &similarity;
    scoring.summary = summary;
    scoring.measure = variant;
    scoring.weights = engine_config.weights;

    EngineContext engine_ctx;
    engine_ctx.corpus = &pipeline.corpus;
    engine_ctx.tagger = &pipeline.tagger;
    engine_ctx.seeds = &seeds;
    engine_ctx.scoring = &scoring;
    engine_ctx.config = engine_config;
    engine_ctx.config.measure = variant;

    MeasureGroup group;
    group.measure = variant;
    group.result = run_niche(engine_ctx, 1);
    group.mean_top_length = mean_top_length(group.result);
    groups.push_back(std::move(group));
    provider_failures += scoring.provider_failures.load();
  }

  RunWarnings warnings;
  warnings.provider_failures = provider_failures;
  warnings.skipped_ngram_lines = pipeline.ngrams.skipped_lines;
  warnings.seed_provider_failures = expand_stats.provider_failures;
  warnings.rejected_related_words = expand_stats.rejected_words;

  ReportConfig report_config{engine_config, opts.provider, opts.related_k,
                             paths};
  const auto elapsed = std::chrono::duration<double, std::milli>(
                           std::chrono::steady_clock::now() - start)
                           .count();
  const std::optional<double> duration =
      opts.timing ? std::optional<double>(elapsed) : std::nullopt;

  emit(opts,
       compare_report(report_config, summary, seeds, groups, warnings,
                      duration),
       compare_text(report_config, groups, duration));
  return 0;
}

int cmd_score(const CliOptions& opts) {
  if (opts.score_text_arg.empty()) {
    throw ConfigError("score requires a non-empty TEXT argument");
  }

  const DataPaths paths = resolve_paths(opts);
  const std::string summary = read_summary(opts);
  const EngineConfig engine_config = build_engine_config(opts);
  const Pipeline pipeline = load_pipeline(paths);

  EmbeddingSimilarityProvider similarity(pipeline.embeddings,
                                         pipeline.stopwords);
  ScoringContext scoring;
  scoring.skeletons = &pipeline.index;
  scoring.ngrams = &pipeline.ngrams;
  scoring.provider = &similarity;
  scoring.summary = summary;
  scoring.measure = engine_config.measure;
  scoring.weights = engine_config.weights;

  const FitnessReport fitness =
      evaluate(pipeline.tagger.tag_text(opts.score_text_arg), scoring);

  RunWarnings warnings;
  warnings.provider_failures = scoring.provider_failures.load();
  warnings.skipped_ngram_lines = pipeline.ngrams.skipped_lines;

  ReportConfig report_config{engine_config, opts.provider, opts.related_k,
                             paths};
  emit(opts, score_report(report_config, opts.score_text_arg, fitness, warnings),
       score_text(opts.score_text_arg, fitness));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CliOptions opts;

  CLI::App app{"evolutionary slogan generation"};
  app.set_config("--config", "", "flat key=value configuration file");
  app.require_subcommand(1);

  app.add_option("--summary", opts.summary_text, "summary text");
  app.add_option("--summary-file", opts.summary_file, "file with summary text");
  app.add_option("--corpus", opts.corpus_path, "slogan corpus file");
  app.add_option("--ngrams", opts.ngrams_path, "surface n-gram file");
  app.add_option("--embeddings", opts.embeddings_path, "word embedding file");
  app.add_option("--tag-lexicon", opts.tag_lexicon_path, "tag lexicon file");
  app.add_option("--coarse-map", opts.coarse_map_path,
                 "Penn-to-universal mapping file");
  app.add_option("--stopwords", opts.stopwords_path, "stopword file");
  app.add_option("--measure", opts.measure,
                 "englishness measure: full_skeleton_std, full_skeleton_univ, "
                 "skeleton_trigram_std, skeleton_trigram_univ, surface_ngram");
  app.add_option("--w-english", opts.w_english, "englishness weight");
  app.add_option("--w-similarity", opts.w_similarity, "similarity weight");
  app.add_option("--population", opts.population,
                 "population size (>= 6, divisible by 6)");
  app.add_option("--generations", opts.generations, "generation count");
  app.add_option("--niches", opts.niches, "niche count");
  app.add_option("--top", opts.top, "slogans to output per niche");
  app.add_option("--seed", opts.seed, "RNG seed");
  app.add_option("--format", opts.format, "output format")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--related-k", opts.related_k,
                 "related words per seed word");
  app.add_option("--provider", opts.provider, "related-word provider")
      ->check(CLI::IsMember({"offline", "http"}));
  app.add_option("--provider-url", opts.provider_url,
                 "base URL for the http provider");
  app.add_option("--provider-timeout-ms", opts.provider_timeout_ms,
                 "http provider timeout");
  app.add_option("--provider-retries", opts.provider_retries,
                 "http provider retry count");
  app.add_flag("--timing", opts.timing,
               "include wall-clock duration in the report");

  auto* generate = app.add_subcommand("generate", "evolve slogans");
  generate->fallthrough();
  auto* compare = app.add_subcommand(
      "compare-measures", "run one niche per skeleton-based measure");
  compare->fallthrough();
  auto* score = app.add_subcommand("score", "score a single slogan");
  score->fallthrough();
  score->add_option("text", opts.score_text_arg, "slogan text to score");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (generate->parsed()) return cmd_generate(opts);
    if (compare->parsed()) return cmd_compare_measures(opts);
    if (score->parsed()) return cmd_score(opts);
    return 2;
  } catch (const ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return 2;
  } catch (const DataError& e) {
    std::cerr << "data error: " << e.what() << "\n";
    return 3;
  } catch (const GenerationError& e) {
    std::cerr << "generation error: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
