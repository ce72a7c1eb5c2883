// Copyright 2026 The Epicorpus Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli/cli.h"

#include <CLI11.hpp>
#include <pthread.h>
#include <signal.h>

#include <cctype>
#include <condition_variable>
#include <filesystem>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <mutex>
#include <optional>
#include <sstream>
#include <set>
#include <thread>

#include "epicorpus/analytics/frequency.h"
#include "epicorpus/analytics/lda.h"
#include "epicorpus/analytics/stats.h"
#include "epicorpus/annotation/standoff.h"
#include "epicorpus/common/error.h"
#include "epicorpus/common/text_util.h"
#include "epicorpus/corpus/corpus_io.h"
#include "epicorpus/corpus/json.h"
#include "epicorpus/corpus/validate.h"
#include "epicorpus/index/index.h"
#include "epicorpus/ingest/pipeline.h"
#include "epicorpus/service/service.h"

namespace epicorpus {

namespace fs = std::filesystem;

namespace {

// Thrown by actions that have already reported per-item problems.
struct ReportedFailure {};

// CLI11 reads the config file before the environment and lets the first
// value win; dropping file entries whose env var is set makes the
// environment override the file while flags still override both.
class EnvOverridesConfig : public CLI::ConfigINI {
 public:
  std::vector<CLI::ConfigItem> from_config(std::istream &input) const override {
    static const std::map<std::string, const char *> kServeEnv = {
        {"index", "INDEX_DIR"},
        {"port", "PORT"},
        {"pages", "PAGE_IMAGE_DIR"},
        {"cors-origin", "CORS_ORIGIN"}};
    std::vector<CLI::ConfigItem> items = CLI::ConfigINI::from_config(input);
    std::erase_if(items, [](const CLI::ConfigItem &item) {
      if (item.parents != std::vector<std::string>{"serve"}) return false;
      auto it = kServeEnv.find(item.name);
      if (it == kServeEnv.end()) return false;
      const char *value = std::getenv(it->second);
      return value != nullptr && *value != '\0';
    });
    return items;
  }
};

std::set<std::string> WordSet(const std::string &list) {
  std::set<std::string> out;
  for (const std::string &w : Split(list, ',')) {
    std::string word = ToLower(Trim(w));
    if (!word.empty()) out.insert(word);
  }
  return out;
}

std::string Fixed(double value) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(2) << value;
  return s.str();
}

// Left-aligned first column, right-aligned others.
void PrintTable(std::ostream &out, const std::vector<std::vector<std::string>> &rows) {
  std::vector<std::size_t> widths;
  for (const auto &row : rows) {
    widths.resize(std::max(widths.size(), row.size()), 0);
    for (std::size_t c = 0; c < row.size(); ++c) {
      widths[c] = std::max(widths[c], row[c].size());
    }
  }
  for (const auto &row : rows) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c > 0) line += "  ";
      std::string pad(widths[c] - row[c].size(), ' ');
      line += c == 0 ? row[c] + pad : pad + row[c];
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out << line << '\n';
  }
}

struct ResourceFlags {
  std::vector<std::string> lexicons;
  std::string gazetteer;
  std::string dictionary;

  void Register(CLI::App *app) {
    app->add_option("--lexicon", lexicons,
                    "Entity lexicon TSV files replacing the bundled one")
        ->check(CLI::ExistingFile);
    app->add_option("--gazetteer", gazetteer,
                    "Gazetteer TSV replacing the bundled one")
        ->check(CLI::ExistingFile);
    app->add_option("--dictionary", dictionary,
                    "Word list replacing the bundled dictionary")
        ->check(CLI::ExistingFile);
  }
};

// Keeps loaded resources alive for the options that point at them.
struct LoadedResources {
  std::optional<EntityLexicon> lexicon;
  std::optional<Gazetteer> gazetteer;
  std::optional<Vocabulary> dictionary;

  explicit LoadedResources(const ResourceFlags &flags) {
    if (!flags.lexicons.empty()) {
      std::vector<fs::path> paths(flags.lexicons.begin(), flags.lexicons.end());
      lexicon = EntityLexicon::Load(paths);
    }
    if (!flags.gazetteer.empty()) gazetteer = Gazetteer::Load(flags.gazetteer);
    if (!flags.dictionary.empty()) dictionary = Vocabulary::Load(flags.dictionary);
  }
  void Apply(PipelineOptions &options) const {
    if (lexicon) options.lexicon = &*lexicon;
    if (gazetteer) options.gazetteer = &*gazetteer;
    if (dictionary) options.vocabulary = &*dictionary;
  }
  const Vocabulary &Dictionary() const {
    return dictionary ? *dictionary : Vocabulary::Default();
  }
};

// Reports each failed outcome; true when all succeeded.
bool ReportOutcomes(const std::vector<PipelineOutcome> &outcomes, std::ostream &err) {
  bool ok = true;
  for (const PipelineOutcome &o : outcomes) {
    if (o.doc) continue;
    ok = false;
    err << "failed: " << o.doc_id << ": " << o.error_kind << ": " << o.error << '\n';
  }
  return ok;
}

// A raw corpus (directories with text.txt) is run through the pipeline; a
// directory of *.json files is read as processed documents.
std::vector<AnnotatedDocument> LoadDocuments(const fs::path &in,
                                             const PipelineOptions &options,
                                             unsigned jobs, std::ostream &err) {
  if (!ListCorpusDocuments(in).empty()) {
    auto outcomes = RunPipelineOnCorpus(in, options, jobs);
    if (!ReportOutcomes(outcomes, err)) throw ReportedFailure{};
    std::vector<AnnotatedDocument> docs;
    for (PipelineOutcome &o : outcomes) docs.push_back(std::move(*o.doc));
    return docs;
  }
  return LoadProcessedDirectory(in);
}

Json StatsJson(const CorpusStats &s) {
  auto summary = [](const CountSummary &c) {
    return Json{{"min", c.min}, {"max", c.max}, {"mean", c.mean}, {"stddev", c.stddev}};
  };
  Json docs = Json::array();
  for (const DocumentCounts &d : s.documents) {
    docs.push_back({{"doc_id", d.doc_id}, {"sentences", d.sentences}, {"words", d.words}});
  }
  Json histogram = Json::object();
  for (std::size_t b = 0; b < kWordBucketCount; ++b) {
    histogram[kWordBucketNames[b]] = s.histogram[b];
  }
  return {{"documents", docs},
          {"total_sentences", s.total_sentences},
          {"total_words", s.total_words},
          {"sentences", summary(s.sentences)},
          {"words", summary(s.words)},
          {"histogram", histogram}};
}

void PrintStats(std::ostream &out, const CorpusStats &s) {
  std::vector<std::vector<std::string>> rows = {{"doc_id", "sentences", "words"}};
  for (const DocumentCounts &d : s.documents) {
    rows.push_back({d.doc_id, std::to_string(d.sentences), std::to_string(d.words)});
  }
  rows.push_back({"total", std::to_string(s.total_sentences),
                  std::to_string(s.total_words)});
  rows.push_back({"min", std::to_string(s.sentences.min), std::to_string(s.words.min)});
  rows.push_back({"max", std::to_string(s.sentences.max), std::to_string(s.words.max)});
  rows.push_back({"mean", Fixed(s.sentences.mean), Fixed(s.words.mean)});
  rows.push_back({"stddev", Fixed(s.sentences.stddev), Fixed(s.words.stddev)});
  PrintTable(out, rows);
  out << '\n';
  std::vector<std::vector<std::string>> buckets = {{"words", "documents"}};
  for (std::size_t b = 0; b < kWordBucketCount; ++b) {
    buckets.push_back({kWordBucketNames[b], std::to_string(s.histogram[b])});
  }
  PrintTable(out, buckets);
}

std::pair<int, int> ParseYears(const std::string &s) {
  std::vector<std::string> parts = Split(s, ':');
  auto year = [&](const std::string &p) {
    if (p.empty() || !IsAllDigits(p) || p.size() > 4) {
      throw Error(ErrorKind::kInvalidArgument,
                  "--years expects FROM:TO, e.g. 1894:1896, got '" + s + "'");
    }
    return std::stoi(p);
  };
  if (parts.size() == 1) return {year(parts[0]), year(parts[0])};
  if (parts.size() != 2) year("");
  int from = year(parts[0]), to = year(parts[1]);
  if (from > to) {
    throw Error(ErrorKind::kInvalidArgument, "--years range is reversed: " + s);
  }
  return {from, to};
}

// ---- serve ----

int Serve(SearchService &service, std::ostream &out, std::ostream &err) {
  // Signals are taken by a dedicated thread so shutdown is an ordinary call.
  sigset_t signals;
  sigemptyset(&signals);
  sigaddset(&signals, SIGINT);
  sigaddset(&signals, SIGTERM);
  pthread_sigmask(SIG_BLOCK, &signals, nullptr);

  if (!service.config().index_dir.empty()) {
    try {
      service.ReloadIfChanged();
    } catch (const Error &e) {
      err << "warning: " << ErrorKindName(e.kind()) << ": " << e.what()
          << " (serving without an index)\n";
    }
  }
  HttpServer server(service);
  int port = server.Bind();
  out << "listening on http://" << service.config().host << ":" << port << std::endl;

  std::mutex mutex;
  std::condition_variable wake;
  bool stopping = false;
  std::thread signal_thread([&] {
    int sig = 0;
    sigwait(&signals, &sig);
    {
      std::lock_guard<std::mutex> lock(mutex);
      stopping = true;
    }
    wake.notify_all();
    server.Stop();
  });
  std::thread reload_thread([&] {
    const int seconds = service.config().reload_seconds;
    std::unique_lock<std::mutex> lock(mutex);
    while (!stopping) {
      if (seconds <= 0) {
        wake.wait(lock, [&] { return stopping; });
        break;
      }
      wake.wait_for(lock, std::chrono::seconds(seconds));
      if (stopping) break;
      lock.unlock();
      try {
        if (service.ReloadIfChanged()) {
          out << "loaded index " << service.Snapshot()->version() << std::endl;
        }
      } catch (const Error &e) {
        err << "warning: reload failed: " << ErrorKindName(e.kind()) << ": "
            << e.what() << std::endl;
      }
      lock.lock();
    }
  });
  server.Listen();
  {
    std::lock_guard<std::mutex> lock(mutex);
    if (!stopping) kill(getpid(), SIGTERM);  // releases the signal thread
  }
  signal_thread.join();
  reload_thread.join();
  return kExitOk;
}

}  // namespace

int RunCli(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
  CLI::App app{"Annotate, index, search and analyse OCR'd epidemic reports.",
               "epicorpus"};
  app.set_config("--config", "",
                 "Read options from a key=value file; [section] headers name "
                 "subcommands, e.g. [index.build]");
  app.config_formatter(std::make_shared<EnvOverridesConfig>());
  app.require_subcommand(1);
  app.option_defaults()->always_capture_default();
  unsigned jobs = 1;
  app.add_option("--jobs,-j", jobs, "Worker threads for per-document work")
      ->check(CLI::Range(1u, 256u));

  std::function<int()> action;

  // pipeline run
  auto *pipeline = app.add_subcommand("pipeline", "Process a raw corpus")
                       ->require_subcommand(1);
  auto *run = pipeline->add_subcommand(
      "run", "Run the annotation pipeline over corpus/<doc_id>/ directories");
  std::string run_in, run_out;
  bool no_hyphenation = false, no_corrections = false, no_entities = false,
       no_geo = false;
  ResourceFlags run_resources;
  run->add_option("--in", run_in, "Raw corpus directory")
      ->required()
      ->check(CLI::ExistingDirectory);
  run->add_option("--out", run_out, "Output directory for <doc_id>.json")->required();
  run->add_flag("--no-hyphenation", no_hyphenation, "Skip broken-word repair");
  run->add_flag("--no-corrections", no_corrections,
                "Keep manual Note-field corrections as attributes");
  run->add_flag("--no-entities", no_entities, "Skip automatic entity recognition");
  run->add_flag("--no-geo", no_geo, "Skip geo-resolution");
  run_resources.Register(run);
  run->callback([&] {
    action = [&] {
      LoadedResources resources(run_resources);
      PipelineOptions options;
      options.repair_hyphenation = !no_hyphenation;
      options.apply_corrections = !no_corrections;
      options.annotate_entities = !no_entities;
      options.resolve_locations = !no_geo;
      resources.Apply(options);
      auto outcomes = RunPipelineOnCorpus(run_in, options, jobs);
      fs::create_directories(run_out);
      std::size_t written = 0;
      for (const PipelineOutcome &o : outcomes) {
        if (!o.doc) continue;
        SaveProcessedDocument(fs::path(run_out) / (o.doc_id + ".json"), *o.doc);
        ++written;
      }
      bool ok = ReportOutcomes(outcomes, err);
      out << "processed " << written << " of " << outcomes.size() << " documents\n";
      return ok ? kExitOk : kExitFailure;
    };
  });

  // ann import | export | validate
  auto *ann = app.add_subcommand("ann", "Standoff annotation files")
                  ->require_subcommand(1);
  auto *import = ann->add_subcommand(
      "import", "Read a .txt/.ann pair into a document JSON file");
  std::string import_text, import_ann, import_meta, import_out;
  import->add_option("--text", import_text, "Text file")
      ->required()
      ->check(CLI::ExistingFile);
  import->add_option("--ann", import_ann, "Standoff file")
      ->required()
      ->check(CLI::ExistingFile);
  import->add_option("--meta", import_meta, "meta.json (default: doc_id from --text)")
      ->check(CLI::ExistingFile);
  import->add_option("--out", import_out, "Document JSON to write")->required();
  import->callback([&] {
    action = [&] {
      AnnotatedDocument doc =
          ParseStandoff(ReadFile(import_text), ReadFile(import_ann), import_ann);
      if (!import_meta.empty()) {
        doc.metadata = LoadMetadata(import_meta);
      } else {
        doc.metadata.doc_id = fs::path(import_text).stem().string();
      }
      auto violations = import_meta.empty() ? ValidateAnnotations(doc)
                                            : ValidateDocument(doc);
      for (const Violation &v : violations) {
        err << "violation: " << v.code << ": " << v.message << '\n';
      }
      if (!violations.empty()) return kExitFailure;
      SaveProcessedDocument(import_out, doc);
      out << "imported " << doc.zones.size() << " zones and " << doc.entities.size()
          << " entities\n";
      return kExitOk;
    };
  });

  auto *exporter = ann->add_subcommand("export", "Write a document's annotations");
  std::string export_in, export_out, export_text;
  exporter->add_option("--in", export_in, "Document JSON")
      ->required()
      ->check(CLI::ExistingFile);
  exporter->add_option("--out", export_out, "Standoff file to write")->required();
  exporter->add_option("--text-out", export_text, "Also write the document text");
  exporter->callback([&] {
    action = [&] {
      AnnotatedDocument doc = LoadProcessedDocument(export_in);
      WriteFile(export_out, EmitStandoff(doc));
      if (!export_text.empty()) WriteFile(export_text, doc.text);
      return kExitOk;
    };
  });

  auto *validate = ann->add_subcommand("validate", "Check a standoff file");
  std::string validate_ann, validate_text;
  validate->add_option("file", validate_ann, "Standoff file")
      ->required()
      ->check(CLI::ExistingFile);
  validate->add_option("--text", validate_text,
                       "Text file (default: the .ann path with .txt)");
  validate->callback([&] {
    action = [&] {
      fs::path text = validate_text.empty()
                          ? fs::path(validate_ann).replace_extension(".txt")
                          : fs::path(validate_text);
      AnnotatedDocument doc =
          ParseStandoff(ReadFile(text), ReadFile(validate_ann), validate_ann);
      auto violations = ValidateAnnotations(doc);
      for (const Violation &v : violations) {
        out << "violation: " << v.code << ": " << v.message << '\n';
      }
      if (!violations.empty()) return kExitFailure;
      out << "ok: " << doc.zones.size() << " zones, " << doc.entities.size()
          << " entities\n";
      return kExitOk;
    };
  });

  // index build
  auto *index = app.add_subcommand("index", "Search index")->require_subcommand(1);
  auto *build = index->add_subcommand("build", "Build an index directory");
  std::string build_in, build_out;
  IndexOptions index_options;
  ResourceFlags build_resources;
  build->add_option("--in", build_in, "Raw corpus or processed JSON directory")
      ->required()
      ->check(CLI::ExistingDirectory);
  build->add_option("--out", build_out, "Index directory to write")->required();
  build->add_flag("--exclude-tables,!--include-tables",
                  index_options.exclude_table_zones, "Leave table zones unindexed");
  build->add_flag("--exclude-header-footer,!--include-header-footer",
                  index_options.exclude_header_footer,
                  "Leave header/footer zones unindexed");
  build->add_flag("--lexicon-pass,!--no-lexicon-pass", index_options.lexicon_pass,
                  "Add lexicon entities the annotation missed");
  build->add_option("--k1", index_options.bm25.k1, "BM25 k1")
      ->check(CLI::PositiveNumber);
  build->add_option("--b", index_options.bm25.b, "BM25 b")->check(CLI::Range(0.0, 1.0));
  build_resources.Register(build);
  build->callback([&] {
    action = [&] {
      LoadedResources resources(build_resources);
      PipelineOptions options;
      resources.Apply(options);
      index_options.lexicon = options.lexicon;
      index_options.gazetteer = options.gazetteer;
      auto built = BuildIndex(LoadDocuments(build_in, options, jobs, err), index_options);
      SaveIndex(*built, build_out);
      out << "indexed " << built->size() << " documents, version " << built->version()
          << '\n';
      return kExitOk;
    };
  });

  // serve
  auto *serve = app.add_subcommand("serve", "Serve the search API over HTTP");
  ServiceConfig serve_config;
  std::string serve_index, serve_pages;
  serve->add_option("--index", serve_index, "Index directory")->envname("INDEX_DIR");
  serve->add_option("--port", serve_config.port, "Port (0 picks a free one)")
      ->envname("PORT")
      ->check(CLI::Range(0, 65535));
  serve->add_option("--host", serve_config.host, "Address to bind");
  serve->add_option("--pages", serve_pages, "Page image directory <doc>/<page>.png")
      ->envname("PAGE_IMAGE_DIR");
  serve->add_option("--cors-origin", serve_config.cors_origin,
                    "Access-Control-Allow-Origin value")
      ->envname("CORS_ORIGIN");
  serve->add_option("--reload-seconds", serve_config.reload_seconds,
                    "Manifest polling interval; 0 disables reloading")
      ->check(CLI::NonNegativeNumber);
  serve->callback([&] {
    action = [&] {
      serve_config.index_dir = serve_index;
      serve_config.page_image_dir = serve_pages;
      SearchService service(serve_config);
      return Serve(service, out, err);
    };
  });

  // analytics
  auto add_input = [&](CLI::App *sub, std::string &in) {
    sub->add_option("--in", in, "Raw corpus or processed JSON directory")
        ->required()
        ->check(CLI::ExistingDirectory);
  };
  bool as_json = false;
  auto add_json = [&](CLI::App *sub) {
    sub->add_flag("--json", as_json, "Print JSON instead of a table");
  };

  auto *stats = app.add_subcommand("stats", "Sentence and word counts");
  std::string stats_in;
  add_input(stats, stats_in);
  add_json(stats);
  stats->callback([&] {
    action = [&] {
      CorpusStats s = ComputeCorpusStats(LoadDocuments(stats_in, {}, jobs, err), jobs);
      if (as_json) {
        out << StatsJson(s).dump(2) << '\n';
      } else {
        PrintStats(out, s);
      }
      return kExitOk;
    };
  });

  auto *freq = app.add_subcommand(
      "freq", "Most frequent words of a POS class right before target words");
  std::string freq_in, freq_pos = "adj", freq_targets = "man,men";
  std::size_t freq_top = 20;
  add_input(freq, freq_in);
  freq->add_option("--pos", freq_pos, "POS class: noun verb adj adv pron func num");
  freq->add_option("--targets", freq_targets, "Comma-separated following words");
  freq->add_option("--top", freq_top, "Rows to print");
  add_json(freq);
  freq->callback([&] {
    action = [&] {
      std::string upper = freq_pos;
      for (char &c : upper) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
      auto pos = ParsePos(upper);
      if (!pos) {
        throw Error(ErrorKind::kInvalidArgument, "unknown POS class '" + freq_pos + "'");
      }
      auto counts = PatternCounts(LoadDocuments(freq_in, {}, jobs, err), *pos,
                                  WordSet(freq_targets), jobs);
      if (counts.size() > freq_top) counts.resize(freq_top);
      if (as_json) {
        Json rows = Json::array();
        for (const TermCount &c : counts) {
          rows.push_back({{"term", c.term}, {"count", c.count}});
        }
        out << rows.dump(2) << '\n';
      } else {
        std::vector<std::vector<std::string>> rows = {{"term", "count"}};
        for (const TermCount &c : counts) rows.push_back({c.term, std::to_string(c.count)});
        PrintTable(out, rows);
      }
      return kExitOk;
    };
  });

  auto *ratio = app.add_subcommand("ratio", "Mentions of one word set against another");
  std::string ratio_in, ratio_a = "woman,women", ratio_b = "man,men";
  add_input(ratio, ratio_in);
  ratio->add_option("--a", ratio_a, "Comma-separated numerator words");
  ratio->add_option("--b", ratio_b, "Comma-separated denominator words");
  add_json(ratio);
  ratio->callback([&] {
    action = [&] {
      MentionRatio r = CountMentionRatio(LoadDocuments(ratio_in, {}, jobs, err),
                                         WordSet(ratio_a), WordSet(ratio_b), jobs);
      if (as_json) {
        out << Json{{"count_a", r.count_a},
                    {"count_b", r.count_b},
                    {"ratio", r.ratio ? Json(*r.ratio) : Json(nullptr)}}
                   .dump(2)
            << '\n';
      } else {
        PrintTable(out, {{"count_a", std::to_string(r.count_a)},
                         {"count_b", std::to_string(r.count_b)},
                         {"ratio", r.ratio ? FormatDouble(*r.ratio) : "undefined"}});
      }
      return kExitOk;
    };
  });

  auto *topics = app.add_subcommand("topics", "LDA topics over selected zones");
  std::string topics_in, topics_years = "1850:1960", topics_stopwords;
  LdaSelection selection;
  LdaParams lda;
  double alpha = 0;
  std::size_t topics_top = 10;
  ResourceFlags topics_resources;
  add_input(topics, topics_in);
  topics->add_option("--zone", selection.zone_label, "Zone label to model");
  topics->add_option("--years", topics_years, "Publication years FROM:TO");
  topics->add_option("--k", lda.topics, "Number of topics")->check(CLI::Range(2, 1000));
  topics->add_option("--iterations", lda.iterations, "Gibbs sweeps")
      ->check(CLI::NonNegativeNumber);
  auto *alpha_option =
      topics->add_option("--alpha", alpha, "Doc-topic prior (default 50/k)")
          ->check(CLI::PositiveNumber);
  topics->add_option("--beta", lda.beta, "Topic-word prior")->check(CLI::PositiveNumber);
  topics->add_option("--seed", lda.seed, "Random seed");
  topics->add_option("--top", topics_top, "Words per topic");
  topics->add_option("--stopwords", topics_stopwords,
                     "Stop word list replacing the bundled one")
      ->check(CLI::ExistingFile);
  topics_resources.Register(topics);
  add_json(topics);
  topics->callback([&] {
    action = [&] {
      LoadedResources resources(topics_resources);
      PipelineOptions options;
      resources.Apply(options);
      std::tie(selection.year_from, selection.year_to) = ParseYears(topics_years);
      if (alpha_option->count() > 0) lda.alpha = alpha;
      std::set<std::string> stopwords;
      if (topics_stopwords.empty()) {
        stopwords = DefaultStopwords();
      } else {
        for (const std::string &w : LoadWordList(topics_stopwords)) {
          stopwords.insert(ToLower(w));
        }
      }
      auto bags = PrepareLdaBags(LoadDocuments(topics_in, options, jobs, err),
                                 selection, stopwords, resources.Dictionary());
      TopicModel model = TrainLda(bags, lda);
      if (as_json) {
        Json topics_json = Json::array();
        for (int k = 0; k < model.topics; ++k) {
          Json words = Json::array();
          for (const WeightedWord &w : TopWords(model, k, topics_top)) {
            words.push_back({{"word", w.word}, {"weight", w.weight}});
          }
          topics_json.push_back({{"topic", k}, {"words", words}});
        }
        out << Json{{"bags", bags.size()},
                    {"vocabulary", model.vocabulary.size()},
                    {"alpha", model.alpha},
                    {"beta", model.beta},
                    {"seed", model.seed},
                    {"iterations", model.iterations},
                    {"topics", topics_json}}
                   .dump(2)
            << '\n';
      } else {
        out << bags.size() << " zones, " << model.vocabulary.size()
            << " word types, alpha " << FormatDouble(model.alpha) << ", beta "
            << FormatDouble(model.beta) << ", seed " << model.seed << '\n';
        for (int k = 0; k < model.topics; ++k) {
          out << "topic " << k << ":";
          for (const WeightedWord &w : TopWords(model, k, topics_top)) {
            out << ' ' << w.word;
          }
          out << '\n';
        }
      }
      return kExitOk;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);
    err << "error: usage_error: " << e.what() << '\n';
    return kExitUsage;
  }
  try {
    return action ? action() : kExitUsage;
  } catch (const ReportedFailure &) {
    return kExitFailure;
  } catch (const Error &e) {
    err << "error: " << ErrorKindName(e.kind()) << ": " << e.what() << '\n';
    return kExitFailure;
  } catch (const std::exception &e) {
    err << "error: internal: " << e.what() << '\n';
    return kExitFailure;
  }
}

}  // namespace epicorpus
