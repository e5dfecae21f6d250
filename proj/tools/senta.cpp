// Command-line front end. Talks to the core exclusively through the C API in
// senta.h, the same surface other language bindings would use.
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "senta.h"

#ifndef SENTA_DEFAULT_DATA_DIR
#define SENTA_DEFAULT_DATA_DIR "data"
#endif

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitUsage = 2;

struct Fatal {
  int code;
  std::string message;
};

void check(senta_status status) {
  if (status == SENTA_OK) return;
  const int code = status == SENTA_ERR_INTERNAL ? kExitInternal : kExitUsage;
  throw Fatal{code, senta_last_error()};
}

std::string take_string(char* s) {
  std::string out = s ? s : "";
  senta_string_free(s);
  return out;
}

std::string data_file(const std::string& name) {
  return std::string(SENTA_DEFAULT_DATA_DIR) + "/" + name;
}

using PipelinePtr = std::unique_ptr<senta_pipeline, decltype(&senta_pipeline_free)>;
using LexiconPtr = std::unique_ptr<senta_lexicon, decltype(&senta_lexicon_free)>;
using CorpusPtr = std::unique_ptr<senta_corpus, decltype(&senta_corpus_free)>;
using ModelPtr = std::unique_ptr<senta_model, decltype(&senta_model_free)>;

struct PipelineFlags {
  std::string stopwords = data_file("stopwords.txt");
  std::string slang = data_file("slang.tsv");
  std::string lemmas = data_file("lemmas.tsv");
  std::string reduce = "stem";

  void attach(CLI::App* cmd) {
    cmd->add_option("--stopwords", stopwords, "Stop word list file");
    cmd->add_option("--slang", slang, "Slang expansion TSV");
    cmd->add_option("--lemmas", lemmas, "Lemma lookup TSV");
    cmd->add_option("--reduce", reduce, "Token reduction: stem|lemmatize|none")
        ->check(CLI::IsMember({"stem", "lemmatize", "none"}));
  }

  PipelinePtr build() const {
    senta_pipeline* p = nullptr;
    check(senta_pipeline_create(stopwords.c_str(), slang.c_str(),
                                lemmas.c_str(), reduce.c_str(), &p));
    return PipelinePtr(p, senta_pipeline_free);
  }
};

LexiconPtr load_lexicon(const std::string& path) {
  senta_lexicon* lex = nullptr;
  check(senta_lexicon_load(path.c_str(), &lex));
  return LexiconPtr(lex, senta_lexicon_free);
}

// input format: "s140" CSV, "jsonl" dump, or "processed" (already tokenized).
CorpusPtr load_corpus(const std::string& path, const std::string& format,
                      int64_t limit) {
  senta_corpus* c = nullptr;
  if (format == "s140")
    check(senta_corpus_load_s140(path.c_str(), limit, &c));
  else if (format == "jsonl")
    check(senta_corpus_load_dump(path.c_str(), &c));
  else
    check(senta_corpus_load_processed(path.c_str(), &c));
  return CorpusPtr(c, senta_corpus_free);
}

ModelPtr load_model(const std::string& path) {
  senta_model* m = nullptr;
  check(senta_model_load(path.c_str(), &m));
  return ModelPtr(m, senta_model_free);
}

void print_stats(const senta_corpus* corpus) {
  char* stats = nullptr;
  check(senta_corpus_stats_json(corpus, &stats));
  std::fprintf(stderr, "%s\n", take_string(stats).c_str());
}

std::string join_csv(const std::vector<std::string>& items) {
  std::string out;
  for (size_t i = 0; i < items.size(); ++i) {
    if (i) out += ',';
    out += items[i];
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lexicon-driven tweet sentiment pipeline"};
  app.require_subcommand(1);

  // shared option storage
  std::string input, output, output_dir, format = "s140";
  std::string lexicon_path = data_file("lexicon.tsv");
  std::string method = "valence";
  std::string labels = "relabeled";
  std::string class_weight = "none";
  std::string model_path;
  std::vector<std::string> models = {"nb", "softmax", "svm", "forest", "gbt"};
  std::vector<std::string> splits = {"60-40", "70-30", "80-20"};
  std::string label_filter = "all", freq_mode = "common";
  int64_t limit = -1, top_k = 20;
  int k = 5, threads = 1;
  uint64_t seed = 42;
  uint32_t min_df = 2;
  bool no_truncate = false;
  PipelineFlags pipeline_flags;

  auto add_input = [&](CLI::App* cmd) {
    cmd->add_option("--input", input, "Input file")->required();
    cmd->add_option("--format", format,
                    "Input format: s140|jsonl|processed (default depends on "
                    "the subcommand)")
        ->check(CLI::IsMember({"s140", "jsonl", "processed"}));
  };
  // Default input format when --format was not given.
  auto format_for = [&](CLI::App* cmd, const char* fallback) {
    return cmd->get_option("--format")->count() ? format
                                                : std::string(fallback);
  };

  CLI::App* cmd_pre = app.add_subcommand(
      "preprocess", "Clean and tokenize a tweet corpus");
  add_input(cmd_pre);
  cmd_pre->add_option("--output", output, "Processed corpus file")->required();
  cmd_pre->add_option("--limit", limit, "Read at most N records");
  cmd_pre->add_option("--threads", threads, "Worker threads");
  pipeline_flags.attach(cmd_pre);

  CLI::App* cmd_rel = app.add_subcommand(
      "relabel", "Re-score a processed corpus with a lexicon method");
  add_input(cmd_rel);
  cmd_rel->add_option("--output", output, "Relabeled corpus file")->required();
  cmd_rel->add_option("--lexicon", lexicon_path, "Lexicon TSV");
  cmd_rel->add_option("--method", method, "Scoring method: pattern|valence")
      ->check(CLI::IsMember({"pattern", "valence"}));

  CLI::App* cmd_exp = app.add_subcommand(
      "explore", "Word-frequency tables per sentiment class");
  add_input(cmd_exp);
  cmd_exp->add_option("--output-dir", output_dir, "Directory for CSV tables");
  cmd_exp->add_option("--label", label_filter,
                      "Class to tabulate: negative|neutral|positive|all")
      ->check(CLI::IsMember({"negative", "neutral", "positive", "all"}));
  cmd_exp->add_option("--mode", freq_mode, "common|unique|both")
      ->check(CLI::IsMember({"common", "unique", "both"}));
  cmd_exp->add_option("--top-k", top_k, "Rows per table (-1 = all)");

  CLI::App* cmd_train = app.add_subcommand(
      "train", "Train classifiers over train/test splits");
  add_input(cmd_train);
  cmd_train->add_option("--output-dir", output_dir, "Report directory")
      ->required();
  cmd_train->add_option("--lexicon", lexicon_path, "Lexicon TSV");
  cmd_train->add_option("--models", models,
                        "Models: nb,softmax,svm,forest,gbt")
      ->delimiter(',');
  cmd_train->add_option("--splits", splits, "Train-test splits, e.g. 70-30")
      ->delimiter(',');
  cmd_train->add_option("--k", k, "Cross-validation folds (0 = off)");
  cmd_train->add_option("--seed", seed, "Run seed");
  cmd_train->add_option("--threads", threads, "Worker threads");
  cmd_train->add_option("--labels", labels, "Label source: relabeled|original")
      ->check(CLI::IsMember({"relabeled", "original"}));
  cmd_train->add_option("--class-weight", class_weight,
                        "Example weighting: none|balanced")
      ->check(CLI::IsMember({"none", "balanced"}));
  cmd_train->add_option("--min-df", min_df, "Vocabulary document-frequency floor");
  cmd_train->add_flag("--no-truncate", no_truncate,
                      "Skip sentiment-ranked token truncation");

  CLI::App* cmd_eval = app.add_subcommand(
      "evaluate", "Score a saved model against a labeled corpus");
  add_input(cmd_eval);
  cmd_eval->add_option("--model", model_path, "Model JSON file")->required();
  cmd_eval->add_option("--labels", labels, "Gold labels: relabeled|original")
      ->check(CLI::IsMember({"relabeled", "original"}));

  CLI::App* cmd_assess = app.add_subcommand(
      "assess", "Personality assessment over one user's tweets");
  add_input(cmd_assess);
  cmd_assess->add_option("--output-dir", output_dir, "Report directory");
  cmd_assess->add_option("--lexicon", lexicon_path, "Lexicon TSV");
  cmd_assess->add_option("--method", method,
                         "Labeling method: pattern|valence|model")
      ->check(CLI::IsMember({"pattern", "valence", "model"}));
  cmd_assess->add_option("--model", model_path,
                         "Model JSON file (method=model)");
  cmd_assess->add_option("--top-k", top_k, "Words per frequency table");
  cmd_assess->add_option("--threads", threads, "Worker threads");
  pipeline_flags.attach(cmd_assess);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // --help and friends exit 0; every other parse problem is a usage error
    return app.exit(e) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (cmd_pre->parsed()) {
      auto corpus = load_corpus(input, format_for(cmd_pre, "s140"), limit);
      auto pipeline = pipeline_flags.build();
      check(senta_corpus_preprocess(corpus.get(), pipeline.get(), threads));
      check(senta_corpus_save(corpus.get(), output.c_str()));
      print_stats(corpus.get());
    } else if (cmd_rel->parsed()) {
      auto corpus = load_corpus(input, format_for(cmd_rel, "processed"), limit);
      auto lex = load_lexicon(lexicon_path);
      char* report = nullptr;
      check(senta_corpus_relabel(corpus.get(), lex.get(), method.c_str(),
                                 -0.05, 0.05, &report));
      check(senta_corpus_save(corpus.get(), output.c_str()));
      const std::string report_text = take_string(report);
      // before/after class distribution as CSV next to the corpus file
      const auto doc = nlohmann::json::parse(report_text);
      std::string csv = "method,stage,negative,neutral,positive,unknown\n";
      for (const char* stage : {"before", "after"}) {
        const auto& row = doc.at(stage);
        csv += doc.at("method").get<std::string>();
        csv += std::string(",") + stage;
        for (const char* cls : {"negative", "neutral", "positive"})
          csv += "," + std::to_string(row.at(cls).get<long long>());
        csv += stage == std::string("before")
                   ? "," + std::to_string(doc.at("before_unknown").get<long long>())
                   : std::string(",0");
        csv += "\n";
      }
      const std::string csv_path = output + ".report.csv";
      FILE* f = std::fopen(csv_path.c_str(), "wb");
      if (!f) throw Fatal{kExitUsage, "cannot write " + csv_path};
      std::fputs(csv.c_str(), f);
      std::fclose(f);
      std::printf("%s\n", report_text.c_str());
    } else if (cmd_exp->parsed()) {
      auto corpus = load_corpus(input, format_for(cmd_exp, "processed"), limit);
      const std::vector<std::string> all_labels = {"negative", "neutral",
                                                   "positive"};
      const std::vector<std::string> all_modes =
          freq_mode == "both" ? std::vector<std::string>{"common", "unique"}
                              : std::vector<std::string>{freq_mode};
      for (int code = 0; code < 3; ++code) {
        if (label_filter != "all" && label_filter != all_labels[code]) continue;
        for (const auto& m : all_modes) {
          char* csv = nullptr;
          check(senta_corpus_word_frequency_csv(corpus.get(), code, m.c_str(),
                                                top_k, &csv));
          const std::string table = take_string(csv);
          if (output_dir.empty()) {
            std::printf("# %s %s\n%s\n", all_labels[code].c_str(), m.c_str(),
                        table.c_str());
          } else {
            const std::string path =
                output_dir + "/words_" + m + "_" + all_labels[code] + ".csv";
            FILE* f = std::fopen(path.c_str(), "wb");
            if (!f) throw Fatal{kExitUsage, "cannot write " + path};
            std::fputs(table.c_str(), f);
            std::fclose(f);
          }
        }
      }
    } else if (cmd_train->parsed()) {
      auto corpus = load_corpus(input, format_for(cmd_train, "processed"), limit);
      auto lex = load_lexicon(lexicon_path);
      nlohmann::json cfg;
      cfg["models"] = models;
      cfg["splits"] = splits;
      cfg["k"] = k;
      cfg["seed"] = seed;
      cfg["threads"] = threads;
      cfg["labels"] = labels;
      cfg["class_weight"] = class_weight;
      cfg["min_df"] = min_df;
      cfg["truncate"] = !no_truncate;
      char* report = nullptr;
      const std::string cfg_text = cfg.dump();
      check(senta_experiment_run(corpus.get(), lex.get(), cfg_text.c_str(),
                                 output_dir.c_str(), &report));
      std::printf("%s\n", take_string(report).c_str());
      std::fprintf(stderr, "models: %s | splits: %s | reports in %s\n",
                   join_csv(models).c_str(), join_csv(splits).c_str(),
                   output_dir.c_str());
    } else if (cmd_eval->parsed()) {
      auto corpus = load_corpus(input, format_for(cmd_eval, "processed"), limit);
      auto model = load_model(model_path);
      char* report = nullptr;
      check(senta_model_evaluate(model.get(), corpus.get(),
                                 labels == "original" ? "original" : "label",
                                 &report));
      std::printf("%s\n", take_string(report).c_str());
    } else if (cmd_assess->parsed()) {
      const std::string fmt = format_for(cmd_assess, "jsonl");
      auto corpus = load_corpus(input, fmt, limit);
      if (fmt != "processed") {
        auto pipeline = pipeline_flags.build();
        check(senta_corpus_preprocess(corpus.get(), pipeline.get(), threads));
      }
      auto lex = load_lexicon(lexicon_path);
      ModelPtr model(nullptr, senta_model_free);
      if (method == "model") {
        if (model_path.empty())
          throw Fatal{kExitUsage, "--method model requires --model"};
        model = load_model(model_path);
      }
      nlohmann::json cfg;
      cfg["method"] = method;
      cfg["top_k"] = top_k;
      char* report = nullptr;
      const std::string cfg_text = cfg.dump();
      check(senta_assess(corpus.get(), lex.get(), model.get(),
                         cfg_text.c_str(), output_dir.c_str(), &report));
      std::printf("%s\n", take_string(report).c_str());
    }
  } catch (const Fatal& f) {
    std::fprintf(stderr, "error: %s\n", f.message.c_str());
    return f.code;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitInternal;
  }
  return kExitOk;
}
