// extern "C" surface over the senta core. Exceptions are caught at the
// boundary and turned into status codes; the message lands in a thread-local
// buffer readable through senta_last_error().
#include "senta.h"

#include <cstring>
#include <exception>
#include <filesystem>
#include <memory>
#include <new>
#include <sstream>
#include <string>

#include "json.hpp"
#include "senta/corpus.hpp"
#include "senta/eval.hpp"
#include "senta/features.hpp"
#include "senta/lexicon.hpp"
#include "senta/models.hpp"
#include "senta/parallel.hpp"
#include "senta/report.hpp"
#include "senta/textpipe.hpp"

using nlohmann::json;

struct senta_pipeline {
  senta::PipelineConfig config;
};

struct senta_lexicon {
  senta::Lexicon lex;
};

struct senta_corpus {
  std::vector<senta::TweetRecord> records;  // raw rows, before preprocessing
  std::vector<senta::LabeledDoc> docs;      // filled by preprocess/load
  senta::CorpusStats stats;
  bool processed = false;
};

struct senta_model {
  senta::ClassifierModel model;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.data(), s.size() + 1);
  return out;
}

template <typename Fn>
senta_status guarded(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return SENTA_OK;
  } catch (const senta::io_error& e) {
    g_last_error = e.what();
    return SENTA_ERR_IO;
  } catch (const senta::parse_error& e) {
    g_last_error = e.what();
    return SENTA_ERR_PARSE;
  } catch (const senta::invalid_argument& e) {
    g_last_error = e.what();
    return SENTA_ERR_INVALID;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return SENTA_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown error";
    return SENTA_ERR_INTERNAL;
  }
}

void require(bool ok, const char* message) {
  if (!ok) throw senta::invalid_argument(message);
}

std::vector<std::string> split_tokens(const char* tokens) {
  require(tokens != nullptr, "tokens must not be NULL");
  return senta::tokenize(tokens);
}

senta::ProcessedDoc doc_from_tokens(const char* tokens) {
  senta::ProcessedDoc doc;
  doc.tokens = split_tokens(tokens);
  doc.dropped_all = doc.tokens.empty();
  return doc;
}

int label_code(senta::SentimentLabel l) { return static_cast<int>(l); }

json stats_to_json(const senta_corpus& corpus) {
  json per_class = json::object();
  for (senta::SentimentLabel l : senta::kAllLabels) {
    auto it = corpus.stats.per_class_counts.find(l);
    per_class[senta::label_name(l)] =
        it == corpus.stats.per_class_counts.end() ? 0 : it->second;
  }
  return json{{"total_records", corpus.stats.total_records},
              {"per_class", per_class},
              {"unknown", corpus.stats.unknown_count},
              {"malformed_rows", corpus.stats.malformed_rows},
              {"processed", corpus.processed}};
}

json confusion_to_json(const senta::ConfusionMatrix& cm) {
  json rows = json::array();
  for (int a = 0; a < senta::kNumClasses; ++a) {
    json row = json::array();
    for (int p = 0; p < senta::kNumClasses; ++p) row.push_back(cm.counts[a][p]);
    rows.push_back(std::move(row));
  }
  return rows;
}

json metrics_to_json(const senta::MetricsReport& m) {
  json per_class = json::object();
  for (senta::SentimentLabel l : senta::kAllLabels) {
    const auto& c = m.per_class[static_cast<int>(l)];
    per_class[senta::label_name(l)] = {{"precision", c.precision},
                                       {"recall", c.recall},
                                       {"f1", c.f1}};
  }
  return json{{"accuracy", m.accuracy},
              {"macro_f1", m.macro_f1},
              {"per_class", per_class}};
}

// Pulls per-model hyperparameters out of the experiment config document.
senta::Hyperparams hyperparams_from_json(const json& cfg) {
  senta::Hyperparams hp;
  if (cfg.contains("nb")) {
    const json& j = cfg["nb"];
    hp.nb.laplace_alpha = j.value("alpha", hp.nb.laplace_alpha);
  }
  if (cfg.contains("softmax")) {
    const json& j = cfg["softmax"];
    hp.softmax.learning_rate = j.value("lr", hp.softmax.learning_rate);
    hp.softmax.l2 = j.value("l2", hp.softmax.l2);
    hp.softmax.epochs = j.value("epochs", hp.softmax.epochs);
    hp.softmax.batch = j.value("batch", hp.softmax.batch);
  }
  if (cfg.contains("svm")) {
    const json& j = cfg["svm"];
    hp.svm.c = j.value("c", hp.svm.c);
    hp.svm.epochs = j.value("epochs", hp.svm.epochs);
    hp.svm.learning_rate = j.value("lr", hp.svm.learning_rate);
  }
  if (cfg.contains("forest")) {
    const json& j = cfg["forest"];
    hp.forest.n_trees = j.value("n_trees", hp.forest.n_trees);
    hp.forest.max_depth = j.value("max_depth", hp.forest.max_depth);
    hp.forest.features_per_split =
        j.value("features_per_split", hp.forest.features_per_split);
    hp.forest.min_leaf = j.value("min_leaf", hp.forest.min_leaf);
  }
  if (cfg.contains("gbt")) {
    const json& j = cfg["gbt"];
    hp.gbt.n_rounds = j.value("n_rounds", hp.gbt.n_rounds);
    hp.gbt.depth = j.value("depth", hp.gbt.depth);
    hp.gbt.shrinkage = j.value("shrinkage", hp.gbt.shrinkage);
  }
  hp.balanced = cfg.value("class_weight", "none") == std::string("balanced");
  return hp;
}

json parse_config(const char* config_json) {
  if (!config_json || !*config_json) return json::object();
  json cfg = json::parse(config_json, nullptr, false);
  if (cfg.is_discarded() || !cfg.is_object())
    throw senta::parse_error("config: not a JSON object");
  return cfg;
}

}  // namespace

extern "C" {

const char* senta_last_error(void) { return g_last_error.c_str(); }

void senta_string_free(char* s) { std::free(s); }

/* ---- text pipeline ---- */

senta_status senta_pipeline_create(const char* stopwords_path,
                                   const char* slang_path,
                                   const char* lemma_path,
                                   const char* reduction_mode,
                                   senta_pipeline** out) {
  return guarded([&] {
    require(out != nullptr, "out must not be NULL");
    const std::string mode = reduction_mode ? reduction_mode : "stem";
    auto p = std::make_unique<senta_pipeline>();
    p->config = senta::load_pipeline_config(
        stopwords_path ? stopwords_path : "", slang_path ? slang_path : "",
        lemma_path ? lemma_path : "", senta::reduction_mode_from_name(mode));
    *out = p.release();
  });
}

void senta_pipeline_free(senta_pipeline* p) { delete p; }

senta_status senta_normalize(const char* raw, char** out) {
  return guarded([&] {
    require(raw && out, "raw and out must not be NULL");
    *out = dup_string(senta::normalize(raw));
  });
}

senta_status senta_preprocess_text(const senta_pipeline* p, const char* raw,
                                   char** out_tokens) {
  return guarded([&] {
    require(p && raw && out_tokens, "arguments must not be NULL");
    senta::TweetRecord record;
    record.raw_text = raw;
    const auto doc = senta::preprocess(record, p->config);
    std::string joined;
    for (size_t i = 0; i < doc.tokens.size(); ++i) {
      if (i) joined += ' ';
      joined += doc.tokens[i];
    }
    *out_tokens = dup_string(joined);
  });
}

/* ---- lexicon and scoring ---- */

senta_status senta_lexicon_load(const char* path, senta_lexicon** out) {
  return guarded([&] {
    require(path && out, "arguments must not be NULL");
    auto lex = std::make_unique<senta_lexicon>();
    lex->lex = senta::Lexicon::load(path);
    *out = lex.release();
  });
}

void senta_lexicon_free(senta_lexicon* lex) { delete lex; }

senta_status senta_lexicon_size(const senta_lexicon* lex, int64_t* out) {
  return guarded([&] {
    require(lex && out, "arguments must not be NULL");
    *out = static_cast<int64_t>(lex->lex.size());
  });
}

senta_status senta_score_pattern(const senta_lexicon* lex, const char* tokens,
                                 double* polarity, double* subjectivity,
                                 int* matched_count) {
  return guarded([&] {
    require(lex != nullptr, "lexicon must not be NULL");
    const auto scores = senta::score_pattern(doc_from_tokens(tokens), lex->lex);
    if (polarity) *polarity = scores.polarity;
    if (subjectivity) *subjectivity = scores.subjectivity;
    if (matched_count) *matched_count = scores.matched_count;
  });
}

senta_status senta_score_valence(const senta_lexicon* lex, const char* tokens,
                                 double* compound, double* pos_frac,
                                 double* neg_frac, double* neu_frac) {
  return guarded([&] {
    require(lex != nullptr, "lexicon must not be NULL");
    const auto scores = senta::score_valence(doc_from_tokens(tokens), lex->lex);
    if (compound) *compound = scores.compound;
    if (pos_frac) *pos_frac = scores.pos_frac;
    if (neg_frac) *neg_frac = scores.neg_frac;
    if (neu_frac) *neu_frac = scores.neu_frac;
  });
}

senta_status senta_label_from_score(double score, double neutral_low,
                                    double neutral_high, int* label) {
  return guarded([&] {
    require(label != nullptr, "label must not be NULL");
    senta::ThresholdConfig cfg;
    cfg.neutral_low = neutral_low;
    cfg.neutral_high = neutral_high;
    *label = label_code(senta::label_from_score(score, cfg));
  });
}

/* ---- corpora ---- */

senta_status senta_corpus_load_s140(const char* path, int64_t limit,
                                    senta_corpus** out) {
  return guarded([&] {
    require(path && out, "arguments must not be NULL");
    auto corpus = std::make_unique<senta_corpus>();
    corpus->records = senta::load_sentiment140(path, limit, &corpus->stats);
    *out = corpus.release();
  });
}

senta_status senta_corpus_load_dump(const char* path, senta_corpus** out) {
  return guarded([&] {
    require(path && out, "arguments must not be NULL");
    auto corpus = std::make_unique<senta_corpus>();
    corpus->records = senta::load_tweet_dump(path, &corpus->stats);
    *out = corpus.release();
  });
}

senta_status senta_corpus_load_processed(const char* path, senta_corpus** out) {
  return guarded([&] {
    require(path && out, "arguments must not be NULL");
    auto corpus = std::make_unique<senta_corpus>();
    corpus->docs = senta::load_processed_corpus(path);
    corpus->processed = true;
    corpus->stats.total_records = static_cast<int64_t>(corpus->docs.size());
    for (const auto& d : corpus->docs) {
      if (d.original)
        ++corpus->stats.per_class_counts[*d.original];
      else
        ++corpus->stats.unknown_count;
    }
    *out = corpus.release();
  });
}

void senta_corpus_free(senta_corpus* corpus) { delete corpus; }

senta_status senta_corpus_size(const senta_corpus* corpus, int64_t* out) {
  return guarded([&] {
    require(corpus && out, "arguments must not be NULL");
    *out = corpus->processed ? static_cast<int64_t>(corpus->docs.size())
                             : static_cast<int64_t>(corpus->records.size());
  });
}

senta_status senta_corpus_stats_json(const senta_corpus* corpus, char** out) {
  return guarded([&] {
    require(corpus && out, "arguments must not be NULL");
    *out = dup_string(stats_to_json(*corpus).dump());
  });
}

senta_status senta_corpus_preprocess(senta_corpus* corpus,
                                     const senta_pipeline* p, int threads) {
  return guarded([&] {
    require(corpus && p, "arguments must not be NULL");
    require(!corpus->processed, "corpus is already preprocessed");
    corpus->docs.resize(corpus->records.size());
    senta::parallel_for(corpus->records.size(), threads, [&](size_t i) {
      senta::LabeledDoc d;
      d.doc = senta::preprocess(corpus->records[i], p->config);
      d.original = corpus->records[i].original_label;
      d.label = d.original;
      corpus->docs[i] = std::move(d);
    });
    corpus->processed = true;
  });
}

senta_status senta_corpus_save(const senta_corpus* corpus, const char* path) {
  return guarded([&] {
    require(corpus && path, "arguments must not be NULL");
    require(corpus->processed, "corpus must be preprocessed before saving");
    senta::save_processed_corpus(corpus->docs, path, true);
  });
}

senta_status senta_corpus_relabel(senta_corpus* corpus,
                                  const senta_lexicon* lex, const char* method,
                                  double neutral_low, double neutral_high,
                                  char** report_json) {
  return guarded([&] {
    require(corpus && lex && method, "arguments must not be NULL");
    require(corpus->processed, "corpus must be preprocessed before relabeling");
    senta::ThresholdConfig cfg;
    cfg.neutral_low = neutral_low;
    cfg.neutral_high = neutral_high;
    const auto report = senta::relabel_corpus(
        corpus->docs, senta::relabel_method_from_name(method), lex->lex, cfg);
    if (report_json) {
      json doc;
      doc["method"] = senta::relabel_method_name(report.method);
      doc["before_unknown"] = report.before_unknown;
      doc["moved_to_neutral"] = report.moved_to_neutral;
      json before = json::object(), after = json::object();
      for (senta::SentimentLabel l : senta::kAllLabels) {
        before[senta::label_name(l)] = report.before_counts[label_code(l)];
        after[senta::label_name(l)] = report.after_counts[label_code(l)];
      }
      doc["before"] = std::move(before);
      doc["after"] = std::move(after);
      *report_json = dup_string(doc.dump());
    }
  });
}

senta_status senta_corpus_word_frequency_csv(const senta_corpus* corpus,
                                             int label, const char* mode,
                                             int64_t top_k, char** out_csv) {
  return guarded([&] {
    require(corpus && mode && out_csv, "arguments must not be NULL");
    require(corpus->processed, "corpus must be preprocessed first");
    require(label >= 0 && label < senta::kNumClasses, "bad label code");
    senta::FrequencyMode fm;
    if (std::string(mode) == "common")
      fm = senta::FrequencyMode::Common;
    else if (std::string(mode) == "unique")
      fm = senta::FrequencyMode::Unique;
    else
      throw senta::invalid_argument("mode must be \"common\" or \"unique\"");
    const auto table = senta::word_frequency(
        corpus->docs, static_cast<senta::SentimentLabel>(label), fm, top_k);
    *out_csv = dup_string(senta::word_frequency_csv(table));
  });
}

/* ---- experiments ---- */

senta_status senta_experiment_run(const senta_corpus* corpus,
                                  const senta_lexicon* lex,
                                  const char* config_json,
                                  const char* output_dir, char** report_json) {
  return guarded([&] {
    require(corpus && lex, "corpus and lexicon must not be NULL");
    require(corpus->processed, "corpus must be preprocessed first");
    const json cfg = parse_config(config_json);

    senta::ExperimentConfig config;
    if (cfg.contains("models")) {
      for (const auto& m : cfg["models"])
        config.models.push_back(
            senta::model_variant_from_name(m.get<std::string>()));
    } else {
      config.models = {senta::ModelVariant::NaiveBayes,
                       senta::ModelVariant::Softmax, senta::ModelVariant::Svm,
                       senta::ModelVariant::Forest, senta::ModelVariant::Gbt};
    }
    if (cfg.contains("splits")) {
      for (const auto& s : cfg["splits"])
        config.splits.push_back(
            senta::SplitRatio::from_name(s.get<std::string>()));
    } else {
      config.splits = {senta::SplitRatio{0.6}, senta::SplitRatio{0.7},
                       senta::SplitRatio{0.8}};
    }
    config.k = cfg.value("k", 5);
    config.seed = cfg.value("seed", uint64_t{42});
    config.threads = cfg.value("threads", 1);
    config.hyperparams = hyperparams_from_json(cfg);

    const std::string label_source = cfg.value("labels", "relabeled");
    require(label_source == "relabeled" || label_source == "original",
            "labels must be \"relabeled\" or \"original\"");

    // Featurize, keeping only docs that actually carry a usable label.
    std::vector<senta::LabeledDoc> labeled;
    labeled.reserve(corpus->docs.size());
    for (const auto& d : corpus->docs) {
      const auto& chosen = label_source == "original" ? d.original : d.label;
      if (!chosen || d.doc.dropped_all) continue;
      senta::LabeledDoc copy = d;
      copy.label = chosen;
      labeled.push_back(std::move(copy));
    }
    require(!labeled.empty(), "no labeled documents to train on");

    senta::FeaturizeOptions fopts;
    fopts.truncate = cfg.value("truncate", true);
    fopts.truncation.seed = config.seed;
    fopts.min_df = cfg.value("min_df", 2u);
    fopts.threads = config.threads;
    const auto featurized = senta::featurize(labeled, lex->lex, fopts);

    senta::Dataset data;
    data.vectors = featurized.vectors;
    for (const auto& d : labeled) data.labels.push_back(*d.label);

    std::map<std::string, senta::ClassifierModel> trained;
    const auto report = senta::run_experiment(data, config, &trained);

    if (output_dir && *output_dir) {
      const std::filesystem::path dir(output_dir);
      senta::write_file((dir / "results.csv").string(),
                        senta::experiment_csv(report));
      senta::write_file((dir / "accuracy_table.txt").string(),
                        senta::experiment_accuracy_table(report));
      std::string per_class;
      for (const auto& s : config.splits)
        per_class += senta::experiment_per_class_table(report, s.name());
      senta::write_file((dir / "per_class_table.txt").string(), per_class);
      for (const auto& cell : report.cells) {
        if (cell.failed) continue;
        const std::string stem = std::string(model_variant_name(cell.model)) +
                                 "_" + cell.ratio.name();
        senta::write_file((dir / ("confusion_" + stem + ".csv")).string(),
                          senta::confusion_csv(cell.cm));
      }
      for (auto& [key, model] : trained) {
        model.vocabulary = featurized.vocabulary;
        senta::save_model(model, (dir / ("model_" + key + ".json")).string());
      }
    }

    if (report_json) {
      json doc;
      doc["n_examples"] = data.size();
      doc["dimension"] = featurized.vocabulary.size();
      doc["truncation_threshold"] =
          fopts.truncate ? json(featurized.drawn_threshold) : json();
      doc["seed"] = config.seed;
      doc["k"] = config.k;
      json cells = json::array();
      for (const auto& cell : report.cells) {
        json c;
        c["model"] = senta::model_variant_name(cell.model);
        c["split"] = cell.ratio.name();
        c["failed"] = cell.failed;
        if (cell.failed) {
          c["error"] = cell.error;
        } else {
          c["test_accuracy"] = cell.test_accuracy;
          if (cell.cv_ran) {
            c["cv_mean"] = cell.cv_mean;
            c["cv_std"] = cell.cv_std;
          }
          c["metrics"] = metrics_to_json(cell.report);
          c["confusion"] = confusion_to_json(cell.cm);
        }
        cells.push_back(std::move(c));
      }
      doc["cells"] = std::move(cells);
      *report_json = dup_string(doc.dump());
    }
  });
}

/* ---- models ---- */

senta_status senta_model_load(const char* path, senta_model** out) {
  return guarded([&] {
    require(path && out, "arguments must not be NULL");
    auto m = std::make_unique<senta_model>();
    m->model = senta::load_model(path);
    *out = m.release();
  });
}

void senta_model_free(senta_model* model) { delete model; }

senta_status senta_model_predict(const senta_model* model, const char* tokens,
                                 int* label, double* scores) {
  return guarded([&] {
    require(model != nullptr, "model must not be NULL");
    require(model->model.vocabulary.size() > 0,
            "model carries no vocabulary; cannot vectorize tokens");
    const auto vec =
        senta::tfidf_vectorize(doc_from_tokens(tokens), model->model.vocabulary);
    const auto pred = senta::predict(model->model, vec);
    if (label) *label = label_code(pred.label);
    if (scores)
      for (int c = 0; c < senta::kNumClasses; ++c)
        scores[c] = pred.class_scores[c];
  });
}

senta_status senta_model_evaluate(const senta_model* model,
                                  const senta_corpus* corpus,
                                  const char* labels, char** report_json) {
  return guarded([&] {
    require(model && corpus && report_json, "arguments must not be NULL");
    require(corpus->processed, "corpus must be preprocessed first");
    require(model->model.vocabulary.size() > 0,
            "model carries no vocabulary; cannot vectorize corpus");
    const std::string source = labels ? labels : "label";
    require(source == "label" || source == "original",
            "labels must be \"label\" or \"original\"");

    std::vector<senta::SentimentLabel> truth, predicted;
    for (const auto& d : corpus->docs) {
      const auto& gold = source == "original" ? d.original : d.label;
      if (!gold) continue;
      const auto vec = senta::tfidf_vectorize(d.doc, model->model.vocabulary);
      truth.push_back(*gold);
      predicted.push_back(senta::predict(model->model, vec).label);
    }
    require(!truth.empty(), "corpus has no documents with the requested labels");

    const auto cm = senta::confusion(truth, predicted);
    json doc;
    doc["n_evaluated"] = truth.size();
    doc["confusion"] = confusion_to_json(cm);
    doc["metrics"] = metrics_to_json(senta::metrics(cm));
    *report_json = dup_string(doc.dump());
  });
}

/* ---- personality assessment ---- */

senta_status senta_assess(senta_corpus* corpus, const senta_lexicon* lex,
                          const senta_model* model, const char* config_json,
                          const char* output_dir, char** report_json) {
  return guarded([&] {
    require(corpus && lex, "corpus and lexicon must not be NULL");
    require(corpus->processed, "corpus must be preprocessed first");
    const json cfg = parse_config(config_json);

    senta::AssessOptions options;
    const std::string method = cfg.value("method", "valence");
    if (method == "model") {
      require(model != nullptr, "method \"model\" needs a model handle");
      options.use_model = true;
    } else {
      options.method = senta::relabel_method_from_name(method);
    }
    options.top_k = cfg.value("top_k", int64_t{8});
    options.thresholds.neutral_low =
        cfg.value("neutral_low", options.thresholds.neutral_low);
    options.thresholds.neutral_high =
        cfg.value("neutral_high", options.thresholds.neutral_high);

    const auto report = senta::assess(corpus->docs, lex->lex,
                                      model ? &model->model : nullptr, options);

    if (output_dir && *output_dir) {
      const std::filesystem::path dir(output_dir);
      senta::write_file((dir / "personality_report.csv").string(),
                        senta::personality_report_csv(report));
      senta::write_file((dir / "label_distribution.csv").string(),
                        senta::personality_distribution_csv(report));
      senta::write_file((dir / "report.txt").string(),
                        senta::personality_report_text(report));
    }

    if (report_json) {
      json doc;
      doc["total"] = report.total;
      json counts = json::object(), ratios = json::object();
      json pattern = json::object(), valence = json::object();
      for (senta::SentimentLabel l : senta::kAllLabels) {
        const int c = label_code(l);
        counts[senta::label_name(l)] = report.counts[c];
        ratios[senta::label_name(l)] = report.ratios[c];
        pattern[senta::label_name(l)] = report.pattern_counts[c];
        valence[senta::label_name(l)] = report.valence_counts[c];
      }
      doc["counts"] = std::move(counts);
      doc["ratios"] = std::move(ratios);
      doc["pattern_counts"] = std::move(pattern);
      doc["valence_counts"] = std::move(valence);
      doc["negative_to_rest"] = report.negative_to_rest;
      if (report.confusion) {
        doc["confusion"] = confusion_to_json(*report.confusion);
        doc["metrics"] = metrics_to_json(senta::metrics(*report.confusion));
      }
      json words = json::object();
      for (senta::SentimentLabel l : senta::kAllLabels) {
        json common = json::array(), unique = json::array();
        for (const auto& [tok, n] : report.common_words[label_code(l)].rows)
          common.push_back({tok, n});
        for (const auto& [tok, n] : report.unique_words[label_code(l)].rows)
          unique.push_back({tok, n});
        words[senta::label_name(l)] = {{"common", std::move(common)},
                                       {"unique", std::move(unique)}};
      }
      doc["words"] = std::move(words);
      *report_json = dup_string(doc.dump());
    }
  });
}

}  // extern "C"
