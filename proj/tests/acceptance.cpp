// Acceptance gate: one PASS/FAIL line per end-to-end check, non-zero exit
// when any check fails. Each check is self-contained and runs against the
// bundled data files and the committed fixture corpora.
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "senta/corpus.hpp"
#include "senta/eval.hpp"
#include "senta/features.hpp"
#include "senta/lexicon.hpp"
#include "senta/models.hpp"
#include "senta/report.hpp"
#include "senta/textpipe.hpp"

using namespace senta;
namespace fs = std::filesystem;

namespace {

const std::string kData = SENTA_DATA_DIR;
const std::string kFixtures = SENTA_FIXTURE_DIR;
const std::string kCli = SENTA_CLI_PATH;

int g_failures = 0;

void report(bool ok, const std::string& name) {
  std::printf("%s: %s\n", ok ? "PASS" : "FAIL", name.c_str());
  std::fflush(stdout);
  if (!ok) ++g_failures;
}

PipelineConfig bundled_pipeline() {
  return load_pipeline_config(kData + "/stopwords.txt", kData + "/slang.tsv",
                              kData + "/lemmas.tsv", ReductionMode::Stem);
}

SparseVector vec(std::vector<std::pair<uint32_t, double>> pairs,
                 uint32_t dim) {
  SparseVector v;
  v.pairs = std::move(pairs);
  v.dimension = dim;
  return v;
}

Dataset random_dataset(std::mt19937_64& rng, uint32_t dim, size_t n) {
  Dataset d;
  std::uniform_int_distribution<int> count(0, 3);
  std::uniform_int_distribution<int> cls(0, 2);
  for (size_t i = 0; i < n; ++i) {
    std::vector<std::pair<uint32_t, double>> pairs;
    for (uint32_t f = 0; f < dim; ++f) {
      const int c = count(rng);
      if (c > 0) pairs.emplace_back(f, static_cast<double>(c));
    }
    d.vectors.push_back(vec(std::move(pairs), dim));
    d.labels.push_back(static_cast<SentimentLabel>(cls(rng)));
  }
  return d;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return "<<missing:" + path + ">>";
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

// ---- published benchmark confusion matrix ----
bool check_benchmark_metrics() {
  ConfusionMatrix cm;
  cm.at(SentimentLabel::Positive, SentimentLabel::Positive) = 133;
  cm.at(SentimentLabel::Positive, SentimentLabel::Neutral) = 22;
  cm.at(SentimentLabel::Positive, SentimentLabel::Negative) = 56;
  cm.at(SentimentLabel::Neutral, SentimentLabel::Positive) = 1;
  cm.at(SentimentLabel::Neutral, SentimentLabel::Neutral) = 99;
  cm.at(SentimentLabel::Neutral, SentimentLabel::Negative) = 26;
  cm.at(SentimentLabel::Negative, SentimentLabel::Positive) = 25;
  cm.at(SentimentLabel::Negative, SentimentLabel::Neutral) = 32;
  cm.at(SentimentLabel::Negative, SentimentLabel::Negative) = 466;
  const auto m = metrics(cm);
  bool ok = cm.total() == 860;
  ok = ok && std::abs(m.accuracy - 0.8116) < 0.0005;
  ok = ok &&
       std::abs(m.per_class[static_cast<int>(SentimentLabel::Positive)].recall -
                0.6303) < 0.0005;
  ok = ok &&
       std::abs(m.per_class[static_cast<int>(SentimentLabel::Neutral)].recall -
                0.7857) < 0.0005;
  ok = ok &&
       std::abs(m.per_class[static_cast<int>(SentimentLabel::Negative)].recall -
                0.8910) < 0.0005;
  return ok;
}

// ---- naive bayes vs enumerated posterior ----
std::array<double, 3> brute_force_nb(const Dataset& data,
                                     const SparseVector& query, double alpha) {
  const uint32_t dim = data.dimension();
  std::array<double, 3> class_weight{};
  std::array<std::vector<double>, 3> counts;
  for (int c = 0; c < 3; ++c) counts[c].assign(dim, 0.0);
  for (size_t i = 0; i < data.size(); ++i) {
    const int c = static_cast<int>(data.labels[i]);
    class_weight[c] += 1.0;
    for (const auto& [f, x] : data.vectors[i].pairs) counts[c][f] += x;
  }
  double total_weight = 0.0;
  for (double w : class_weight) total_weight += w;
  std::array<double, 3> posterior{};
  double z = 0.0;
  for (int c = 0; c < 3; ++c) {
    double total_c = 0.0;
    for (double v : counts[c]) total_c += v;
    double p = (class_weight[c] + alpha) / (total_weight + 3.0 * alpha);
    for (const auto& [f, x] : query.pairs)
      p *= std::pow((counts[c][f] + alpha) / (total_c + alpha * dim), x);
    posterior[c] = p;
    z += p;
  }
  for (double& p : posterior) p /= z;
  return posterior;
}

bool check_naive_bayes_oracle() {
  std::mt19937_64 rng(2025);
  std::uniform_int_distribution<uint32_t> dims(1, 6);
  std::uniform_int_distribution<size_t> sizes(1, 8);
  int compared = 0;
  for (int trial = 0; trial < 150; ++trial) {
    const uint32_t dim = dims(rng);
    const Dataset data = random_dataset(rng, dim, sizes(rng));
    NbParams hp;
    const auto model = fit_naive_bayes(data, hp);
    for (int q = 0; q < 2; ++q) {
      const Dataset probe = random_dataset(rng, dim, 1);
      const auto oracle = brute_force_nb(data, probe.vectors[0], 1.0);
      const auto pred = predict(model, probe.vectors[0]);
      for (int c = 0; c < 3; ++c)
        if (std::abs(pred.class_scores[c] - oracle[c]) > 1e-9) return false;
      ++compared;
    }
  }
  return compared >= 100;
}

// ---- tf-idf hand check ----
bool check_tfidf_oracle() {
  auto make = [](std::vector<std::string> tokens) {
    LabeledDoc d;
    d.doc.tokens = std::move(tokens);
    return d;
  };
  const std::vector<LabeledDoc> docs = {make({"good", "movie"}),
                                        make({"bad", "movie"})};
  const auto vocab = build_vocabulary(docs, 1);
  const auto v = tfidf_vectorize(docs[0].doc, vocab);
  if (v.pairs.size() != 2) return false;
  return std::abs(v.pairs[0].second - 0.814802) < 1e-6 &&
         std::abs(v.pairs[1].second - 0.579739) < 1e-6;
}

// ---- neutral-band label mapping ----
bool check_threshold_mapping() {
  ThresholdConfig cfg;  // [-0.05, 0.05]
  bool ok = label_from_score(0.051, cfg) == SentimentLabel::Positive;
  ok = ok && label_from_score(0.05, cfg) == SentimentLabel::Neutral;
  ok = ok && label_from_score(0.0, cfg) == SentimentLabel::Neutral;
  ok = ok && label_from_score(-0.05, cfg) == SentimentLabel::Neutral;
  ok = ok && label_from_score(-0.051, cfg) == SentimentLabel::Negative;
  return ok;
}

// ---- the model-quality and determinism checks share the big fixture ----

// Preprocesses and valence-relabels a Sentiment140-layout file in memory.
std::vector<LabeledDoc> prepare_docs(const std::string& path, int64_t limit) {
  const auto cfg = bundled_pipeline();
  const auto lex = Lexicon::load(kData + "/lexicon.tsv");
  std::vector<LabeledDoc> docs;
  for (const auto& record : load_sentiment140(path, limit)) {
    LabeledDoc d;
    d.doc = preprocess(record, cfg);
    d.original = record.original_label;
    docs.push_back(std::move(d));
  }
  ThresholdConfig thresholds;
  relabel_corpus(docs, RelabelMethod::Valence, lex, thresholds);
  return docs;
}

bool check_forest_beats_nb() {
  const auto start = std::chrono::steady_clock::now();
  auto docs = prepare_docs(kFixtures + "/synth20k.csv", -1);
  const auto lex = Lexicon::load(kData + "/lexicon.tsv");

  FeaturizeOptions opts;
  opts.truncate = true;
  opts.truncation.seed = 42;
  opts.min_df = 2;
  opts.threads = 8;
  const auto features = featurize(docs, lex, opts);

  Dataset data;
  for (size_t i = 0; i < docs.size(); ++i) {
    if (docs[i].doc.dropped_all || !docs[i].label) continue;
    data.vectors.push_back(features.vectors[i]);
    data.labels.push_back(*docs[i].label);
  }

  ExperimentConfig config;
  config.models = {ModelVariant::NaiveBayes, ModelVariant::Forest};
  config.splits = {SplitRatio{0.7}};
  config.k = 0;
  config.seed = 42;
  config.threads = 8;
  const auto experiment = run_experiment(data, config);

  double nb = -1.0, forest = -1.0;
  for (const auto& cell : experiment.cells) {
    if (cell.failed) return false;
    if (cell.model == ModelVariant::NaiveBayes) nb = cell.test_accuracy;
    if (cell.model == ModelVariant::Forest) forest = cell.test_accuracy;
  }
  const double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  std::fprintf(stderr,
               "  [forest-vs-nb] nb=%.4f forest=%.4f elapsed=%.1fs\n", nb,
               forest, elapsed);
  return nb >= 0 && forest >= nb + 0.05 && elapsed <= 600.0;
}

bool check_threaded_training_determinism() {
  const fs::path scratch = "acceptance_train.tmp";
  fs::remove_all(scratch);
  fs::create_directories(scratch);
  const std::string prepared = (scratch / "relabeled.txt").string();

  auto run_cli = [&](const std::string& args) {
    const std::string cmd =
        kCli + " " + args + " >/dev/null 2>" + (scratch / "log.txt").string();
    const int status = std::system(cmd.c_str());
    return status != -1 && WIFEXITED(status) && WEXITSTATUS(status) == 0;
  };
  const std::string pipeline_flags = " --stopwords " + kData +
                                     "/stopwords.txt --slang " + kData +
                                     "/slang.tsv --lemmas " + kData +
                                     "/lemmas.tsv";
  const std::string processed = (scratch / "processed.txt").string();
  if (!run_cli("preprocess --input " + kFixtures +
               "/synth20k.csv --limit 3000 --output " + processed +
               pipeline_flags))
    return false;
  if (!run_cli("relabel --input " + processed + " --output " + prepared +
               " --lexicon " + kData + "/lexicon.tsv"))
    return false;

  const std::string base = "train --input " + prepared + " --lexicon " + kData +
                           "/lexicon.tsv --models nb,softmax,forest --splits "
                           "70-30 --k 3 --seed 7 --output-dir ";
  const std::string dir1 = (scratch / "run1").string();
  const std::string dir8 = (scratch / "run8").string();
  if (!run_cli(base + dir1 + " --threads 1")) return false;
  if (!run_cli(base + dir8 + " --threads 8")) return false;

  size_t compared = 0;
  for (const auto& entry : fs::directory_iterator(dir1)) {
    const auto name = entry.path().filename().string();
    if (slurp(dir1 + "/" + name) != slurp(dir8 + "/" + name)) return false;
    ++compared;
  }
  const bool ok = compared >= 6;  // tables, results, confusions, models
  fs::remove_all(scratch);
  return ok;
}

// ---- truncation respects its jaccard bound ----
bool check_truncation_bound() {
  Lexicon lex;
  lex.insert({"good", 0.475, 0.6, 1.9, EntryKind::Sentiment, 0.0});
  lex.insert({"great", 0.8, 0.75, 3.1, EntryKind::Sentiment, 0.0});
  lex.insert({"bad", -0.625, 0.7, -2.5, EntryKind::Sentiment, 0.0});
  lex.insert({"meh", 0.05, 0.2, 0.2, EntryKind::Sentiment, 0.0});
  const std::vector<std::string> pool = {"good", "great", "bad", "meh", "x",
                                         "y",    "z",     "w",   "v"};
  std::mt19937_64 rng(606);
  std::uniform_int_distribution<size_t> pick(0, pool.size() - 1);
  for (int i = 0; i < 1000; ++i) {
    ProcessedDoc doc;
    for (int j = 0; j <= static_cast<int>(rng() % 12); ++j)
      doc.tokens.push_back(pool[pick(rng)]);
    TruncationPolicy policy;
    policy.seed = rng();
    const double threshold = draw_truncation_threshold(policy);
    if (threshold < 0.6 || threshold > 0.8) return false;
    const auto truncated = rank_and_truncate(doc, lex, threshold);
    const std::unordered_set<std::string> a(doc.tokens.begin(),
                                            doc.tokens.end());
    const std::unordered_set<std::string> b(truncated.tokens.begin(),
                                            truncated.tokens.end());
    if (jaccard(a, b) < threshold) return false;
  }
  return true;
}

// ---- softmax gradient vs central finite differences ----
bool check_softmax_gradient() {
  std::mt19937_64 rng(707);
  const uint32_t dim = 5;
  const Dataset data = random_dataset(rng, dim, 20);
  std::vector<size_t> batch(data.size());
  for (size_t i = 0; i < batch.size(); ++i) batch[i] = i;
  std::normal_distribution<double> noise(0.0, 0.5);
  const double l2 = 0.01, h = 1e-6;
  for (int point = 0; point < 10; ++point) {
    std::array<std::vector<double>, 3> w;
    std::array<double, 3> b{};
    for (int c = 0; c < 3; ++c) {
      w[c].resize(dim);
      for (auto& x : w[c]) x = noise(rng);
      b[c] = noise(rng);
    }
    std::array<std::vector<double>, 3> gw;
    std::array<double, 3> gb{};
    softmax_loss_and_grad(data, batch, w, b, l2, &gw, &gb);
    auto loss_at = [&](const std::array<std::vector<double>, 3>& wx,
                       const std::array<double, 3>& bx) {
      return softmax_loss_and_grad(data, batch, wx, bx, l2, nullptr, nullptr);
    };
    for (int c = 0; c < 3; ++c) {
      for (uint32_t f = 0; f < dim; ++f) {
        auto wp = w, wm = w;
        wp[c][f] += h;
        wm[c][f] -= h;
        const double fd = (loss_at(wp, b) - loss_at(wm, b)) / (2 * h);
        const double scale = std::max({std::abs(fd), std::abs(gw[c][f]), 1e-8});
        if (std::abs(fd - gw[c][f]) / scale > 1e-5) return false;
      }
      auto bp = b, bm = b;
      bp[c] += h;
      bm[c] -= h;
      const double fd = (loss_at(w, bp) - loss_at(w, bm)) / (2 * h);
      const double scale = std::max({std::abs(fd), std::abs(gb[c]), 1e-8});
      if (std::abs(fd - gb[c]) / scale > 1e-5) return false;
    }
  }
  return true;
}

// ---- split and fold partition laws ----
bool check_partition_laws() {
  std::mt19937_64 rng(808);
  for (int trial = 0; trial < 200; ++trial) {
    const int k = 2 + static_cast<int>(rng() % 9);
    const int n = std::max<int>(k, 4) + static_cast<int>(rng() % 150);
    std::vector<SentimentLabel> labels;
    for (int i = 0; i < n; ++i)
      labels.push_back(static_cast<SentimentLabel>(rng() % 3));
    // guarantee at least two of one class so splitting is well-defined
    labels[0] = labels[1] = SentimentLabel::Neutral;
    const uint64_t seed = rng();

    const auto folds = kfold(labels, k, seed);
    std::vector<int> sizes(k, 0);
    for (int f : folds.fold_of) {
      if (f < 0 || f >= k) return false;
      ++sizes[f];
    }
    const auto [lo, hi] = std::minmax_element(sizes.begin(), sizes.end());
    if (*hi - *lo > 1) return false;

    const double fraction = 0.5 + (rng() % 40) / 100.0;
    const auto [train, test] = split_indices(labels, SplitRatio{fraction}, seed);
    std::set<size_t> seen(train.begin(), train.end());
    for (size_t i : test)
      if (!seen.insert(i).second) return false;  // overlap
    if (seen.size() != labels.size()) return false;  // not a cover
    std::array<int64_t, 3> total{}, in_train{};
    for (size_t i = 0; i < labels.size(); ++i)
      ++total[static_cast<int>(labels[i])];
    for (size_t i : train) ++in_train[static_cast<int>(labels[i])];
    for (int c = 0; c < 3; ++c) {
      if (total[c] < 2) continue;
      if (std::abs(in_train[c] - total[c] * fraction) > 1.0 + 1e-9)
        return false;
    }
  }
  return true;
}

// ---- normalize idempotence + token grammar ----
bool check_normalize_idempotent() {
  std::mt19937_64 rng(1010);
  const std::string alphabet =
      "abcXYZ 019@#:/.'!?\xe2\x80\x99\xc3\xa9\t\n-_~wht";
  std::uniform_int_distribution<size_t> pick(0, alphabet.size() - 1);
  std::uniform_int_distribution<int> len(0, 80);
  for (int i = 0; i < 10000; ++i) {
    std::string s;
    const int L = len(rng);
    for (int j = 0; j < L; ++j) s += alphabet[pick(rng)];
    const std::string once = normalize(s);
    if (normalize(once) != once) return false;
    for (const auto& token : tokenize(once)) {
      if (token.empty()) return false;
      for (char c : token)
        if (!((c >= 'a' && c <= 'z') || c == '\'')) return false;
    }
  }
  return true;
}

// ---- personality assessment counts ----
bool check_personality_counts() {
  const auto cfg = bundled_pipeline();
  const auto lex = Lexicon::load(kData + "/lexicon.tsv");
  std::vector<LabeledDoc> docs;
  for (const auto& record :
       load_tweet_dump(kFixtures + "/personality300.jsonl")) {
    LabeledDoc d;
    d.doc = preprocess(record, cfg);
    d.original = record.original_label;
    docs.push_back(std::move(d));
  }
  if (docs.size() != 300) return false;

  AssessOptions opts;
  const auto r = assess(docs, lex, nullptr, opts);
  if (r.total != 300) return false;
  if (r.counts[0] + r.counts[1] + r.counts[2] != 300) return false;

  // independent recount: score every doc again from scratch
  std::array<int64_t, 3> recount{};
  for (const auto& d : docs) {
    SentimentLabel label = SentimentLabel::Neutral;
    if (!d.doc.dropped_all)
      label = label_from_score(score_valence(d.doc, lex).compound,
                               opts.thresholds);
    ++recount[static_cast<int>(label)];
    if (!d.label || *d.label != label) return false;
  }
  for (int c = 0; c < 3; ++c)
    if (recount[c] != r.counts[c]) return false;
  return true;
}

template <typename Fn>
void run_check(const std::string& name, Fn fn) {
  bool ok = false;
  try {
    ok = fn();
  } catch (const std::exception& e) {
    std::fprintf(stderr, "  [%s] exception: %s\n", name.c_str(), e.what());
  }
  report(ok, name);
}

}  // namespace

int main() {
  run_check("benchmark confusion-matrix metrics reproduce published values",
            check_benchmark_metrics);
  run_check("naive bayes posteriors match enumerated Bayes within 1e-9",
            check_naive_bayes_oracle);
  run_check("tf-idf weights match the hand-computed example within 1e-6",
            check_tfidf_oracle);
  run_check("neutral-band thresholds map scores exactly",
            check_threshold_mapping);
  run_check("random forest beats naive bayes by 5+ points on the 20k fixture",
            check_forest_beats_nb);
  run_check("token truncation never drops below its drawn jaccard threshold",
            check_truncation_bound);
  run_check("softmax analytic gradient matches finite differences within 1e-5",
            check_softmax_gradient);
  run_check("splits and folds obey the partition laws on random inputs",
            check_partition_laws);
  run_check("training outputs are byte-identical across 1 and 8 threads",
            check_threaded_training_determinism);
  run_check("normalize is idempotent and tokens obey the grammar",
            check_normalize_idempotent);
  run_check("personality assessment counts are conserved and recount-stable",
            check_personality_counts);
  return g_failures == 0 ? 0 : 1;
}
