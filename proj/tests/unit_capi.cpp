#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <string>

#include "doctest.h"
#include "senta.h"

namespace {

const std::string kData = SENTA_DATA_DIR;
const std::string kFixtures = SENTA_FIXTURE_DIR;

struct Pipeline {
  senta_pipeline* p = nullptr;
  Pipeline() {
    REQUIRE(senta_pipeline_create((kData + "/stopwords.txt").c_str(),
                                  (kData + "/slang.tsv").c_str(),
                                  (kData + "/lemmas.tsv").c_str(), "stem",
                                  &p) == SENTA_OK);
  }
  ~Pipeline() { senta_pipeline_free(p); }
};

struct Lexicon {
  senta_lexicon* lex = nullptr;
  Lexicon() {
    REQUIRE(senta_lexicon_load((kData + "/lexicon.tsv").c_str(), &lex) ==
            SENTA_OK);
  }
  ~Lexicon() { senta_lexicon_free(lex); }
};

std::string take(char* s) {
  REQUIRE(s != nullptr);
  std::string out(s);
  senta_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("null arguments are rejected with a message") {
  CHECK(senta_normalize(nullptr, nullptr) == SENTA_ERR_INVALID);
  CHECK(std::strlen(senta_last_error()) > 0);
  CHECK(senta_pipeline_create(nullptr, nullptr, nullptr, "stem", nullptr) ==
        SENTA_ERR_INVALID);
  CHECK(senta_lexicon_load(nullptr, nullptr) == SENTA_ERR_INVALID);
  CHECK(senta_corpus_load_s140(nullptr, -1, nullptr) == SENTA_ERR_INVALID);
  CHECK(senta_model_load(nullptr, nullptr) == SENTA_ERR_INVALID);
  senta_pipeline_free(nullptr);  // free functions tolerate NULL
  senta_lexicon_free(nullptr);
  senta_corpus_free(nullptr);
  senta_model_free(nullptr);
  senta_string_free(nullptr);
}

TEST_CASE("missing files map to the io status") {
  senta_lexicon* lex = nullptr;
  CHECK(senta_lexicon_load("/no/such/lexicon.tsv", &lex) == SENTA_ERR_IO);
  CHECK(lex == nullptr);
  CHECK(std::strlen(senta_last_error()) > 0);
  senta_corpus* corpus = nullptr;
  CHECK(senta_corpus_load_s140("/no/such/corpus.csv", -1, &corpus) ==
        SENTA_ERR_IO);
  senta_model* model = nullptr;
  CHECK(senta_model_load("/no/such/model.json", &model) == SENTA_ERR_IO);
}

TEST_CASE("normalize and preprocess through the C API") {
  char* out = nullptr;
  REQUIRE(senta_normalize("@user check http://t.co/x 123 GREAT!!!", &out) ==
          SENTA_OK);
  CHECK(take(out) == "check great");

  Pipeline pipe;
  out = nullptr;
  REQUIRE(senta_preprocess_text(pipe.p, "@u I'm LOVING it! http://x", &out) ==
          SENTA_OK);
  CHECK(take(out) == "love");

  out = nullptr;
  REQUIRE(senta_preprocess_text(pipe.p, "12345 @a", &out) == SENTA_OK);
  CHECK(take(out) == "");

  senta_pipeline* bad = nullptr;
  CHECK(senta_pipeline_create("", "", "", "frobnicate", &bad) ==
        SENTA_ERR_INVALID);
  CHECK(senta_pipeline_create("/no/such/stopwords.txt", "", "", "stem", &bad) ==
        SENTA_ERR_IO);
}

TEST_CASE("lexicon scoring oracles through the C API") {
  Lexicon lex;
  int64_t size = 0;
  REQUIRE(senta_lexicon_size(lex.lex, &size) == SENTA_OK);
  CHECK(size > 1000);

  double compound = 0, pos = 0, neg = 0, neu = 0;
  REQUIRE(senta_score_valence(lex.lex, "good", &compound, &pos, &neg, &neu) ==
          SENTA_OK);
  CHECK(compound == doctest::Approx(1.9 / std::sqrt(1.9 * 1.9 + 15.0)));
  CHECK(compound == doctest::Approx(0.4404).epsilon(1e-4));

  REQUIRE(senta_score_valence(lex.lex, "not good", &compound, &pos, &neg,
                              &neu) == SENTA_OK);
  CHECK(compound == doctest::Approx(-0.3412).epsilon(1e-4));

  REQUIRE(senta_score_valence(lex.lex, "", &compound, &pos, &neg, &neu) ==
          SENTA_OK);
  CHECK(compound == 0.0);
  CHECK(neu == doctest::Approx(1.0));

  double polarity = 0, subjectivity = 0;
  int matched = 0;
  REQUIRE(senta_score_pattern(lex.lex, "good stuff", &polarity, &subjectivity,
                              &matched) == SENTA_OK);
  CHECK(polarity == doctest::Approx(1.9 / 4.0));
  CHECK(matched == 1);

  int label = -1;
  REQUIRE(senta_label_from_score(0.051, -0.05, 0.05, &label) == SENTA_OK);
  CHECK(label == SENTA_LABEL_POSITIVE);
  REQUIRE(senta_label_from_score(0.05, -0.05, 0.05, &label) == SENTA_OK);
  CHECK(label == SENTA_LABEL_NEUTRAL);
  REQUIRE(senta_label_from_score(-0.051, -0.05, 0.05, &label) == SENTA_OK);
  CHECK(label == SENTA_LABEL_NEGATIVE);
  CHECK(senta_label_from_score(std::nan(""), -0.05, 0.05, &label) ==
        SENTA_ERR_INVALID);
}

TEST_CASE("corpus lifecycle: load, preprocess, save, relabel, explore") {
  senta_corpus* corpus = nullptr;
  REQUIRE(senta_corpus_load_s140((kFixtures + "/s140_small.csv").c_str(), 200,
                                 &corpus) == SENTA_OK);
  int64_t n = 0;
  REQUIRE(senta_corpus_size(corpus, &n) == SENTA_OK);
  CHECK(n == 200);

  char* stats = nullptr;
  REQUIRE(senta_corpus_stats_json(corpus, &stats) == SENTA_OK);
  const auto stats_text = take(stats);
  CHECK(stats_text.find("\"total_records\":200") != std::string::npos);

  Pipeline pipe;
  REQUIRE(senta_corpus_preprocess(corpus, pipe.p, 4) == SENTA_OK);

  const std::string saved = "capi_corpus.tmp";
  REQUIRE(senta_corpus_save(corpus, saved.c_str()) == SENTA_OK);
  senta_corpus* reloaded = nullptr;
  REQUIRE(senta_corpus_load_processed(saved.c_str(), &reloaded) == SENTA_OK);
  int64_t n2 = 0;
  REQUIRE(senta_corpus_size(reloaded, &n2) == SENTA_OK);
  CHECK(n2 == n);
  std::filesystem::remove(saved);

  Lexicon lex;
  char* report = nullptr;
  REQUIRE(senta_corpus_relabel(corpus, lex.lex, "valence", -0.05, 0.05,
                               &report) == SENTA_OK);
  const auto report_text = take(report);
  CHECK(report_text.find("\"before\"") != std::string::npos);
  CHECK(report_text.find("\"after\"") != std::string::npos);
  CHECK(senta_corpus_relabel(corpus, lex.lex, "psychic", -0.05, 0.05,
                             &report) == SENTA_ERR_INVALID);

  char* csv = nullptr;
  REQUIRE(senta_corpus_word_frequency_csv(corpus, SENTA_LABEL_POSITIVE,
                                          "common", 8, &csv) == SENTA_OK);
  const auto csv_text = take(csv);
  CHECK(csv_text.rfind("token,count\n", 0) == 0);
  CHECK(senta_corpus_word_frequency_csv(corpus, SENTA_LABEL_POSITIVE, "rare",
                                        8, &csv) == SENTA_ERR_INVALID);

  senta_corpus_free(reloaded);
  senta_corpus_free(corpus);
}

TEST_CASE("experiment, model prediction and evaluation round trip") {
  namespace fs = std::filesystem;
  senta_corpus* corpus = nullptr;
  REQUIRE(senta_corpus_load_s140((kFixtures + "/s140_small.csv").c_str(), 400,
                                 &corpus) == SENTA_OK);
  Pipeline pipe;
  Lexicon lex;
  REQUIRE(senta_corpus_preprocess(corpus, pipe.p, 4) == SENTA_OK);
  char* relabel_report = nullptr;
  REQUIRE(senta_corpus_relabel(corpus, lex.lex, "valence", -0.05, 0.05,
                               &relabel_report) == SENTA_OK);
  senta_string_free(relabel_report);

  const std::string out_dir = "capi_experiment.tmp";
  fs::remove_all(out_dir);
  char* report = nullptr;
  REQUIRE(senta_experiment_run(
              corpus, lex.lex,
              "{\"models\":[\"nb\"],\"splits\":[\"70-30\"],\"k\":0,"
              "\"seed\":42}",
              out_dir.c_str(), &report) == SENTA_OK);
  const auto report_text = take(report);
  CHECK(report_text.find("\"accuracy\"") != std::string::npos);
  CHECK(fs::exists(out_dir + "/results.csv"));
  CHECK(fs::exists(out_dir + "/model_nb_70-30.json"));

  senta_model* model = nullptr;
  REQUIRE(senta_model_load((out_dir + "/model_nb_70-30.json").c_str(),
                           &model) == SENTA_OK);
  int label = -1;
  double scores[3] = {0, 0, 0};
  REQUIRE(senta_model_predict(model, "good day", &label, scores) == SENTA_OK);
  CHECK(label >= SENTA_LABEL_NEGATIVE);
  CHECK(label <= SENTA_LABEL_POSITIVE);
  CHECK(scores[0] + scores[1] + scores[2] == doctest::Approx(1.0));

  char* eval_json = nullptr;
  REQUIRE(senta_model_evaluate(model, corpus, "label", &eval_json) == SENTA_OK);
  const auto eval_text = take(eval_json);
  CHECK(eval_text.find("\"accuracy\"") != std::string::npos);
  CHECK(eval_text.find("\"confusion\"") != std::string::npos);
  CHECK(senta_model_evaluate(model, corpus, "guesses", &eval_json) ==
        SENTA_ERR_INVALID);

  // malformed config JSON surfaces as a parse error
  CHECK(senta_experiment_run(corpus, lex.lex, "{oops", nullptr, &report) ==
        SENTA_ERR_PARSE);

  senta_model_free(model);
  senta_corpus_free(corpus);
  fs::remove_all(out_dir);
}

TEST_CASE("personality assessment through the C API") {
  namespace fs = std::filesystem;
  senta_corpus* corpus = nullptr;
  REQUIRE(senta_corpus_load_dump((kFixtures + "/personality300.jsonl").c_str(),
                                 &corpus) == SENTA_OK);
  int64_t n = 0;
  REQUIRE(senta_corpus_size(corpus, &n) == SENTA_OK);
  CHECK(n == 300);

  Pipeline pipe;
  Lexicon lex;
  REQUIRE(senta_corpus_preprocess(corpus, pipe.p, 4) == SENTA_OK);

  const std::string out_dir = "capi_assess.tmp";
  fs::remove_all(out_dir);
  char* report = nullptr;
  REQUIRE(senta_assess(corpus, lex.lex, nullptr,
                       "{\"method\":\"valence\",\"top_k\":8}", out_dir.c_str(),
                       &report) == SENTA_OK);
  const auto text = take(report);
  CHECK(text.find("\"total\":300") != std::string::npos);
  CHECK(text.find("negative_to_rest") != std::string::npos);
  CHECK(fs::exists(out_dir + "/personality_report.csv"));
  CHECK(fs::exists(out_dir + "/label_distribution.csv"));
  CHECK(fs::exists(out_dir + "/report.txt"));

  // method=model without a model is invalid
  CHECK(senta_assess(corpus, lex.lex, nullptr, "{\"method\":\"model\"}",
                     nullptr, &report) == SENTA_ERR_INVALID);

  senta_corpus_free(corpus);
  fs::remove_all(out_dir);
}
