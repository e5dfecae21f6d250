#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdio>
#include <filesystem>

#include "doctest.h"
#include "senta/report.hpp"

using namespace senta;

namespace {

Lexicon tiny_lexicon() {
  Lexicon lex;
  lex.insert({"good", 0.475, 0.6, 1.9, EntryKind::Sentiment, 0.0});
  lex.insert({"bad", -0.625, 0.7, -2.5, EntryKind::Sentiment, 0.0});
  lex.insert({"not", 0.0, 0.0, 0.0, EntryKind::Negator, 0.0});
  return lex;
}

LabeledDoc doc(std::vector<std::string> tokens) {
  LabeledDoc d;
  d.doc.tokens = std::move(tokens);
  d.doc.dropped_all = d.doc.tokens.empty();
  return d;
}

std::vector<LabeledDoc> sample_docs() {
  std::vector<LabeledDoc> docs;
  docs.push_back(doc({"good", "day"}));
  docs.push_back(doc({"bad", "day"}));
  docs.push_back(doc({"not", "good"}));
  docs.push_back(doc({"plain", "words"}));
  docs.push_back(doc({}));  // stripped empty by preprocessing
  return docs;
}

}  // namespace

TEST_CASE("assess tallies every document exactly once") {
  auto docs = sample_docs();
  const auto lex = tiny_lexicon();
  AssessOptions opts;
  const auto r = assess(docs, lex, nullptr, opts);

  CHECK(r.total == 5);
  CHECK(r.counts[0] + r.counts[1] + r.counts[2] == r.total);
  CHECK(r.pattern_counts[0] + r.pattern_counts[1] + r.pattern_counts[2] ==
        r.total);
  CHECK(r.valence_counts[0] + r.valence_counts[1] + r.valence_counts[2] ==
        r.total);
  CHECK(r.ratios[0] + r.ratios[1] + r.ratios[2] == doctest::Approx(1.0));

  // valence labels: good->Pos, bad->Neg, not good->Neg, plain->Neu, empty->Neu
  CHECK(r.counts[static_cast<int>(SentimentLabel::Negative)] == 2);
  CHECK(r.counts[static_cast<int>(SentimentLabel::Neutral)] == 2);
  CHECK(r.counts[static_cast<int>(SentimentLabel::Positive)] == 1);
  CHECK(r.negative_to_rest == doctest::Approx(2.0 / 3.0));

  // labels written back onto the docs match the counts (independent recount)
  std::array<int64_t, 3> recount{};
  for (const auto& d : docs) {
    REQUIRE(d.label.has_value());
    ++recount[static_cast<int>(*d.label)];
  }
  for (int c = 0; c < 3; ++c) CHECK(recount[c] == r.counts[c]);

  CHECK_FALSE(r.confusion.has_value());
  std::vector<LabeledDoc> empty;
  CHECK_THROWS_AS(assess(empty, lex, nullptr, opts), invalid_argument);
}

TEST_CASE("assess with the pattern method and word tables") {
  auto docs = sample_docs();
  const auto lex = tiny_lexicon();
  AssessOptions opts;
  opts.method = RelabelMethod::Pattern;
  opts.top_k = 1;
  const auto r = assess(docs, lex, nullptr, opts);
  // pattern: good->Pos, bad->Neg, not good (negator scope 1 halves and
  // flips)->Neg, plain->Neu, empty->Neu
  CHECK(r.counts == r.pattern_counts);
  CHECK(r.pattern_counts[static_cast<int>(SentimentLabel::Negative)] == 2);

  REQUIRE(r.common_words.size() == 3);
  REQUIRE(r.unique_words.size() == 3);
  for (const auto& t : r.common_words) CHECK(t.rows.size() <= 1);
}

TEST_CASE("assess against gold labels builds a confusion matrix") {
  auto docs = sample_docs();
  docs[0].original = SentimentLabel::Positive;  // good day -> correct
  docs[1].original = SentimentLabel::Positive;  // bad day -> wrong
  const auto lex = tiny_lexicon();
  AssessOptions opts;
  const auto r = assess(docs, lex, nullptr, opts);
  REQUIRE(r.confusion.has_value());
  CHECK(r.confusion->total() == 2);  // only docs with gold labels
  CHECK(r.confusion->at(SentimentLabel::Positive, SentimentLabel::Positive) ==
        1);
  CHECK(r.confusion->at(SentimentLabel::Positive, SentimentLabel::Negative) ==
        1);
}

TEST_CASE("assess can label with a trained classifier") {
  auto docs = sample_docs();
  const auto lex = tiny_lexicon();

  // train a tiny model over the same token space
  std::vector<LabeledDoc> train = {doc({"good"}), doc({"bad"})};
  const auto vocab = build_vocabulary(train, 1);
  Dataset data;
  for (const auto& d : train)
    data.vectors.push_back(tfidf_vectorize(d.doc, vocab));
  data.labels = {SentimentLabel::Positive, SentimentLabel::Negative};
  auto model = fit_naive_bayes(data, {});
  model.vocabulary = vocab;

  AssessOptions opts;
  opts.use_model = true;
  const auto r = assess(docs, lex, &model, opts);
  CHECK(r.counts[0] + r.counts[1] + r.counts[2] == r.total);
  REQUIRE(docs[0].label.has_value());
  CHECK(*docs[0].label == SentimentLabel::Positive);
  CHECK(*docs[1].label == SentimentLabel::Negative);

  CHECK_THROWS_AS(assess(docs, lex, nullptr, opts), invalid_argument);
}

TEST_CASE("personality report serialization") {
  PersonalityReport r;
  r.total = 10;
  r.counts = {5, 3, 2};
  r.ratios = {0.5, 0.3, 0.2};
  r.negative_to_rest = 1.0;
  r.pattern_counts = {4, 4, 2};
  r.valence_counts = {5, 3, 2};

  const auto csv = personality_report_csv(r);
  CHECK(csv.rfind("metric,value\ntotal,10\n", 0) == 0);
  CHECK(csv.find("negative_count,5") != std::string::npos);
  CHECK(csv.find("positive_count,2") != std::string::npos);
  CHECK(csv.find("negative_ratio,0.500000") != std::string::npos);
  CHECK(csv.find("negative_to_rest_ratio,1.000000") != std::string::npos);

  CHECK(personality_distribution_csv(r) ==
        "scorer,negative,neutral,positive\n"
        "pattern,4,4,2\n"
        "valence,5,3,2\n");

  const auto text = personality_report_text(r);
  CHECK(text.find("tweets assessed: 10") != std::string::npos);
  CHECK(text.find("negative / (positive + neutral): 1.0000") !=
        std::string::npos);
}

TEST_CASE("write_file creates parent directories") {
  namespace fs = std::filesystem;
  const std::string dir = "report_test_dir.tmp";
  const std::string path = dir + "/nested/out.txt";
  write_file(path, "hello\n");
  std::ifstream in(path);
  std::string content((std::istreambuf_iterator<char>(in)),
                      std::istreambuf_iterator<char>());
  CHECK(content == "hello\n");
  fs::remove_all(dir);
  CHECK_THROWS_AS(write_file("/proc/definitely/not/writable/x", "y"), io_error);
}
