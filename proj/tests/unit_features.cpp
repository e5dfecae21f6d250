#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <cstdio>
#include <fstream>
#include <random>

#include "doctest.h"
#include "senta/features.hpp"

using namespace senta;

namespace {

LabeledDoc doc(std::vector<std::string> tokens) {
  LabeledDoc d;
  d.doc.tokens = std::move(tokens);
  d.doc.dropped_all = d.doc.tokens.empty();
  return d;
}

Lexicon weighted_lexicon() {
  Lexicon lex;
  lex.insert({"good", 0.475, 0.6, 1.9, EntryKind::Sentiment, 0.0});
  lex.insert({"great", 0.8, 0.75, 3.1, EntryKind::Sentiment, 0.0});
  lex.insert({"bad", -0.625, 0.7, -2.5, EntryKind::Sentiment, 0.0});
  lex.insert({"meh", 0.05, 0.2, 0.2, EntryKind::Sentiment, 0.0});
  return lex;
}

}  // namespace

TEST_CASE("vocabulary build with df filter and stable indices") {
  std::vector<LabeledDoc> docs = {doc({"a", "b"}), doc({"b"})};
  auto v1 = build_vocabulary(docs, 1);
  CHECK(v1.size() == 2);
  CHECK(v1.token_to_index.at("a") == 0);
  CHECK(v1.token_to_index.at("b") == 1);
  CHECK(v1.document_frequency[1] == 2);
  CHECK(v1.n_documents == 2);

  auto v2 = build_vocabulary(docs, 2);
  CHECK(v2.size() == 1);
  CHECK(v2.token_to_index.at("b") == 0);

  CHECK(build_vocabulary({}, 1).size() == 0);
  CHECK_THROWS_AS(build_vocabulary(docs, 0), invalid_argument);

  // duplicate tokens inside one doc count once toward df
  std::vector<LabeledDoc> dup = {doc({"x", "x"})};
  CHECK(build_vocabulary(dup, 1).document_frequency[0] == 1);
}

TEST_CASE("tfidf hand-checked two-document corpus") {
  std::vector<LabeledDoc> docs = {doc({"good", "movie"}),
                                  doc({"bad", "movie"})};
  const auto vocab = build_vocabulary(docs, 1);
  const auto v = tfidf_vectorize(docs[0].doc, vocab);
  REQUIRE(v.pairs.size() == 2);
  CHECK(v.pairs[0].second == doctest::Approx(0.814802).epsilon(1e-6));
  CHECK(v.pairs[1].second == doctest::Approx(0.579739).epsilon(1e-6));

  // single in-vocab token -> unit weight
  const auto single = tfidf_vectorize(doc({"good"}).doc, vocab);
  REQUIRE(single.pairs.size() == 1);
  CHECK(single.pairs[0].second == doctest::Approx(1.0));

  // all-OOV -> zero vector with preserved dimension
  const auto oov = tfidf_vectorize(doc({"zzz"}).doc, vocab);
  CHECK(oov.pairs.empty());
  CHECK(oov.dimension == vocab.size());
}

TEST_CASE("tfidf vectors are unit length with positive weights") {
  std::mt19937_64 rng(11);
  const std::vector<std::string> pool = {"a", "b", "c", "d", "e", "f"};
  std::uniform_int_distribution<size_t> pick(0, pool.size() - 1);
  std::vector<LabeledDoc> docs;
  for (int i = 0; i < 40; ++i) {
    std::vector<std::string> t;
    for (int j = 0; j <= static_cast<int>(rng() % 6); ++j)
      t.push_back(pool[pick(rng)]);
    docs.push_back(doc(t));
  }
  const auto vocab = build_vocabulary(docs, 1);
  for (const auto& d : docs) {
    const auto v = tfidf_vectorize(d.doc, vocab);
    double norm = 0.0;
    uint32_t prev = 0;
    bool first = true;
    for (const auto& [i, w] : v.pairs) {
      CHECK(w > 0.0);
      if (!first) CHECK(i > prev);
      prev = i;
      first = false;
      norm += w * w;
    }
    if (!v.pairs.empty()) CHECK(std::sqrt(norm) == doctest::Approx(1.0).epsilon(1e-9));
  }
}

TEST_CASE("jaccard") {
  using Set = std::unordered_set<std::string>;
  CHECK(jaccard(Set{"a", "b", "c"}, Set{"b", "c", "d"}) == doctest::Approx(0.5));
  CHECK(jaccard(Set{"a"}, Set{"a"}) == doctest::Approx(1.0));
  CHECK(jaccard(Set{"a"}, Set{"b"}) == doctest::Approx(0.0));
  CHECK(jaccard(Set{}, Set{}) == doctest::Approx(1.0));
  CHECK(jaccard(Set{"a", "b"}, Set{"b"}) == jaccard(Set{"b"}, Set{"a", "b"}));
}

TEST_CASE("truncation threshold draw is seeded and in range") {
  TruncationPolicy p;
  p.seed = 42;
  const double t1 = draw_truncation_threshold(p);
  const double t2 = draw_truncation_threshold(p);
  CHECK(t1 == t2);
  CHECK(t1 >= 0.6);
  CHECK(t1 <= 0.8);
  p.seed = 43;
  CHECK(draw_truncation_threshold(p) != t1);
}

TEST_CASE("rank_and_truncate respects the jaccard bound") {
  const auto lex = weighted_lexicon();
  // 5 distinct tokens at threshold 0.8: at most one may go (4/5 = 0.8)
  const auto d5 = doc({"x", "y", "z", "good", "great"});
  auto out = rank_and_truncate(d5.doc, lex, 0.8);
  CHECK(out.tokens.size() == 4);
  // zero-weight unknowns go first, lexicographic ties
  CHECK(out.tokens == std::vector<std::string>{"y", "z", "good", "great"});

  // threshold 0.6: two may go
  out = rank_and_truncate(d5.doc, lex, 0.6);
  CHECK(out.tokens == std::vector<std::string>{"z", "good", "great"});

  // survivors keep relative order; repeated tokens count once
  const auto rep = doc({"good", "x", "good", "great"});
  out = rank_and_truncate(rep.doc, lex, 0.6);
  CHECK(out.tokens == std::vector<std::string>{"good", "good", "great"});
}

TEST_CASE("truncation invariant on random docs") {
  const auto lex = weighted_lexicon();
  std::mt19937_64 rng(17);
  const std::vector<std::string> pool = {"good", "great", "bad", "meh",
                                         "x",    "y",     "z",   "w"};
  std::uniform_int_distribution<size_t> pick(0, pool.size() - 1);
  std::uniform_real_distribution<double> thr(0.6, 0.8);
  for (int i = 0; i < 1000; ++i) {
    std::vector<std::string> t;
    for (int j = 0; j <= static_cast<int>(rng() % 10); ++j)
      t.push_back(pool[pick(rng)]);
    const auto original = doc(t);
    const double threshold = thr(rng);
    const auto truncated = rank_and_truncate(original.doc, lex, threshold);
    std::unordered_set<std::string> a(original.doc.tokens.begin(),
                                      original.doc.tokens.end());
    std::unordered_set<std::string> b(truncated.tokens.begin(),
                                      truncated.tokens.end());
    CHECK(jaccard(a, b) >= threshold);
    // determinism
    const auto again = rank_and_truncate(original.doc, lex, threshold);
    CHECK(again.tokens == truncated.tokens);
  }
}

TEST_CASE("featurize pass aligns vectors with docs") {
  const auto lex = weighted_lexicon();
  std::vector<LabeledDoc> docs = {doc({"good", "movie", "fine"}),
                                  doc({"bad", "movie"}), doc({"good"})};
  FeaturizeOptions opts;
  opts.truncate = true;
  opts.truncation.seed = 42;
  opts.min_df = 1;
  const auto f = featurize(docs, lex, opts);
  CHECK(f.vectors.size() == docs.size());
  CHECK(f.drawn_threshold >= 0.6);
  CHECK(f.drawn_threshold <= 0.8);
  CHECK(f.vocabulary.size() > 0);

  // threads must not change the output
  FeaturizeOptions opts8 = opts;
  opts8.threads = 8;
  const auto f8 = featurize(docs, lex, opts8);
  CHECK(f8.vocabulary.index_to_token == f.vocabulary.index_to_token);
  for (size_t i = 0; i < docs.size(); ++i)
    CHECK(f8.vectors[i].pairs == f.vectors[i].pairs);
}

TEST_CASE("sparse line and vocabulary serialization round trips") {
  SparseVector v;
  v.dimension = 10;
  v.pairs = {{1, 0.25}, {7, -0.5}};
  const auto line = sparse_vector_line(v);
  const auto back = parse_sparse_vector_line(line);
  CHECK(back.dimension == 10);
  CHECK(back.pairs == v.pairs);
  CHECK_THROWS_AS(parse_sparse_vector_line("nodim 1:0.5"), parse_error);

  Vocabulary vocab;
  vocab.n_documents = 5;
  vocab.index_to_token = {"alpha", "beta"};
  vocab.document_frequency = {3, 2};
  vocab.token_to_index = {{"alpha", 0}, {"beta", 1}};
  const std::string path = "vocab_roundtrip.tmp";
  save_vocabulary(vocab, path);
  const auto loaded = load_vocabulary(path);
  std::remove(path.c_str());
  CHECK(loaded.n_documents == 5);
  CHECK(loaded.index_to_token == vocab.index_to_token);
  CHECK(loaded.document_frequency == vocab.document_frequency);
}
