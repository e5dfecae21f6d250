#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "senta/common.hpp"
#include "senta/lexicon.hpp"

namespace senta {

struct SparseVector {
  // Sorted by index, strictly increasing; weights finite and nonzero.
  std::vector<std::pair<uint32_t, double>> pairs;
  uint32_t dimension = 0;

  double get(uint32_t index) const;
};

struct Vocabulary {
  std::unordered_map<std::string, uint32_t> token_to_index;
  std::vector<std::string> index_to_token;
  std::vector<uint32_t> document_frequency;
  uint64_t n_documents = 0;

  uint32_t size() const { return static_cast<uint32_t>(index_to_token.size()); }
};

// Tokens with document frequency >= min_df, indices assigned in order of
// first occurrence across the corpus.
Vocabulary build_vocabulary(const std::vector<LabeledDoc>& docs, uint32_t min_df);

// weight(t) = tf(t) * (ln((1 + N) / (1 + df(t))) + 1), L2-normalized.
// Out-of-vocabulary tokens are ignored; an all-OOV doc yields a zero vector.
SparseVector tfidf_vectorize(const ProcessedDoc& doc, const Vocabulary& vocab);

// |a n b| / |a u b|; both empty -> 1.0.
double jaccard(const std::unordered_set<std::string>& a,
               const std::unordered_set<std::string>& b);

enum class WeightSource { AbsValence, AbsPolarity };

struct TruncationPolicy {
  uint64_t seed = 0;
  WeightSource weight_source = WeightSource::AbsValence;
};

// One threshold per run, uniform in [0.6, 0.8], derived from the policy seed.
double draw_truncation_threshold(const TruncationPolicy& policy);

// Drops the least sentiment-bearing tokens (ascending |valence| or
// |polarity|, unknown tokens first, ties lexicographic) while the Jaccard
// similarity between the original and remaining token sets stays >= the
// threshold. Relative order of surviving tokens is preserved.
ProcessedDoc rank_and_truncate(const ProcessedDoc& doc, const Lexicon& lex,
                               double threshold,
                               WeightSource source = WeightSource::AbsValence);

struct FeaturizeOptions {
  bool truncate = true;
  TruncationPolicy truncation;
  uint32_t min_df = 2;
  int threads = 1;
};

struct FeaturizedCorpus {
  Vocabulary vocabulary;
  std::vector<SparseVector> vectors;  // aligned with the input docs
  double drawn_threshold = 0.0;
};

// Full featurization pass: optional rank-and-truncate per doc (one threshold
// drawn for the whole pass), vocabulary over the truncated docs, then TF-IDF.
FeaturizedCorpus featurize(const std::vector<LabeledDoc>& docs,
                           const Lexicon& lex, const FeaturizeOptions& options);

// Serialization: "index:weight" pairs, space separated, with a "dim=V" header
// token; vocabulary as TSV token<TAB>index<TAB>df.
std::string sparse_vector_line(const SparseVector& v);
SparseVector parse_sparse_vector_line(const std::string& line);
void save_vocabulary(const Vocabulary& vocab, const std::string& path);
Vocabulary load_vocabulary(const std::string& path);

}  // namespace senta
