#include "senta/features.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <random>
#include <sstream>

#include "senta/parallel.hpp"

namespace senta {

double SparseVector::get(uint32_t index) const {
  auto it = std::lower_bound(
      pairs.begin(), pairs.end(), index,
      [](const auto& p, uint32_t i) { return p.first < i; });
  return (it != pairs.end() && it->first == index) ? it->second : 0.0;
}

Vocabulary build_vocabulary(const std::vector<LabeledDoc>& docs,
                            uint32_t min_df) {
  if (min_df < 1) throw invalid_argument("min_df must be >= 1");
  Vocabulary vocab;
  vocab.n_documents = docs.size();

  // First-occurrence order over the full corpus, then filter by df.
  std::unordered_map<std::string, uint32_t> df;
  std::vector<std::string> order;
  for (const auto& d : docs) {
    std::unordered_set<std::string> seen;
    for (const auto& t : d.doc.tokens) {
      if (!seen.insert(t).second) continue;
      auto [it, inserted] = df.try_emplace(t, 0u);
      if (inserted) order.push_back(t);
      ++it->second;
    }
  }
  for (const auto& t : order) {
    const uint32_t f = df[t];
    if (f < min_df) continue;
    vocab.token_to_index.emplace(t, static_cast<uint32_t>(vocab.index_to_token.size()));
    vocab.index_to_token.push_back(t);
    vocab.document_frequency.push_back(f);
  }
  return vocab;
}

SparseVector tfidf_vectorize(const ProcessedDoc& doc, const Vocabulary& vocab) {
  SparseVector vec;
  vec.dimension = vocab.size();
  std::unordered_map<uint32_t, double> tf;
  for (const auto& t : doc.tokens) {
    auto it = vocab.token_to_index.find(t);
    if (it != vocab.token_to_index.end()) tf[it->second] += 1.0;
  }
  if (tf.empty()) return vec;
  vec.pairs.reserve(tf.size());
  const double n = static_cast<double>(vocab.n_documents);
  for (const auto& [index, count] : tf) {
    const double idf =
        std::log((1.0 + n) / (1.0 + vocab.document_frequency[index])) + 1.0;
    vec.pairs.emplace_back(index, count * idf);
  }
  std::sort(vec.pairs.begin(), vec.pairs.end());
  double norm = 0.0;
  for (const auto& [index, w] : vec.pairs) norm += w * w;
  norm = std::sqrt(norm);
  for (auto& [index, w] : vec.pairs) w /= norm;
  return vec;
}

double jaccard(const std::unordered_set<std::string>& a,
               const std::unordered_set<std::string>& b) {
  if (a.empty() && b.empty()) return 1.0;
  const auto& small = a.size() <= b.size() ? a : b;
  const auto& large = a.size() <= b.size() ? b : a;
  size_t intersection = 0;
  for (const auto& t : small)
    if (large.contains(t)) ++intersection;
  const size_t uni = a.size() + b.size() - intersection;
  return static_cast<double>(intersection) / static_cast<double>(uni);
}

double draw_truncation_threshold(const TruncationPolicy& policy) {
  std::mt19937_64 rng(mix_seed(policy.seed, "truncation-threshold"));
  std::uniform_real_distribution<double> dist(0.6, 0.8);
  return dist(rng);
}

ProcessedDoc rank_and_truncate(const ProcessedDoc& doc, const Lexicon& lex,
                               double threshold, WeightSource source) {
  std::unordered_set<std::string> original(doc.tokens.begin(),
                                           doc.tokens.end());
  // Rank distinct tokens by sentiment impact, least informative first.
  std::vector<std::pair<double, std::string>> ranked;
  ranked.reserve(original.size());
  for (const auto& t : original) {
    double weight = 0.0;
    if (const LexiconEntry* e = lex.find(t); e && e->kind == EntryKind::Sentiment)
      weight = source == WeightSource::AbsValence ? std::abs(e->valence)
                                                  : std::abs(e->polarity);
    ranked.emplace_back(weight, t);
  }
  std::sort(ranked.begin(), ranked.end());

  const double total = static_cast<double>(original.size());
  std::unordered_set<std::string> dropped;
  for (const auto& [weight, token] : ranked) {
    const double remaining = total - static_cast<double>(dropped.size() + 1);
    if (total == 0.0 || remaining / total < threshold) break;
    dropped.insert(token);
  }

  ProcessedDoc out;
  out.source_id = doc.source_id;
  out.tokens.reserve(doc.tokens.size());
  for (const auto& t : doc.tokens)
    if (!dropped.contains(t)) out.tokens.push_back(t);
  out.dropped_all = out.tokens.empty();
  return out;
}

FeaturizedCorpus featurize(const std::vector<LabeledDoc>& docs,
                           const Lexicon& lex, const FeaturizeOptions& options) {
  FeaturizedCorpus result;
  std::vector<LabeledDoc> truncated;
  const std::vector<LabeledDoc>* working = &docs;
  if (options.truncate) {
    result.drawn_threshold = draw_truncation_threshold(options.truncation);
    truncated.resize(docs.size());
    parallel_for(docs.size(), options.threads, [&](size_t i) {
      truncated[i].doc = rank_and_truncate(docs[i].doc, lex,
                                           result.drawn_threshold,
                                           options.truncation.weight_source);
      truncated[i].label = docs[i].label;
      truncated[i].original = docs[i].original;
    });
    working = &truncated;
  }
  result.vocabulary = build_vocabulary(*working, options.min_df);
  result.vectors.resize(working->size());
  parallel_for(working->size(), options.threads, [&](size_t i) {
    result.vectors[i] = tfidf_vectorize((*working)[i].doc, result.vocabulary);
  });
  return result;
}

std::string sparse_vector_line(const SparseVector& v) {
  std::ostringstream out;
  out << "dim=" << v.dimension;
  out.precision(17);
  for (const auto& [index, w] : v.pairs) out << ' ' << index << ':' << w;
  return out.str();
}

SparseVector parse_sparse_vector_line(const std::string& line) {
  std::istringstream in(line);
  std::string head;
  in >> head;
  if (head.rfind("dim=", 0) != 0)
    throw parse_error("sparse vector line missing dim= header");
  SparseVector v;
  v.dimension = static_cast<uint32_t>(std::stoul(head.substr(4)));
  std::string pair;
  while (in >> pair) {
    auto colon = pair.find(':');
    if (colon == std::string::npos)
      throw parse_error("malformed sparse pair: " + pair);
    v.pairs.emplace_back(static_cast<uint32_t>(std::stoul(pair.substr(0, colon))),
                         std::stod(pair.substr(colon + 1)));
  }
  return v;
}

void save_vocabulary(const Vocabulary& vocab, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw io_error("cannot write vocabulary file: " + path);
  out << "# n_documents=" << vocab.n_documents << '\n';
  for (uint32_t i = 0; i < vocab.size(); ++i)
    out << vocab.index_to_token[i] << '\t' << i << '\t'
        << vocab.document_frequency[i] << '\n';
}

Vocabulary load_vocabulary(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw io_error("cannot open vocabulary file: " + path);
  Vocabulary vocab;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line[0] == '#') {
      auto eq = line.find("n_documents=");
      if (eq != std::string::npos)
        vocab.n_documents = std::stoull(line.substr(eq + 12));
      continue;
    }
    std::istringstream ss(line);
    std::string token, index, df;
    if (!std::getline(ss, token, '\t') || !std::getline(ss, index, '\t') ||
        !std::getline(ss, df, '\t'))
      throw parse_error("malformed vocabulary line: " + line);
    const uint32_t i = static_cast<uint32_t>(std::stoul(index));
    if (i != vocab.index_to_token.size())
      throw parse_error("vocabulary indices must be dense and ordered");
    vocab.index_to_token.push_back(token);
    vocab.token_to_index.emplace(token, i);
    vocab.document_frequency.push_back(static_cast<uint32_t>(std::stoul(df)));
  }
  return vocab;
}

}  // namespace senta
