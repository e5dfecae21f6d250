#include <algorithm>
#include <cmath>

#include "senta/models.hpp"

namespace senta {

void Dataset::validate() const {
  if (vectors.size() != labels.size())
    throw invalid_argument("dataset: |vectors| != |labels|");
  if (!weights.empty() && weights.size() != vectors.size())
    throw invalid_argument("dataset: |weights| != |vectors|");
  const uint32_t dim = dimension();
  for (const auto& v : vectors)
    if (v.dimension != dim)
      throw invalid_argument("dataset: inconsistent vector dimensions");
}

std::vector<double> balanced_weights(const std::vector<SentimentLabel>& labels) {
  std::array<double, kNumClasses> counts{};
  for (auto l : labels) counts[static_cast<int>(l)] += 1.0;
  int present = 0;
  for (double c : counts)
    if (c > 0) ++present;
  std::vector<double> weights(labels.size());
  const double n = static_cast<double>(labels.size());
  for (size_t i = 0; i < labels.size(); ++i)
    weights[i] = n / (present * counts[static_cast<int>(labels[i])]);
  return weights;
}

ModelVariant model_variant_from_name(std::string_view name) {
  if (name == "nb" || name == "naive-bayes") return ModelVariant::NaiveBayes;
  if (name == "softmax" || name == "mlr") return ModelVariant::Softmax;
  if (name == "svm") return ModelVariant::Svm;
  if (name == "forest" || name == "rf") return ModelVariant::Forest;
  if (name == "gbt" || name == "xgb") return ModelVariant::Gbt;
  throw invalid_argument("unknown model: " + std::string(name));
}

const char* model_variant_name(ModelVariant v) {
  switch (v) {
    case ModelVariant::NaiveBayes: return "nb";
    case ModelVariant::Softmax: return "softmax";
    case ModelVariant::Svm: return "svm";
    case ModelVariant::Forest: return "forest";
    case ModelVariant::Gbt: return "gbt";
  }
  return "?";
}

ClassifierModel fit_model(ModelVariant variant, const Dataset& data,
                          const Hyperparams& hp, uint64_t seed, int threads) {
  Dataset working = data;
  if (hp.balanced && working.weights.empty())
    working.weights = balanced_weights(working.labels);
  switch (variant) {
    case ModelVariant::NaiveBayes: return fit_naive_bayes(working, hp.nb);
    case ModelVariant::Softmax: return fit_softmax(working, hp.softmax, seed);
    case ModelVariant::Svm: return fit_linear_svm(working, hp.svm, seed);
    case ModelVariant::Forest:
      return fit_random_forest(working, hp.forest, seed, threads);
    case ModelVariant::Gbt: return fit_gbt(working, hp.gbt, seed);
  }
  throw invalid_argument("unknown model variant");
}

namespace {

SentimentLabel argmax_label(const std::array<double, kNumClasses>& scores) {
  int best = 0;
  for (int c = 1; c < kNumClasses; ++c)
    if (scores[c] > scores[best]) best = c;  // ties keep canonical order
  return static_cast<SentimentLabel>(best);
}

std::array<double, kNumClasses> softmax_of(
    const std::array<double, kNumClasses>& margins) {
  const double m = *std::max_element(margins.begin(), margins.end());
  std::array<double, kNumClasses> p{};
  double z = 0.0;
  for (int c = 0; c < kNumClasses; ++c) {
    p[c] = std::exp(margins[c] - m);
    z += p[c];
  }
  for (auto& v : p) v /= z;
  return p;
}

double dot_sparse(const std::vector<double>& w, const SparseVector& x) {
  double s = 0.0;
  for (const auto& [index, value] : x.pairs) s += w[index] * value;
  return s;
}

}  // namespace

const TreeNode& Tree::leaf_for(const SparseVector& vec) const {
  const TreeNode* node = &nodes[0];
  while (node->feature >= 0) {
    const double v = vec.get(static_cast<uint32_t>(node->feature));
    node = &nodes[static_cast<size_t>(v <= node->threshold ? node->left
                                                           : node->right)];
  }
  return *node;
}

Prediction predict(const ClassifierModel& model, const SparseVector& vec) {
  if (vec.dimension != model.dimension)
    throw invalid_argument("predict: vector dimension " +
                           std::to_string(vec.dimension) +
                           " != model dimension " +
                           std::to_string(model.dimension));
  Prediction pred;
  std::array<double, kNumClasses> scores{};

  if (const auto* nb = std::get_if<NbModel>(&model.params)) {
    for (int c = 0; c < kNumClasses; ++c) {
      scores[c] = nb->log_prior[c];
      for (const auto& [index, value] : vec.pairs)
        scores[c] += value * nb->log_likelihood[c][index];
    }
    pred.class_scores = softmax_of(scores);
  } else if (const auto* sm = std::get_if<SoftmaxModel>(&model.params)) {
    for (int c = 0; c < kNumClasses; ++c)
      scores[c] = dot_sparse(sm->weights[c], vec) + sm->bias[c];
    pred.class_scores = softmax_of(scores);
  } else if (const auto* svm = std::get_if<SvmModel>(&model.params)) {
    for (int c = 0; c < kNumClasses; ++c)
      scores[c] = dot_sparse(svm->weights[c], vec) + svm->bias[c];
    pred.class_scores = scores;  // raw margins, not probabilities
  } else if (const auto* forest = std::get_if<ForestModel>(&model.params)) {
    for (const auto& tree : forest->trees) {
      const TreeNode& leaf = tree.leaf_for(vec);
      scores[static_cast<int>(argmax_label(leaf.dist))] += 1.0;
    }
    const double n = static_cast<double>(forest->trees.size());
    for (auto& s : scores) s /= n;  // vote fractions
    pred.class_scores = scores;
  } else if (const auto* gbt = std::get_if<GbtModel>(&model.params)) {
    scores = gbt->base_score;
    for (const auto& round : gbt->trees)
      for (int c = 0; c < kNumClasses; ++c)
        scores[c] += gbt->shrinkage * round[c].leaf_for(vec).value;
    pred.class_scores = softmax_of(scores);
  }

  pred.label = argmax_label(pred.class_scores);
  return pred;
}

}  // namespace senta
