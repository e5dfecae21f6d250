#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "senta/common.hpp"
#include "senta/features.hpp"

namespace senta {

struct Dataset {
  std::vector<SparseVector> vectors;
  std::vector<SentimentLabel> labels;
  // Optional per-example weights (empty = uniform 1.0).
  std::vector<double> weights;

  size_t size() const { return vectors.size(); }
  uint32_t dimension() const {
    return vectors.empty() ? 0 : vectors.front().dimension;
  }
  void validate() const;  // throws invalid_argument on shape violations
};

// n / (K * n_c) per example, the usual balanced scheme.
std::vector<double> balanced_weights(const std::vector<SentimentLabel>& labels);

enum class ModelVariant { NaiveBayes, Softmax, Svm, Forest, Gbt };

ModelVariant model_variant_from_name(std::string_view name);
const char* model_variant_name(ModelVariant v);

struct NbParams {
  double laplace_alpha = 1.0;
};
struct SoftmaxParams {
  double learning_rate = 0.1;
  double l2 = 1e-4;
  int epochs = 10;
  int batch = 256;
};
struct SvmParams {
  double c = 1.0;
  int epochs = 10;
  double learning_rate = 1.0;  // scales the pegasos step
};
struct ForestParams {
  int n_trees = 100;
  int max_depth = 32;
  int features_per_split = 0;  // 0 = ceil(sqrt(V))
  int min_leaf = 1;
};
struct GbtParams {
  int n_rounds = 100;
  int depth = 4;
  double shrinkage = 0.1;
};

struct Hyperparams {
  NbParams nb;
  SoftmaxParams softmax;
  SvmParams svm;
  ForestParams forest;
  GbtParams gbt;
  bool balanced = false;  // --class-weight balanced
};

// ---- trained parameter blocks ----

struct NbModel {
  std::array<double, kNumClasses> log_prior{};
  // [class][feature] token log-likelihoods.
  std::array<std::vector<double>, kNumClasses> log_likelihood;
  double laplace_alpha = 1.0;
};

struct SoftmaxModel {
  // Row-major class-by-feature weights plus per-class bias.
  std::array<std::vector<double>, kNumClasses> weights;
  std::array<double, kNumClasses> bias{};
  std::vector<double> epoch_loss;  // full-data loss after each epoch
};

struct SvmModel {
  // One-vs-rest weight vector + bias per class; argmax of margins.
  std::array<std::vector<double>, kNumClasses> weights;
  std::array<double, kNumClasses> bias{};
};

struct TreeNode {
  int32_t feature = -1;  // -1 = leaf
  double threshold = 0.0;
  int32_t left = -1;
  int32_t right = -1;
  double value = 0.0;                       // regression leaf payload
  std::array<double, kNumClasses> dist{};   // classification leaf payload
};

struct Tree {
  std::vector<TreeNode> nodes;  // nodes[0] is the root
  // Leaf reached by vec, following value <= threshold to the left.
  const TreeNode& leaf_for(const SparseVector& vec) const;
};

struct ForestModel {
  std::vector<Tree> trees;
};

struct GbtModel {
  std::array<double, kNumClasses> base_score{};
  // trees[round][class]; margins accumulate base + shrinkage * sum of leaves.
  std::vector<std::array<Tree, kNumClasses>> trees;
  double shrinkage = 0.1;
};

struct ClassifierModel {
  ModelVariant variant = ModelVariant::NaiveBayes;
  uint64_t seed = 0;
  uint32_t dimension = 0;
  int version = 1;
  Vocabulary vocabulary;  // may be empty when trained on raw vectors
  std::variant<NbModel, SoftmaxModel, SvmModel, ForestModel, GbtModel> params;
};

struct Prediction {
  SentimentLabel label = SentimentLabel::Negative;
  std::array<double, kNumClasses> class_scores{};
};

ClassifierModel fit_naive_bayes(const Dataset& data, const NbParams& hp);
ClassifierModel fit_softmax(const Dataset& data, const SoftmaxParams& hp,
                            uint64_t seed);
ClassifierModel fit_linear_svm(const Dataset& data, const SvmParams& hp,
                               uint64_t seed);
ClassifierModel fit_random_forest(const Dataset& data, const ForestParams& hp,
                                  uint64_t seed, int threads = 1);
ClassifierModel fit_gbt(const Dataset& data, const GbtParams& hp, uint64_t seed);

ClassifierModel fit_model(ModelVariant variant, const Dataset& data,
                          const Hyperparams& hp, uint64_t seed,
                          int threads = 1);

Prediction predict(const ClassifierModel& model, const SparseVector& vec);

// Cross-entropy + L2 loss and gradient at arbitrary parameters; used by the
// trainer and by the finite-difference check.
double softmax_loss_and_grad(
    const Dataset& data, const std::vector<size_t>& batch,
    const std::array<std::vector<double>, kNumClasses>& weights,
    const std::array<double, kNumClasses>& bias, double l2,
    std::array<std::vector<double>, kNumClasses>* grad_w,
    std::array<double, kNumClasses>* grad_b);

// Versioned JSON persistence. load(save(m)) is prediction-identical and
// re-serializes byte-identically.
void save_model(const ClassifierModel& model, const std::string& path);
ClassifierModel load_model(const std::string& path);
std::string model_to_json(const ClassifierModel& model);
ClassifierModel model_from_json(const std::string& json_text);

}  // namespace senta
