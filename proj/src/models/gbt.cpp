#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "tree_builder.hpp"

namespace senta {

// One-vs-rest gradient boosting on the softmax logistic loss: each round fits
// a depth-limited regression tree per class to the negative gradient
// (y_ic - p_ic) and adds it with shrinkage. Base scores are the class
// log-priors.
ClassifierModel fit_gbt(const Dataset& data, const GbtParams& hp,
                        uint64_t seed) {
  data.validate();
  if (data.size() == 0) throw invalid_argument("gbt: empty dataset");
  const uint32_t dim = data.dimension();
  if (dim == 0) throw invalid_argument("gbt: zero-dimension data");

  const size_t n = data.size();
  GbtModel gbt;
  gbt.shrinkage = hp.shrinkage;

  std::array<double, kNumClasses> prior{};
  for (auto l : data.labels) prior[static_cast<int>(l)] += 1.0;
  for (int c = 0; c < kNumClasses; ++c)
    gbt.base_score[c] =
        std::log((prior[c] + 1.0) / (static_cast<double>(n) + kNumClasses));

  // margins[c][i], updated incrementally as trees are added.
  std::array<std::vector<double>, kNumClasses> margins;
  for (int c = 0; c < kNumClasses; ++c)
    margins[c].assign(n, gbt.base_score[c]);

  detail::TreeBuildConfig config;
  config.max_depth = hp.depth;
  config.min_leaf = 1;
  config.features_per_split = 0;  // all features
  config.regression = true;

  std::mt19937_64 rng(mix_seed(seed, "gbt"));
  std::vector<double> residuals(n);
  std::vector<size_t> all(n);
  std::iota(all.begin(), all.end(), 0);
  const std::vector<SentimentLabel> no_labels;

  gbt.trees.reserve(static_cast<size_t>(hp.n_rounds));
  for (int round = 0; round < hp.n_rounds; ++round) {
    // softmax probabilities at the current margins
    std::array<Tree, kNumClasses> stage;
    std::vector<std::array<double, kNumClasses>> probs(n);
    for (size_t i = 0; i < n; ++i) {
      double m = margins[0][i];
      for (int c = 1; c < kNumClasses; ++c) m = std::max(m, margins[c][i]);
      double z = 0.0;
      for (int c = 0; c < kNumClasses; ++c) {
        probs[i][c] = std::exp(margins[c][i] - m);
        z += probs[i][c];
      }
      if (!std::isfinite(z) || z <= 0.0)
        throw std::runtime_error("gbt: margins diverged at round " +
                                 std::to_string(round));
      for (int c = 0; c < kNumClasses; ++c) probs[i][c] /= z;
    }
    for (int c = 0; c < kNumClasses; ++c) {
      for (size_t i = 0; i < n; ++i) {
        const double y = data.labels[i] == static_cast<SentimentLabel>(c)
                             ? 1.0
                             : 0.0;
        residuals[i] = y - probs[i][c];
      }
      stage[c] = detail::build_tree(data.vectors, no_labels, residuals,
                                    data.weights, all, config, rng);
      for (size_t i = 0; i < n; ++i)
        margins[c][i] += hp.shrinkage * stage[c].leaf_for(data.vectors[i]).value;
    }
    gbt.trees.push_back(std::move(stage));
  }

  ClassifierModel model;
  model.variant = ModelVariant::Gbt;
  model.seed = seed;
  model.dimension = dim;
  model.params = std::move(gbt);
  return model;
}

}  // namespace senta
