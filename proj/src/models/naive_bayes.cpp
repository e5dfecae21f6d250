#include <cmath>

#include "senta/models.hpp"

namespace senta {

ClassifierModel fit_naive_bayes(const Dataset& data, const NbParams& hp) {
  data.validate();
  if (data.size() == 0) throw invalid_argument("naive bayes: empty dataset");
  const uint32_t dim = data.dimension();
  if (dim == 0) throw invalid_argument("naive bayes: zero-dimension data");
  if (hp.laplace_alpha <= 0)
    throw invalid_argument("naive bayes: laplace_alpha must be > 0");

  const double alpha = hp.laplace_alpha;
  std::array<double, kNumClasses> class_weight{};
  std::array<std::vector<double>, kNumClasses> token_weight;
  for (auto& v : token_weight) v.assign(dim, 0.0);
  std::array<double, kNumClasses> token_total{};

  for (size_t i = 0; i < data.size(); ++i) {
    const int c = static_cast<int>(data.labels[i]);
    const double w = data.weights.empty() ? 1.0 : data.weights[i];
    class_weight[c] += w;
    for (const auto& [index, value] : data.vectors[i].pairs) {
      token_weight[c][index] += w * value;
      token_total[c] += w * value;
    }
  }

  NbModel nb;
  nb.laplace_alpha = alpha;
  double total_weight = 0.0;
  for (double w : class_weight) total_weight += w;
  for (int c = 0; c < kNumClasses; ++c) {
    // Priors smoothed too, so an absent class keeps a finite log-prior.
    nb.log_prior[c] = std::log((class_weight[c] + alpha) /
                               (total_weight + alpha * kNumClasses));
    nb.log_likelihood[c].resize(dim);
    const double denom = token_total[c] + alpha * dim;
    for (uint32_t t = 0; t < dim; ++t)
      nb.log_likelihood[c][t] = std::log((token_weight[c][t] + alpha) / denom);
  }

  ClassifierModel model;
  model.variant = ModelVariant::NaiveBayes;
  model.dimension = dim;
  model.params = std::move(nb);
  return model;
}

}  // namespace senta
