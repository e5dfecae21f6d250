#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "senta/models.hpp"

namespace senta {
namespace {

std::array<double, kNumClasses> class_probabilities(
    const std::array<std::vector<double>, kNumClasses>& weights,
    const std::array<double, kNumClasses>& bias, const SparseVector& x) {
  std::array<double, kNumClasses> z{};
  for (int c = 0; c < kNumClasses; ++c) {
    z[c] = bias[c];
    for (const auto& [index, value] : x.pairs) z[c] += weights[c][index] * value;
  }
  const double m = *std::max_element(z.begin(), z.end());
  double sum = 0.0;
  for (int c = 0; c < kNumClasses; ++c) {
    z[c] = std::exp(z[c] - m);
    sum += z[c];
  }
  for (auto& v : z) v /= sum;
  return z;
}

}  // namespace

double softmax_loss_and_grad(
    const Dataset& data, const std::vector<size_t>& batch,
    const std::array<std::vector<double>, kNumClasses>& weights,
    const std::array<double, kNumClasses>& bias, double l2,
    std::array<std::vector<double>, kNumClasses>* grad_w,
    std::array<double, kNumClasses>* grad_b) {
  const uint32_t dim = data.dimension();
  if (grad_w)
    for (auto& g : *grad_w) g.assign(dim, 0.0);
  if (grad_b) grad_b->fill(0.0);

  double loss = 0.0;
  double weight_sum = 0.0;
  for (size_t i : batch) {
    const SparseVector& x = data.vectors[i];
    const double w = data.weights.empty() ? 1.0 : data.weights[i];
    const int y = static_cast<int>(data.labels[i]);
    auto p = class_probabilities(weights, bias, x);
    loss += -w * std::log(std::max(p[y], 1e-300));
    weight_sum += w;
    if (grad_w) {
      for (int c = 0; c < kNumClasses; ++c) {
        const double delta = w * (p[c] - (c == y ? 1.0 : 0.0));
        (*grad_b)[c] += delta;
        for (const auto& [index, value] : x.pairs)
          (*grad_w)[c][index] += delta * value;
      }
    }
  }
  if (weight_sum > 0) {
    loss /= weight_sum;
    if (grad_w) {
      for (auto& g : *grad_w)
        for (auto& v : g) v /= weight_sum;
      for (auto& v : *grad_b) v /= weight_sum;
    }
  }
  // L2 penalty on the weight matrix (biases excluded).
  for (int c = 0; c < kNumClasses; ++c)
    for (uint32_t t = 0; t < dim; ++t) {
      loss += 0.5 * l2 * weights[c][t] * weights[c][t];
      if (grad_w) (*grad_w)[c][t] += l2 * weights[c][t];
    }
  return loss;
}

ClassifierModel fit_softmax(const Dataset& data, const SoftmaxParams& hp,
                            uint64_t seed) {
  data.validate();
  if (data.size() == 0) throw invalid_argument("softmax: empty dataset");
  const uint32_t dim = data.dimension();
  if (dim == 0) throw invalid_argument("softmax: zero-dimension data");

  SoftmaxModel sm;
  for (auto& w : sm.weights) w.assign(dim, 0.0);

  std::mt19937_64 rng(mix_seed(seed, "softmax-shuffle"));
  std::vector<size_t> order(data.size());
  std::iota(order.begin(), order.end(), 0);
  const size_t batch_size =
      hp.batch <= 0 ? data.size() : static_cast<size_t>(hp.batch);

  std::array<std::vector<double>, kNumClasses> grad_w;
  std::array<double, kNumClasses> grad_b{};
  std::vector<size_t> batch;
  std::vector<size_t> all(order);

  for (int epoch = 0; epoch < hp.epochs; ++epoch) {
    std::shuffle(order.begin(), order.end(), rng);
    for (size_t start = 0; start < order.size(); start += batch_size) {
      const size_t end = std::min(order.size(), start + batch_size);
      batch.assign(order.begin() + static_cast<ptrdiff_t>(start),
                   order.begin() + static_cast<ptrdiff_t>(end));
      softmax_loss_and_grad(data, batch, sm.weights, sm.bias, hp.l2, &grad_w,
                            &grad_b);
      for (int c = 0; c < kNumClasses; ++c) {
        sm.bias[c] -= hp.learning_rate * grad_b[c];
        for (uint32_t t = 0; t < dim; ++t)
          sm.weights[c][t] -= hp.learning_rate * grad_w[c][t];
      }
    }
    const double loss =
        softmax_loss_and_grad(data, all, sm.weights, sm.bias, hp.l2, nullptr,
                              nullptr);
    if (!std::isfinite(loss))
      throw std::runtime_error("softmax: training loss diverged at epoch " +
                               std::to_string(epoch));
    sm.epoch_loss.push_back(loss);
  }

  ClassifierModel model;
  model.variant = ModelVariant::Softmax;
  model.seed = seed;
  model.dimension = dim;
  model.params = std::move(sm);
  return model;
}

ClassifierModel fit_linear_svm(const Dataset& data, const SvmParams& hp,
                               uint64_t seed) {
  data.validate();
  if (data.size() == 0) throw invalid_argument("svm: empty dataset");
  const uint32_t dim = data.dimension();
  if (dim == 0) throw invalid_argument("svm: zero-dimension data");

  SvmModel svm;
  for (auto& w : svm.weights) w.assign(dim, 0.0);

  // One-vs-rest hinge loss with L2, pegasos-style step schedule. lambda is
  // the regularization strength implied by c.
  const double n = static_cast<double>(data.size());
  const double lambda = 1.0 / (hp.c * n);

  for (int c = 0; c < kNumClasses; ++c) {
    std::mt19937_64 rng(
        mix_seed(seed, std::string("svm-class-") + std::to_string(c)));
    std::vector<size_t> order(data.size());
    std::iota(order.begin(), order.end(), 0);
    auto& w = svm.weights[c];
    double& b = svm.bias[c];
    double scale = 1.0;  // w_true = scale * w, for O(nnz) decay
    int64_t t = 0;
    for (int epoch = 0; epoch < hp.epochs; ++epoch) {
      std::shuffle(order.begin(), order.end(), rng);
      for (size_t i : order) {
        ++t;
        const double eta = hp.learning_rate /
                           (1.0 + hp.learning_rate * lambda *
                                      static_cast<double>(t));
        const double y =
            data.labels[i] == static_cast<SentimentLabel>(c) ? 1.0 : -1.0;
        const double sample_w = data.weights.empty() ? 1.0 : data.weights[i];
        double margin = b;
        for (const auto& [index, value] : data.vectors[i].pairs)
          margin += scale * w[index] * value;
        const double decay = 1.0 - eta * lambda;
        scale *= decay;
        b *= decay;
        if (y * margin < 1.0) {
          const double step = eta * sample_w * y;
          for (const auto& [index, value] : data.vectors[i].pairs)
            w[index] += step * value / scale;
          b += step;
        }
        if (scale < 1e-9) {
          for (auto& v : w) v *= scale;
          scale = 1.0;
        }
        if (!std::isfinite(b) || !std::isfinite(scale))
          throw std::runtime_error("svm: diverged");
      }
    }
    for (auto& v : w) v *= scale;
  }

  ClassifierModel model;
  model.variant = ModelVariant::Svm;
  model.seed = seed;
  model.dimension = dim;
  model.params = std::move(svm);
  return model;
}

}  // namespace senta
