#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "tree_builder.hpp"

namespace senta::detail {
namespace {

struct SplitStats {
  // Classification: per-class weight. Regression: weight + target sum.
  std::array<double, kNumClasses> class_weight{};
  double weight = 0.0;
  double target_sum = 0.0;
  int64_t count = 0;

  void add(int cls, double target, double w, bool regression) {
    if (regression) {
      target_sum += target * w;
    } else {
      class_weight[cls] += w;
    }
    weight += w;
    ++count;
  }
  void remove(int cls, double target, double w, bool regression) {
    if (regression) {
      target_sum -= target * w;
    } else {
      class_weight[cls] -= w;
    }
    weight -= w;
    --count;
  }

  // Score to maximize: sum_k S_k^2 / W (classification, Gini) or S^2 / W
  // (regression, variance reduction). Both are monotone transforms of the
  // respective impurity decrease.
  double score(bool regression) const {
    if (weight <= 0) return 0.0;
    if (regression) return target_sum * target_sum / weight;
    double s = 0.0;
    for (double cw : class_weight) s += cw * cw;
    return s / weight;
  }
};

struct Builder {
  const std::vector<SparseVector>& vectors;
  const std::vector<SentimentLabel>& labels;
  const std::vector<double>& targets;
  const std::vector<double>& weights;
  const TreeBuildConfig& config;
  std::mt19937_64& rng;
  Tree tree;
  std::vector<int32_t> feature_slot;  // feature -> candidate slot or -1
  std::vector<uint32_t> candidates;

  double weight_of(size_t i) const {
    return weights.empty() ? 1.0 : weights[i];
  }
  int class_of(size_t i) const { return static_cast<int>(labels[i]); }
  double target_of(size_t i) const {
    return config.regression ? targets[i] : 0.0;
  }

  void pick_candidates(uint32_t dim) {
    candidates.clear();
    const int mtry = config.features_per_split;
    if (mtry <= 0 || static_cast<uint32_t>(mtry) >= dim) {
      candidates.resize(dim);
      std::iota(candidates.begin(), candidates.end(), 0u);
      return;
    }
    // Floyd's sampling without replacement, then sorted for determinism.
    std::vector<uint32_t> chosen;
    chosen.reserve(static_cast<size_t>(mtry));
    for (uint32_t j = dim - static_cast<uint32_t>(mtry); j < dim; ++j) {
      std::uniform_int_distribution<uint32_t> dist(0, j);
      uint32_t t = dist(rng);
      if (std::find(chosen.begin(), chosen.end(), t) != chosen.end()) t = j;
      chosen.push_back(t);
    }
    std::sort(chosen.begin(), chosen.end());
    candidates = std::move(chosen);
  }

  int32_t make_leaf(const std::vector<size_t>& indices) {
    TreeNode leaf;
    if (config.regression) {
      double sum = 0.0, w = 0.0;
      for (size_t i : indices) {
        sum += target_of(i) * weight_of(i);
        w += weight_of(i);
      }
      leaf.value = w > 0 ? sum / w : 0.0;
    } else {
      for (size_t i : indices) leaf.dist[class_of(i)] += weight_of(i);
      double total = 0.0;
      for (double d : leaf.dist) total += d;
      if (total > 0)
        for (double& d : leaf.dist) d /= total;
    }
    tree.nodes.push_back(leaf);
    return static_cast<int32_t>(tree.nodes.size() - 1);
  }

  bool is_pure(const std::vector<size_t>& indices) const {
    if (config.regression) {
      const double first = target_of(indices[0]);
      for (size_t i : indices)
        if (target_of(i) != first) return false;
      return true;
    }
    const int first = class_of(indices[0]);
    for (size_t i : indices)
      if (class_of(i) != first) return false;
    return true;
  }

  int32_t build(std::vector<size_t> indices, int depth, uint32_t dim) {
    if (depth >= config.max_depth ||
        indices.size() < 2 * static_cast<size_t>(config.min_leaf) ||
        indices.size() < 2 || is_pure(indices))
      return make_leaf(indices);

    pick_candidates(dim);
    if (feature_slot.size() < dim) feature_slot.assign(dim, -1);
    for (size_t s = 0; s < candidates.size(); ++s)
      feature_slot[candidates[s]] = static_cast<int32_t>(s);

    SplitStats node_stats;
    for (size_t i : indices)
      node_stats.add(class_of(i), target_of(i), weight_of(i),
                     config.regression);

    // Gather nonzero (value, sample) pairs per candidate feature.
    std::vector<std::vector<std::pair<double, size_t>>> columns(
        candidates.size());
    for (size_t i : indices) {
      for (const auto& [index, value] : vectors[i].pairs) {
        const int32_t slot = feature_slot[index];
        if (slot >= 0) columns[static_cast<size_t>(slot)].emplace_back(value, i);
      }
    }
    for (uint32_t f : candidates) feature_slot[f] = -1;

    const double parent_score = node_stats.score(config.regression);
    double best_gain = 1e-12;
    int32_t best_feature = -1;
    double best_threshold = 0.0;

    for (size_t s = 0; s < candidates.size(); ++s) {
      auto& column = columns[s];
      if (column.empty()) continue;
      std::sort(column.begin(), column.end());

      // Implicit zero block plus the sorted nonzero values. tfidf features
      // are non-negative, but handle negatives for generality.
      SplitStats left;  // values <= current threshold
      SplitStats right = node_stats;
      auto move_left = [&](size_t i) {
        const double w = weight_of(i);
        left.add(class_of(i), target_of(i), w, config.regression);
        right.remove(class_of(i), target_of(i), w, config.regression);
      };

      // Walk distinct values in ascending order, treating the zero block as
      // one pseudo-value when the column is sparse in this node.
      SplitStats zero_block = node_stats;
      for (const auto& [value, i] : column)
        zero_block.remove(class_of(i), target_of(i), weight_of(i),
                          config.regression);
      const bool has_zeros = zero_block.count > 0;

      size_t pos = 0;
      double prev_value = 0.0;
      bool any_moved = false;
      bool zeros_moved = false;
      auto consider = [&](double next_value) {
        if (!any_moved || left.count < config.min_leaf ||
            right.count < config.min_leaf)
          return;
        const double gain = left.score(config.regression) +
                            right.score(config.regression) - parent_score;
        if (gain > best_gain) {
          best_gain = gain;
          best_feature = static_cast<int32_t>(candidates[s]);
          best_threshold = 0.5 * (prev_value + next_value);
        }
      };
      while (pos < column.size() || (has_zeros && !zeros_moved)) {
        double next_value;
        if (has_zeros && !zeros_moved &&
            (pos >= column.size() || 0.0 < column[pos].first)) {
          next_value = 0.0;
        } else {
          next_value = column[pos].first;
        }
        consider(next_value);
        if (has_zeros && !zeros_moved && next_value == 0.0 &&
            (pos >= column.size() || column[pos].first > 0.0)) {
          // move the whole zero block left
          left.weight += zero_block.weight;
          left.target_sum += zero_block.target_sum;
          left.count += zero_block.count;
          for (int c = 0; c < kNumClasses; ++c)
            left.class_weight[c] += zero_block.class_weight[c];
          right.weight -= zero_block.weight;
          right.target_sum -= zero_block.target_sum;
          right.count -= zero_block.count;
          for (int c = 0; c < kNumClasses; ++c)
            right.class_weight[c] -= zero_block.class_weight[c];
          zeros_moved = true;
        } else {
          const double v = column[pos].first;
          while (pos < column.size() && column[pos].first == v) {
            move_left(column[pos].second);
            ++pos;
          }
        }
        any_moved = true;
        prev_value = next_value;
      }
    }

    if (best_feature < 0) return make_leaf(indices);

    std::vector<size_t> left_idx, right_idx;
    for (size_t i : indices) {
      const double v =
          vectors[i].get(static_cast<uint32_t>(best_feature));
      (v <= best_threshold ? left_idx : right_idx).push_back(i);
    }
    if (left_idx.empty() || right_idx.empty()) return make_leaf(indices);
    indices.clear();
    indices.shrink_to_fit();

    TreeNode node;
    node.feature = best_feature;
    node.threshold = best_threshold;
    tree.nodes.push_back(node);
    const int32_t self = static_cast<int32_t>(tree.nodes.size() - 1);
    const int32_t left_child = build(std::move(left_idx), depth + 1, dim);
    const int32_t right_child = build(std::move(right_idx), depth + 1, dim);
    tree.nodes[static_cast<size_t>(self)].left = left_child;
    tree.nodes[static_cast<size_t>(self)].right = right_child;
    return self;
  }
};

}  // namespace

Tree build_tree(const std::vector<SparseVector>& vectors,
                const std::vector<SentimentLabel>& labels,
                const std::vector<double>& targets,
                const std::vector<double>& weights,
                std::vector<size_t> indices, const TreeBuildConfig& config,
                std::mt19937_64& rng) {
  if (indices.empty()) throw invalid_argument("build_tree: no samples");
  const uint32_t dim = vectors[indices[0]].dimension;
  Builder builder{vectors, labels, targets, weights, config, rng, {}, {}, {}};
  builder.tree.nodes.reserve(64);
  builder.build(std::move(indices), 0, dim);
  return std::move(builder.tree);
}

}  // namespace senta::detail
