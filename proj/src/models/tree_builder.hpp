#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "senta/models.hpp"

namespace senta::detail {

struct TreeBuildConfig {
  int max_depth = 32;
  int min_leaf = 1;
  int features_per_split = 0;  // 0 = consider every feature
  bool regression = false;
};

// Fits a CART tree on the given sample indices (duplicates allowed, e.g.
// bootstrap draws). Classification uses weighted Gini; regression fits the
// weighted mean with variance-reduction splits over `targets`. `rng` drives
// feature subsampling only, so an all-features build is RNG-independent.
Tree build_tree(const std::vector<SparseVector>& vectors,
                const std::vector<SentimentLabel>& labels,
                const std::vector<double>& targets,
                const std::vector<double>& weights,
                std::vector<size_t> indices, const TreeBuildConfig& config,
                std::mt19937_64& rng);

}  // namespace senta::detail
