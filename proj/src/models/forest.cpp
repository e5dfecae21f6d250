#include <cmath>
#include <numeric>
#include <random>

#include "senta/parallel.hpp"
#include "tree_builder.hpp"

namespace senta {

ClassifierModel fit_random_forest(const Dataset& data, const ForestParams& hp,
                                  uint64_t seed, int threads) {
  data.validate();
  if (data.size() == 0) throw invalid_argument("forest: empty dataset");
  const uint32_t dim = data.dimension();
  if (dim == 0) throw invalid_argument("forest: zero-dimension data");
  if (hp.n_trees < 1) throw invalid_argument("forest: n_trees must be >= 1");

  detail::TreeBuildConfig config;
  config.max_depth = hp.max_depth;
  config.min_leaf = hp.min_leaf;
  config.features_per_split =
      hp.features_per_split > 0
          ? hp.features_per_split
          : static_cast<int>(std::ceil(std::sqrt(static_cast<double>(dim))));
  config.regression = false;

  ForestModel forest;
  forest.trees.resize(static_cast<size_t>(hp.n_trees));
  const std::vector<double> no_targets;

  // Per-tree RNG derived from (seed, tree index), so the model is identical
  // for any thread count.
  parallel_for(forest.trees.size(), threads, [&](size_t t) {
    std::mt19937_64 rng(
        mix_seed(seed, "forest-tree-" + std::to_string(t)));
    std::uniform_int_distribution<size_t> pick(0, data.size() - 1);
    std::vector<size_t> bootstrap(data.size());
    for (auto& i : bootstrap) i = pick(rng);
    forest.trees[t] = detail::build_tree(data.vectors, data.labels, no_targets,
                                         data.weights, std::move(bootstrap),
                                         config, rng);
  });

  ClassifierModel model;
  model.variant = ModelVariant::Forest;
  model.seed = seed;
  model.dimension = dim;
  model.params = std::move(forest);
  return model;
}

}  // namespace senta
