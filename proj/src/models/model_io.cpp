#include <algorithm>
#include <fstream>
#include <iterator>

#include "json.hpp"
#include "senta/models.hpp"

namespace senta {
namespace {

using nlohmann::json;

json tree_to_json(const Tree& tree) {
  json nodes = json::array();
  for (const auto& n : tree.nodes)
    nodes.push_back({n.feature, n.threshold, n.left, n.right, n.value,
                     n.dist[0], n.dist[1], n.dist[2]});
  return nodes;
}

Tree tree_from_json(const json& nodes) {
  Tree tree;
  tree.nodes.reserve(nodes.size());
  for (const auto& n : nodes) {
    if (!n.is_array() || n.size() != 8)
      throw parse_error("model file: malformed tree node");
    TreeNode node;
    node.feature = n[0].get<int32_t>();
    node.threshold = n[1].get<double>();
    node.left = n[2].get<int32_t>();
    node.right = n[3].get<int32_t>();
    node.value = n[4].get<double>();
    node.dist = {n[5].get<double>(), n[6].get<double>(), n[7].get<double>()};
    tree.nodes.push_back(node);
  }
  if (tree.nodes.empty()) throw parse_error("model file: empty tree");
  return tree;
}

template <typename T, size_t N>
json array_to_json(const std::array<T, N>& a) {
  json out = json::array();
  for (const auto& v : a) out.push_back(v);
  return out;
}

}  // namespace

std::string model_to_json(const ClassifierModel& model) {
  json doc;
  doc["format"] = "senta-model";
  doc["version"] = model.version;
  doc["variant"] = model_variant_name(model.variant);
  doc["seed"] = model.seed;
  doc["dimension"] = model.dimension;

  if (model.vocabulary.size() > 0) {
    json vocab;
    vocab["n_documents"] = model.vocabulary.n_documents;
    vocab["tokens"] = model.vocabulary.index_to_token;
    vocab["df"] = model.vocabulary.document_frequency;
    doc["vocabulary"] = std::move(vocab);
  }

  json params;
  if (const auto* nb = std::get_if<NbModel>(&model.params)) {
    params["alpha"] = nb->laplace_alpha;
    params["log_prior"] = array_to_json(nb->log_prior);
    params["log_likelihood"] = {nb->log_likelihood[0], nb->log_likelihood[1],
                                nb->log_likelihood[2]};
  } else if (const auto* sm = std::get_if<SoftmaxModel>(&model.params)) {
    params["weights"] = {sm->weights[0], sm->weights[1], sm->weights[2]};
    params["bias"] = array_to_json(sm->bias);
    params["epoch_loss"] = sm->epoch_loss;
  } else if (const auto* svm = std::get_if<SvmModel>(&model.params)) {
    params["weights"] = {svm->weights[0], svm->weights[1], svm->weights[2]};
    params["bias"] = array_to_json(svm->bias);
  } else if (const auto* forest = std::get_if<ForestModel>(&model.params)) {
    json trees = json::array();
    for (const auto& t : forest->trees) trees.push_back(tree_to_json(t));
    params["trees"] = std::move(trees);
  } else if (const auto* gbt = std::get_if<GbtModel>(&model.params)) {
    params["base_score"] = array_to_json(gbt->base_score);
    params["shrinkage"] = gbt->shrinkage;
    json rounds = json::array();
    for (const auto& stage : gbt->trees)
      rounds.push_back({tree_to_json(stage[0]), tree_to_json(stage[1]),
                        tree_to_json(stage[2])});
    params["trees"] = std::move(rounds);
  }
  doc["params"] = std::move(params);
  return doc.dump();
}

ClassifierModel model_from_json(const std::string& json_text) {
  json doc = json::parse(json_text, nullptr, false);
  if (doc.is_discarded() || !doc.is_object())
    throw parse_error("model file: not a valid JSON document");
  if (doc.value("format", "") != std::string("senta-model"))
    throw parse_error("model file: unrecognized format field");
  const int version = doc.value("version", -1);
  if (version != 1)
    throw parse_error("model file: unsupported version " +
                      std::to_string(version));

  try {
    ClassifierModel model;
    model.version = version;
    model.variant = model_variant_from_name(doc.at("variant").get<std::string>());
    model.seed = doc.at("seed").get<uint64_t>();
    model.dimension = doc.at("dimension").get<uint32_t>();

    if (doc.contains("vocabulary")) {
      const json& vocab = doc["vocabulary"];
      model.vocabulary.n_documents = vocab.at("n_documents").get<uint64_t>();
      model.vocabulary.index_to_token =
          vocab.at("tokens").get<std::vector<std::string>>();
      model.vocabulary.document_frequency =
          vocab.at("df").get<std::vector<uint32_t>>();
      for (uint32_t i = 0; i < model.vocabulary.index_to_token.size(); ++i)
        model.vocabulary.token_to_index.emplace(
            model.vocabulary.index_to_token[i], i);
    }

    const json& params = doc.at("params");
    switch (model.variant) {
      case ModelVariant::NaiveBayes: {
        NbModel nb;
        nb.laplace_alpha = params.at("alpha").get<double>();
        auto prior = params.at("log_prior").get<std::vector<double>>();
        std::copy_n(prior.begin(), kNumClasses, nb.log_prior.begin());
        for (int c = 0; c < kNumClasses; ++c)
          nb.log_likelihood[c] =
              params.at("log_likelihood")[c].get<std::vector<double>>();
        model.params = std::move(nb);
        break;
      }
      case ModelVariant::Softmax: {
        SoftmaxModel sm;
        for (int c = 0; c < kNumClasses; ++c)
          sm.weights[c] = params.at("weights")[c].get<std::vector<double>>();
        auto bias = params.at("bias").get<std::vector<double>>();
        std::copy_n(bias.begin(), kNumClasses, sm.bias.begin());
        sm.epoch_loss = params.at("epoch_loss").get<std::vector<double>>();
        model.params = std::move(sm);
        break;
      }
      case ModelVariant::Svm: {
        SvmModel svm;
        for (int c = 0; c < kNumClasses; ++c)
          svm.weights[c] = params.at("weights")[c].get<std::vector<double>>();
        auto bias = params.at("bias").get<std::vector<double>>();
        std::copy_n(bias.begin(), kNumClasses, svm.bias.begin());
        model.params = std::move(svm);
        break;
      }
      case ModelVariant::Forest: {
        ForestModel forest;
        for (const auto& t : params.at("trees"))
          forest.trees.push_back(tree_from_json(t));
        model.params = std::move(forest);
        break;
      }
      case ModelVariant::Gbt: {
        GbtModel gbt;
        auto base = params.at("base_score").get<std::vector<double>>();
        std::copy_n(base.begin(), kNumClasses, gbt.base_score.begin());
        gbt.shrinkage = params.at("shrinkage").get<double>();
        for (const auto& stage : params.at("trees"))
          gbt.trees.push_back({tree_from_json(stage[0]),
                               tree_from_json(stage[1]),
                               tree_from_json(stage[2])});
        model.params = std::move(gbt);
        break;
      }
    }
    return model;
  } catch (const json::exception& e) {
    throw parse_error(std::string("model file: corrupt document: ") + e.what());
  }
}

void save_model(const ClassifierModel& model, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw io_error("cannot write model file: " + path);
  out << model_to_json(model) << '\n';
  if (!out) throw io_error("write failed: " + path);
}

ClassifierModel load_model(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw io_error("cannot open model file: " + path);
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  return model_from_json(text);
}

}  // namespace senta
