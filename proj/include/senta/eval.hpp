#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "senta/common.hpp"
#include "senta/models.hpp"

namespace senta {

struct SplitRatio {
  double train_fraction = 0.7;
  std::string name() const;  // "70-30" style

  static SplitRatio from_name(std::string_view name);  // "60-40"|"70-30"|"80-20"|"0.65"
};

struct ConfusionMatrix {
  // rows = actual, columns = predicted, canonical label order.
  std::array<std::array<int64_t, kNumClasses>, kNumClasses> counts{};

  int64_t total() const;
  int64_t& at(SentimentLabel actual, SentimentLabel predicted) {
    return counts[static_cast<int>(actual)][static_cast<int>(predicted)];
  }
  int64_t at(SentimentLabel actual, SentimentLabel predicted) const {
    return counts[static_cast<int>(actual)][static_cast<int>(predicted)];
  }
};

struct ClassMetrics {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
};

struct MetricsReport {
  double accuracy = 0.0;
  std::array<ClassMetrics, kNumClasses> per_class{};
  double macro_f1 = 0.0;
};

struct FoldAssignment {
  std::vector<int> fold_of;
  int k = 0;
};

// Stratified, seeded split. |train| = round(n * fraction); classes with
// fewer than 2 examples fall back to the unstratified pool.
std::pair<std::vector<size_t>, std::vector<size_t>> split_indices(
    const std::vector<SentimentLabel>& labels, SplitRatio ratio, uint64_t seed);

std::pair<Dataset, Dataset> split(const Dataset& data, SplitRatio ratio,
                                  uint64_t seed);

// Stratified k-fold; fold sizes differ by at most one globally.
FoldAssignment kfold(const std::vector<SentimentLabel>& labels, int k,
                     uint64_t seed);

ConfusionMatrix confusion(const std::vector<SentimentLabel>& truth,
                          const std::vector<SentimentLabel>& predicted);

// accuracy = trace/total; zero-denominator precision/recall convention = 0.
MetricsReport metrics(const ConfusionMatrix& cm);

struct ExperimentCell {
  ModelVariant model;
  SplitRatio ratio;
  double test_accuracy = 0.0;
  double cv_mean = 0.0;
  double cv_std = 0.0;
  bool cv_ran = false;
  ConfusionMatrix cm;
  MetricsReport report;
  bool failed = false;
  std::string error;
};

struct ExperimentConfig {
  std::vector<ModelVariant> models;
  std::vector<SplitRatio> splits;
  int k = 5;  // 0 disables cross-validation
  uint64_t seed = 42;
  int threads = 1;
  Hyperparams hyperparams;
};

struct ExperimentReport {
  std::vector<ExperimentCell> cells;
  ExperimentConfig config;
};

// Trains every (model, split) cell: test accuracy + confusion on the held-out
// part, plus k-fold CV accuracy mean/std over the training part. Training
// failures are captured per cell, not propagated.
ExperimentReport run_experiment(
    const Dataset& data, const ExperimentConfig& config,
    std::map<std::string, ClassifierModel>* trained_models = nullptr);

// CSV: one row per model x split x metric. Text tables mirror the accuracy
// grid and the per-class precision/recall/F1 block at 70-30.
std::string experiment_csv(const ExperimentReport& report);
std::string experiment_accuracy_table(const ExperimentReport& report);
std::string experiment_per_class_table(const ExperimentReport& report,
                                       const std::string& split_name = "70-30");
std::string confusion_csv(const ConfusionMatrix& cm);
std::string confusion_text_table(const ConfusionMatrix& cm);

}  // namespace senta
