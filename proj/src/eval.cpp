#include "senta/eval.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>

namespace senta {
namespace {

std::string format_fraction(double f) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(6) << f;
  return out.str();
}

}  // namespace

std::string SplitRatio::name() const {
  const int train = static_cast<int>(std::lround(train_fraction * 100));
  return std::to_string(train) + "-" + std::to_string(100 - train);
}

SplitRatio SplitRatio::from_name(std::string_view name) {
  SplitRatio ratio;
  auto dash = name.find('-');
  if (dash != std::string_view::npos) {
    const std::string train(name.substr(0, dash));
    const std::string test(name.substr(dash + 1));
    try {
      const double t = std::stod(train);
      const double u = std::stod(test);
      if (t > 0 && u > 0 && std::abs(t + u - 100.0) < 1e-9) {
        ratio.train_fraction = t / 100.0;
        return ratio;
      }
    } catch (...) {
    }
    throw invalid_argument("bad split ratio: " + std::string(name));
  }
  try {
    ratio.train_fraction = std::stod(std::string(name));
  } catch (...) {
    throw invalid_argument("bad split ratio: " + std::string(name));
  }
  if (ratio.train_fraction <= 0.0 || ratio.train_fraction >= 1.0)
    throw invalid_argument("split fraction must be in (0,1)");
  return ratio;
}

int64_t ConfusionMatrix::total() const {
  int64_t t = 0;
  for (const auto& row : counts)
    for (int64_t v : row) t += v;
  return t;
}

std::pair<std::vector<size_t>, std::vector<size_t>> split_indices(
    const std::vector<SentimentLabel>& labels, SplitRatio ratio,
    uint64_t seed) {
  const size_t n = labels.size();
  if (n < 2) throw invalid_argument("split: need at least 2 examples");
  if (ratio.train_fraction <= 0.0 || ratio.train_fraction >= 1.0)
    throw invalid_argument("split fraction must be in (0,1)");

  std::array<std::vector<size_t>, kNumClasses> strata;
  for (size_t i = 0; i < n; ++i)
    strata[static_cast<int>(labels[i])].push_back(i);

  // Classes with fewer than 2 examples cannot be stratified; pool them.
  std::vector<size_t> pool;
  for (auto& s : strata) {
    if (!s.empty() && s.size() < 2) {
      std::cerr << "split: class with " << s.size()
                << " example(s), falling back to unstratified for it\n";
      pool.insert(pool.end(), s.begin(), s.end());
      s.clear();
    }
  }

  const auto target_total = static_cast<size_t>(
      std::llround(static_cast<double>(n) * ratio.train_fraction));

  std::mt19937_64 rng(mix_seed(seed, "train-test-split"));
  std::vector<size_t> train, test;

  // Largest-remainder allocation of train slots across strata.
  struct Part {
    std::vector<size_t>* items;
    size_t take = 0;
    double remainder = 0.0;
  };
  std::vector<Part> parts;
  for (auto& s : strata)
    if (!s.empty()) parts.push_back({&s});
  if (!pool.empty()) parts.push_back({&pool});
  size_t allocated = 0;
  for (auto& p : parts) {
    const double exact =
        static_cast<double>(p.items->size()) * ratio.train_fraction;
    p.take = static_cast<size_t>(exact);
    p.remainder = exact - static_cast<double>(p.take);
    allocated += p.take;
  }
  std::vector<size_t> by_remainder(parts.size());
  std::iota(by_remainder.begin(), by_remainder.end(), 0);
  std::stable_sort(by_remainder.begin(), by_remainder.end(),
                   [&](size_t a, size_t b) {
                     return parts[a].remainder > parts[b].remainder;
                   });
  for (size_t j = 0; allocated < target_total && j < by_remainder.size(); ++j) {
    Part& p = parts[by_remainder[j]];
    if (p.take < p.items->size()) {
      ++p.take;
      ++allocated;
    }
  }
  // Rounding can still leave a deficit when some stratum saturated.
  for (size_t j = 0; allocated < target_total && j < parts.size(); ++j) {
    while (allocated < target_total && parts[j].take < parts[j].items->size()) {
      ++parts[j].take;
      ++allocated;
    }
  }

  for (auto& p : parts) {
    std::shuffle(p.items->begin(), p.items->end(), rng);
    for (size_t i = 0; i < p.items->size(); ++i)
      (i < p.take ? train : test).push_back((*p.items)[i]);
  }
  std::sort(train.begin(), train.end());
  std::sort(test.begin(), test.end());
  return {std::move(train), std::move(test)};
}

namespace {
Dataset subset(const Dataset& data, const std::vector<size_t>& indices) {
  Dataset out;
  out.vectors.reserve(indices.size());
  out.labels.reserve(indices.size());
  for (size_t i : indices) {
    out.vectors.push_back(data.vectors[i]);
    out.labels.push_back(data.labels[i]);
    if (!data.weights.empty()) out.weights.push_back(data.weights[i]);
  }
  return out;
}
}  // namespace

std::pair<Dataset, Dataset> split(const Dataset& data, SplitRatio ratio,
                                  uint64_t seed) {
  data.validate();
  auto [train_idx, test_idx] = split_indices(data.labels, ratio, seed);
  return {subset(data, train_idx), subset(data, test_idx)};
}

FoldAssignment kfold(const std::vector<SentimentLabel>& labels, int k,
                     uint64_t seed) {
  const size_t n = labels.size();
  if (k < 2) throw invalid_argument("kfold: k must be >= 2");
  if (static_cast<size_t>(k) > n)
    throw invalid_argument("kfold: k exceeds dataset size");

  std::array<std::vector<size_t>, kNumClasses> strata;
  for (size_t i = 0; i < n; ++i)
    strata[static_cast<int>(labels[i])].push_back(i);

  std::mt19937_64 rng(mix_seed(seed, "kfold"));
  FoldAssignment assignment;
  assignment.k = k;
  assignment.fold_of.assign(n, -1);

  // Stratified round-robin with a cursor carried across classes, which keeps
  // global fold sizes within one of each other.
  int cursor = 0;
  for (auto& s : strata) {
    std::shuffle(s.begin(), s.end(), rng);
    for (size_t i : s) {
      assignment.fold_of[i] = cursor;
      cursor = (cursor + 1) % k;
    }
  }
  return assignment;
}

ConfusionMatrix confusion(const std::vector<SentimentLabel>& truth,
                          const std::vector<SentimentLabel>& predicted) {
  if (truth.size() != predicted.size())
    throw invalid_argument("confusion: label vectors differ in length");
  if (truth.empty()) throw invalid_argument("confusion: empty input");
  ConfusionMatrix cm;
  for (size_t i = 0; i < truth.size(); ++i) ++cm.at(truth[i], predicted[i]);
  return cm;
}

MetricsReport metrics(const ConfusionMatrix& cm) {
  const int64_t total = cm.total();
  if (total <= 0) throw invalid_argument("metrics: all-zero confusion matrix");

  MetricsReport report;
  int64_t trace = 0;
  for (int c = 0; c < kNumClasses; ++c) trace += cm.counts[c][c];
  report.accuracy = static_cast<double>(trace) / static_cast<double>(total);

  double f1_sum = 0.0;
  for (int c = 0; c < kNumClasses; ++c) {
    int64_t col = 0, row = 0;
    for (int o = 0; o < kNumClasses; ++o) {
      col += cm.counts[o][c];
      row += cm.counts[c][o];
    }
    ClassMetrics& m = report.per_class[c];
    m.precision = col > 0 ? static_cast<double>(cm.counts[c][c]) / col : 0.0;
    m.recall = row > 0 ? static_cast<double>(cm.counts[c][c]) / row : 0.0;
    m.f1 = (m.precision + m.recall) > 0
               ? 2.0 * m.precision * m.recall / (m.precision + m.recall)
               : 0.0;
    f1_sum += m.f1;
  }
  report.macro_f1 = f1_sum / kNumClasses;
  return report;
}

ExperimentReport run_experiment(
    const Dataset& data, const ExperimentConfig& config,
    std::map<std::string, ClassifierModel>* trained_models) {
  data.validate();
  if (config.models.empty() || config.splits.empty())
    throw invalid_argument("experiment: need at least one model and one split");

  ExperimentReport report;
  report.config = config;

  for (ModelVariant variant : config.models) {
    for (SplitRatio ratio : config.splits) {
      ExperimentCell cell;
      cell.model = variant;
      cell.ratio = ratio;
      try {
        const uint64_t split_seed =
            mix_seed(config.seed, "split-" + ratio.name());
        const uint64_t model_seed = mix_seed(
            config.seed, std::string("model-") + model_variant_name(variant));
        auto [train, test] = split(data, ratio, split_seed);

        ClassifierModel model = fit_model(variant, train, config.hyperparams,
                                          model_seed, config.threads);
        std::vector<SentimentLabel> predicted;
        predicted.reserve(test.size());
        for (const auto& v : test.vectors)
          predicted.push_back(predict(model, v).label);
        cell.cm = confusion(test.labels, predicted);
        cell.report = metrics(cell.cm);
        cell.test_accuracy = cell.report.accuracy;

        if (config.k >= 2) {
          auto folds = kfold(train.labels, config.k,
                             mix_seed(split_seed, "cv"));
          std::vector<double> fold_accuracy;
          for (int f = 0; f < config.k; ++f) {
            std::vector<size_t> fit_idx, held_idx;
            for (size_t i = 0; i < train.size(); ++i)
              (folds.fold_of[i] == f ? held_idx : fit_idx).push_back(i);
            Dataset fit_part = subset(train, fit_idx);
            Dataset held_part = subset(train, held_idx);
            ClassifierModel fold_model =
                fit_model(variant, fit_part, config.hyperparams,
                          mix_seed(model_seed, "fold-" + std::to_string(f)),
                          config.threads);
            int64_t correct = 0;
            for (size_t i = 0; i < held_part.size(); ++i)
              if (predict(fold_model, held_part.vectors[i]).label ==
                  held_part.labels[i])
                ++correct;
            fold_accuracy.push_back(static_cast<double>(correct) /
                                    static_cast<double>(held_part.size()));
          }
          double mean = 0.0;
          for (double a : fold_accuracy) mean += a;
          mean /= static_cast<double>(fold_accuracy.size());
          double var = 0.0;
          for (double a : fold_accuracy) var += (a - mean) * (a - mean);
          var /= static_cast<double>(fold_accuracy.size() - 1);
          cell.cv_mean = mean;
          cell.cv_std = std::sqrt(var);
          cell.cv_ran = true;
        }

        if (trained_models) {
          (*trained_models)[std::string(model_variant_name(variant)) + "_" +
                            ratio.name()] = std::move(model);
        }
      } catch (const std::exception& e) {
        cell.failed = true;
        cell.error = e.what();
      }
      report.cells.push_back(std::move(cell));
    }
  }
  return report;
}

std::string experiment_csv(const ExperimentReport& report) {
  std::ostringstream out;
  out << "model,split,metric,value\n";
  for (const auto& cell : report.cells) {
    const std::string prefix = std::string(model_variant_name(cell.model)) +
                               "," + cell.ratio.name() + ",";
    if (cell.failed) {
      out << prefix << "error," << cell.error << '\n';
      continue;
    }
    out << prefix << "accuracy," << format_fraction(cell.test_accuracy) << '\n';
    if (cell.cv_ran) {
      out << prefix << "cv_mean," << format_fraction(cell.cv_mean) << '\n';
      out << prefix << "cv_std," << format_fraction(cell.cv_std) << '\n';
    }
    for (int c = 0; c < kNumClasses; ++c) {
      const char* name = label_name(static_cast<SentimentLabel>(c));
      out << prefix << name << "_precision,"
          << format_fraction(cell.report.per_class[c].precision) << '\n';
      out << prefix << name << "_recall,"
          << format_fraction(cell.report.per_class[c].recall) << '\n';
      out << prefix << name << "_f1,"
          << format_fraction(cell.report.per_class[c].f1) << '\n';
    }
    out << prefix << "macro_f1," << format_fraction(cell.report.macro_f1)
        << '\n';
  }
  return out.str();
}

std::string experiment_accuracy_table(const ExperimentReport& report) {
  std::vector<std::string> split_names;
  for (const auto& s : report.config.splits) split_names.push_back(s.name());
  std::ostringstream out;
  out << std::left << std::setw(10) << "model";
  for (const auto& s : split_names) out << std::setw(26) << s;
  out << '\n';
  for (ModelVariant m : report.config.models) {
    out << std::left << std::setw(10) << model_variant_name(m);
    for (const auto& s : split_names) {
      std::string cellText = "-";
      for (const auto& cell : report.cells) {
        if (cell.model == m && cell.ratio.name() == s) {
          if (cell.failed) {
            cellText = "failed";
          } else {
            std::ostringstream v;
            v << std::fixed << std::setprecision(4) << cell.test_accuracy;
            if (cell.cv_ran) {
              v << " (" << std::fixed << std::setprecision(3) << cell.cv_mean
                << "+/-" << cell.cv_std << ")";
            }
            cellText = v.str();
          }
        }
      }
      out << std::setw(26) << cellText;
    }
    out << '\n';
  }
  return out.str();
}

std::string experiment_per_class_table(const ExperimentReport& report,
                                       const std::string& split_name) {
  std::ostringstream out;
  out << "per-class metrics at " << split_name << '\n';
  out << std::left << std::setw(10) << "model";
  for (int c = kNumClasses - 1; c >= 0; --c) {
    const std::string name = label_name(static_cast<SentimentLabel>(c));
    out << std::setw(8) << (name.substr(0, 3) + "-P")
        << std::setw(8) << (name.substr(0, 3) + "-R")
        << std::setw(8) << (name.substr(0, 3) + "-F");
  }
  out << '\n';
  for (const auto& cell : report.cells) {
    if (cell.ratio.name() != split_name || cell.failed) continue;
    out << std::left << std::setw(10) << model_variant_name(cell.model);
    for (int c = kNumClasses - 1; c >= 0; --c) {
      const auto& m = cell.report.per_class[c];
      for (double v : {m.precision, m.recall, m.f1}) {
        std::ostringstream cellText;
        cellText << std::fixed << std::setprecision(3) << v;
        out << std::setw(8) << cellText.str();
      }
    }
    out << '\n';
  }
  return out.str();
}

std::string confusion_csv(const ConfusionMatrix& cm) {
  std::ostringstream out;
  out << "actual\\predicted,negative,neutral,positive\n";
  for (int a = 0; a < kNumClasses; ++a) {
    out << label_name(static_cast<SentimentLabel>(a));
    for (int p = 0; p < kNumClasses; ++p) out << ',' << cm.counts[a][p];
    out << '\n';
  }
  return out.str();
}

std::string confusion_text_table(const ConfusionMatrix& cm) {
  std::ostringstream out;
  out << std::left << std::setw(18) << "actual\\predicted";
  for (int p = 0; p < kNumClasses; ++p)
    out << std::setw(10) << label_name(static_cast<SentimentLabel>(p));
  out << '\n';
  for (int a = 0; a < kNumClasses; ++a) {
    out << std::left << std::setw(18) << label_name(static_cast<SentimentLabel>(a));
    for (int p = 0; p < kNumClasses; ++p) out << std::setw(10) << cm.counts[a][p];
    out << '\n';
  }
  return out.str();
}

}  // namespace senta
