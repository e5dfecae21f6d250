#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "senta/common.hpp"
#include "senta/corpus.hpp"
#include "senta/eval.hpp"
#include "senta/lexicon.hpp"
#include "senta/models.hpp"

namespace senta {

struct PersonalityReport {
  std::array<int64_t, kNumClasses> counts{};          // chosen labeling method
  std::array<double, kNumClasses> ratios{};           // counts / total
  double negative_to_rest = 0.0;                      // neg / (pos + neu)
  std::array<int64_t, kNumClasses> pattern_counts{};  // both scorers, for the
  std::array<int64_t, kNumClasses> valence_counts{};  // distribution output
  std::vector<WordFrequencyTable> common_words;       // one per class
  std::vector<WordFrequencyTable> unique_words;
  std::optional<ConfusionMatrix> confusion;  // when gold labels were supplied
  int64_t total = 0;
};

struct AssessOptions {
  RelabelMethod method = RelabelMethod::Valence;
  bool use_model = false;  // label with a trained classifier instead
  ThresholdConfig thresholds;
  int64_t top_k = 8;
};

// Labels every doc (lexicon scorer or trained model), tallies counts/ratios,
// word tables and, when gold labels exist, a confusion matrix. Also fills
// the per-scorer label distributions for the plot-ready output.
PersonalityReport assess(std::vector<LabeledDoc>& docs, const Lexicon& lex,
                         const ClassifierModel* model,
                         const AssessOptions& options);

std::string personality_report_csv(const PersonalityReport& report);
std::string personality_distribution_csv(const PersonalityReport& report);
std::string personality_report_text(const PersonalityReport& report);

// Writes a UTF-8 file, creating parent directories as needed.
void write_file(const std::string& path, const std::string& content);

}  // namespace senta
