#include "senta/report.hpp"

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "senta/features.hpp"

namespace senta {

void write_file(const std::string& path, const std::string& content) {
  std::filesystem::path p(path);
  if (p.has_parent_path()) {
    std::error_code ec;
    std::filesystem::create_directories(p.parent_path(), ec);
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw io_error("cannot write file: " + path);
  out << content;
  if (!out) throw io_error("write failed: " + path);
}

PersonalityReport assess(std::vector<LabeledDoc>& docs, const Lexicon& lex,
                         const ClassifierModel* model,
                         const AssessOptions& options) {
  if (docs.empty()) throw invalid_argument("assess: empty corpus");
  PersonalityReport report;
  report.total = static_cast<int64_t>(docs.size());

  std::vector<SentimentLabel> truth;
  std::vector<SentimentLabel> predicted_for_gold;

  for (auto& d : docs) {
    // Both lexicon scorers, for the distribution output.
    SentimentLabel pattern_label = SentimentLabel::Neutral;
    SentimentLabel valence_label = SentimentLabel::Neutral;
    if (!d.doc.dropped_all) {
      ThresholdConfig pattern_band = options.thresholds;
      pattern_band.neutral_low = -options.thresholds.pattern_epsilon;
      pattern_band.neutral_high = options.thresholds.pattern_epsilon;
      pattern_label =
          label_from_score(score_pattern(d.doc, lex).polarity, pattern_band);
      valence_label = label_from_score(score_valence(d.doc, lex).compound,
                                       options.thresholds);
    }
    ++report.pattern_counts[static_cast<int>(pattern_label)];
    ++report.valence_counts[static_cast<int>(valence_label)];

    SentimentLabel chosen;
    if (options.use_model) {
      if (!model) throw invalid_argument("assess: no model supplied");
      chosen = predict(*model, tfidf_vectorize(d.doc, model->vocabulary)).label;
    } else {
      chosen = options.method == RelabelMethod::Pattern ? pattern_label
                                                        : valence_label;
    }
    d.label = chosen;
    ++report.counts[static_cast<int>(chosen)];

    if (d.original) {
      truth.push_back(*d.original);
      predicted_for_gold.push_back(chosen);
    }
  }

  for (int c = 0; c < kNumClasses; ++c)
    report.ratios[c] = static_cast<double>(report.counts[c]) /
                       static_cast<double>(report.total);
  const int64_t rest = report.counts[static_cast<int>(SentimentLabel::Positive)] +
                       report.counts[static_cast<int>(SentimentLabel::Neutral)];
  report.negative_to_rest =
      rest > 0 ? static_cast<double>(
                     report.counts[static_cast<int>(SentimentLabel::Negative)]) /
                     static_cast<double>(rest)
               : 0.0;

  for (SentimentLabel l : kAllLabels) {
    report.common_words.push_back(
        word_frequency(docs, l, FrequencyMode::Common, options.top_k));
    report.unique_words.push_back(
        word_frequency(docs, l, FrequencyMode::Unique, options.top_k));
  }

  if (!truth.empty()) report.confusion = confusion(truth, predicted_for_gold);
  return report;
}

std::string personality_report_csv(const PersonalityReport& report) {
  std::ostringstream out;
  out << "metric,value\n";
  out << "total," << report.total << '\n';
  for (int c = 0; c < kNumClasses; ++c)
    out << label_name(static_cast<SentimentLabel>(c)) << "_count,"
        << report.counts[c] << '\n';
  out << std::fixed << std::setprecision(6);
  for (int c = 0; c < kNumClasses; ++c)
    out << label_name(static_cast<SentimentLabel>(c)) << "_ratio,"
        << report.ratios[c] << '\n';
  out << "negative_to_rest_ratio," << report.negative_to_rest << '\n';
  return out.str();
}

std::string personality_distribution_csv(const PersonalityReport& report) {
  std::ostringstream out;
  out << "scorer,negative,neutral,positive\n";
  out << "pattern," << report.pattern_counts[0] << ','
      << report.pattern_counts[1] << ',' << report.pattern_counts[2] << '\n';
  out << "valence," << report.valence_counts[0] << ','
      << report.valence_counts[1] << ',' << report.valence_counts[2] << '\n';
  return out.str();
}

std::string personality_report_text(const PersonalityReport& report) {
  std::ostringstream out;
  out << "tweets assessed: " << report.total << '\n';
  for (int c = 0; c < kNumClasses; ++c) {
    out << "  " << std::left << std::setw(10)
        << label_name(static_cast<SentimentLabel>(c)) << report.counts[c]
        << "  (" << std::fixed << std::setprecision(4) << report.ratios[c]
        << ")\n";
  }
  out << "negative / (positive + neutral): " << std::fixed
      << std::setprecision(4) << report.negative_to_rest << '\n';
  for (size_t i = 0; i < report.common_words.size(); ++i) {
    out << '\n' << word_frequency_text_table(report.common_words[i]);
    out << '\n' << word_frequency_text_table(report.unique_words[i]);
  }
  if (report.confusion) {
    out << '\n' << confusion_text_table(*report.confusion);
    const auto m = metrics(*report.confusion);
    out << "accuracy on gold labels: " << std::fixed << std::setprecision(4)
        << m.accuracy << '\n';
  }
  return out.str();
}

}  // namespace senta
