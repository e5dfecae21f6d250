#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "senta/common.hpp"

namespace senta {

enum class EntryKind { Sentiment, Booster, Negator };

struct LexiconEntry {
  std::string token;
  double polarity = 0.0;      // [-1, 1]
  double subjectivity = 0.0;  // [0, 1]
  double valence = 0.0;       // [-4, 4]
  EntryKind kind = EntryKind::Sentiment;
  double booster_delta = 0.0;  // only meaningful for Booster entries
};

class Lexicon {
 public:
  // TSV schema: token<TAB>polarity<TAB>subjectivity<TAB>valence<TAB>kind
  // where kind is "sentiment", "negator" or "booster:<delta>".
  // '#' comment lines allowed. Out-of-range rows are rejected with a
  // diagnostic on stderr; duplicates: last row wins (with a warning).
  // A file yielding zero valid rows is a fatal parse error.
  static Lexicon load(const std::string& path);

  const LexiconEntry* find(const std::string& token) const {
    auto it = entries_.find(token);
    return it == entries_.end() ? nullptr : &it->second;
  }

  size_t size() const { return entries_.size(); }
  const std::string& name() const { return name_; }
  const std::string& version() const { return version_; }

  void insert(LexiconEntry entry);

 private:
  std::unordered_map<std::string, LexiconEntry> entries_;
  std::string name_;
  std::string version_;
};

struct PolaritySubjectivity {
  double polarity = 0.0;
  double subjectivity = 0.0;
  int matched_count = 0;
};

struct ValenceScores {
  double compound = 0.0;
  double pos_frac = 0.0;
  double neg_frac = 0.0;
  double neu_frac = 0.0;
};

struct ThresholdConfig {
  double neutral_low = -0.05;
  double neutral_high = 0.05;
  double pattern_epsilon = 0.05;
};

// Mean polarity / subjectivity over matched sentiment entries. A negator as
// the immediately preceding token multiplies the following sentiment
// polarity by -0.5. No matches -> (0, 0).
PolaritySubjectivity score_pattern(const ProcessedDoc& doc, const Lexicon& lex);

// Valence-rule scorer. Effective token valence = lexicon valence, shifted
// toward its own sign by an immediately preceding booster's delta, then
// multiplied by -0.74 when a negator occurs within the 3 preceding tokens.
// compound = S / sqrt(S^2 + 15) over the summed effective valences.
ValenceScores score_valence(const ProcessedDoc& doc, const Lexicon& lex);

// score > neutral_high -> Positive; score < neutral_low -> Negative;
// otherwise Neutral (band endpoints included). Non-finite scores are a bug
// in the scorer and raise invalid_argument.
SentimentLabel label_from_score(double score, const ThresholdConfig& cfg);

enum class RelabelMethod { Pattern, Valence };

RelabelMethod relabel_method_from_name(std::string_view name);
const char* relabel_method_name(RelabelMethod m);

struct RelabelReport {
  RelabelMethod method = RelabelMethod::Valence;
  std::array<int64_t, 3> before_counts{};  // canonical order; unknowns separate
  int64_t before_unknown = 0;
  std::array<int64_t, 3> after_counts{};
  int64_t moved_to_neutral = 0;
};

// Labels every doc in place via the chosen scorer + label_from_score.
// Docs that preprocessing emptied out are labeled Neutral.
RelabelReport relabel_corpus(std::vector<LabeledDoc>& docs, RelabelMethod method,
                             const Lexicon& lex, const ThresholdConfig& cfg);

std::string relabel_report_csv(const RelabelReport& report);
std::string relabel_report_text_table(const RelabelReport& report);

}  // namespace senta
