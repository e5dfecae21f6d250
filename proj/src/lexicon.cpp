#include "senta/lexicon.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

namespace senta {
namespace {

constexpr double kCompoundAlpha = 15.0;
constexpr double kNegationFactor = -0.74;
constexpr int kValenceNegationScope = 3;
constexpr int kPatternNegationScope = 1;
constexpr double kPatternNegationFactor = -0.5;

bool parse_double(const std::string& s, double* out) {
  try {
    size_t pos = 0;
    *out = std::stod(s, &pos);
    return pos == s.size();
  } catch (...) {
    return false;
  }
}

}  // namespace

void Lexicon::insert(LexiconEntry entry) {
  entries_[entry.token] = std::move(entry);
}

Lexicon Lexicon::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw io_error("cannot open lexicon file: " + path);
  Lexicon lex;
  lex.name_ = path;
  std::string line;
  int64_t line_no = 0;
  int64_t rejected = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') {
      // Header comments may carry name/version.
      auto eq = line.find("version=");
      if (eq != std::string::npos) lex.version_ = line.substr(eq + 8);
      continue;
    }
    std::vector<std::string> cols;
    std::istringstream ss(line);
    std::string col;
    while (std::getline(ss, col, '\t')) cols.push_back(col);
    if (cols.size() != 5) {
      std::cerr << "lexicon: line " << line_no << ": expected 5 columns, got "
                << cols.size() << "\n";
      ++rejected;
      continue;
    }
    LexiconEntry entry;
    entry.token = cols[0];
    bool ok = parse_double(cols[1], &entry.polarity) &&
              parse_double(cols[2], &entry.subjectivity) &&
              parse_double(cols[3], &entry.valence);
    const std::string& kind = cols[4];
    if (kind == "sentiment") {
      entry.kind = EntryKind::Sentiment;
    } else if (kind == "negator") {
      entry.kind = EntryKind::Negator;
    } else if (kind.rfind("booster:", 0) == 0) {
      entry.kind = EntryKind::Booster;
      ok = ok && parse_double(kind.substr(8), &entry.booster_delta);
    } else {
      ok = false;
    }
    ok = ok && entry.polarity >= -1.0 && entry.polarity <= 1.0 &&
         entry.subjectivity >= 0.0 && entry.subjectivity <= 1.0 &&
         entry.valence >= -4.0 && entry.valence <= 4.0 && !entry.token.empty();
    if (!ok) {
      std::cerr << "lexicon: line " << line_no << ": rejected row for token '"
                << cols[0] << "'\n";
      ++rejected;
      continue;
    }
    if (lex.entries_.contains(entry.token))
      std::cerr << "lexicon: line " << line_no << ": duplicate token '"
                << entry.token << "', last row wins\n";
    lex.insert(std::move(entry));
  }
  if (lex.entries_.empty())
    throw parse_error("lexicon has no valid rows: " + path);
  (void)rejected;
  return lex;
}

PolaritySubjectivity score_pattern(const ProcessedDoc& doc, const Lexicon& lex) {
  PolaritySubjectivity score;
  double polarity_sum = 0.0;
  double subjectivity_sum = 0.0;
  const auto& tokens = doc.tokens;
  for (size_t i = 0; i < tokens.size(); ++i) {
    const LexiconEntry* entry = lex.find(tokens[i]);
    if (!entry || entry->kind != EntryKind::Sentiment) continue;
    double polarity = entry->polarity;
    for (size_t back = 1; back <= kPatternNegationScope && back <= i; ++back) {
      const LexiconEntry* prev = lex.find(tokens[i - back]);
      if (prev && prev->kind == EntryKind::Negator) {
        polarity *= kPatternNegationFactor;
        break;
      }
    }
    polarity_sum += polarity;
    subjectivity_sum += entry->subjectivity;
    ++score.matched_count;
  }
  if (score.matched_count > 0) {
    score.polarity = polarity_sum / score.matched_count;
    score.subjectivity = subjectivity_sum / score.matched_count;
  }
  return score;
}

ValenceScores score_valence(const ProcessedDoc& doc, const Lexicon& lex) {
  ValenceScores scores;
  const auto& tokens = doc.tokens;
  double sum = 0.0;
  double pos_mass = 0.0, neg_mass = 0.0, neu_mass = 0.0;
  for (size_t i = 0; i < tokens.size(); ++i) {
    const LexiconEntry* entry = lex.find(tokens[i]);
    if (!entry || entry->kind != EntryKind::Sentiment) {
      neu_mass += 1.0;
      continue;
    }
    double valence = entry->valence;
    if (i > 0 && valence != 0.0) {
      const LexiconEntry* prev = lex.find(tokens[i - 1]);
      if (prev && prev->kind == EntryKind::Booster)
        valence += (valence > 0 ? 1.0 : -1.0) * prev->booster_delta;
    }
    for (size_t back = 1; back <= kValenceNegationScope && back <= i; ++back) {
      const LexiconEntry* prev = lex.find(tokens[i - back]);
      if (prev && prev->kind == EntryKind::Negator) {
        valence *= kNegationFactor;
        break;
      }
    }
    sum += valence;
    if (valence > 0)
      pos_mass += valence + 1.0;
    else if (valence < 0)
      neg_mass += -valence + 1.0;
    else
      neu_mass += 1.0;
  }
  scores.compound = sum / std::sqrt(sum * sum + kCompoundAlpha);
  const double total_mass = pos_mass + neg_mass + neu_mass;
  if (total_mass > 0) {
    scores.pos_frac = pos_mass / total_mass;
    scores.neg_frac = neg_mass / total_mass;
    scores.neu_frac = neu_mass / total_mass;
  } else {
    scores.neu_frac = 1.0;
  }
  return scores;
}

SentimentLabel label_from_score(double score, const ThresholdConfig& cfg) {
  if (!std::isfinite(score))
    throw invalid_argument("non-finite sentiment score (scorer bug)");
  if (score > cfg.neutral_high) return SentimentLabel::Positive;
  if (score < cfg.neutral_low) return SentimentLabel::Negative;
  return SentimentLabel::Neutral;
}

RelabelMethod relabel_method_from_name(std::string_view name) {
  if (name == "pattern") return RelabelMethod::Pattern;
  if (name == "valence") return RelabelMethod::Valence;
  throw invalid_argument("unknown relabel method: " + std::string(name));
}

const char* relabel_method_name(RelabelMethod m) {
  return m == RelabelMethod::Pattern ? "pattern" : "valence";
}

RelabelReport relabel_corpus(std::vector<LabeledDoc>& docs, RelabelMethod method,
                             const Lexicon& lex, const ThresholdConfig& cfg) {
  RelabelReport report;
  report.method = method;
  ThresholdConfig band = cfg;
  if (method == RelabelMethod::Pattern) {
    band.neutral_low = -cfg.pattern_epsilon;
    band.neutral_high = cfg.pattern_epsilon;
  }
  for (auto& d : docs) {
    if (d.original)
      ++report.before_counts[static_cast<int>(*d.original)];
    else
      ++report.before_unknown;
    SentimentLabel label;
    if (d.doc.dropped_all) {
      label = SentimentLabel::Neutral;
    } else if (method == RelabelMethod::Pattern) {
      label = label_from_score(score_pattern(d.doc, lex).polarity, band);
    } else {
      label = label_from_score(score_valence(d.doc, lex).compound, band);
    }
    if (label == SentimentLabel::Neutral &&
        d.original && *d.original != SentimentLabel::Neutral)
      ++report.moved_to_neutral;
    d.label = label;
    ++report.after_counts[static_cast<int>(label)];
  }
  return report;
}

std::string relabel_report_csv(const RelabelReport& report) {
  std::ostringstream out;
  out << "method,stage,negative,neutral,positive,unknown\n";
  out << relabel_method_name(report.method) << ",before,"
      << report.before_counts[0] << ',' << report.before_counts[1] << ','
      << report.before_counts[2] << ',' << report.before_unknown << '\n';
  out << relabel_method_name(report.method) << ",after,"
      << report.after_counts[0] << ',' << report.after_counts[1] << ','
      << report.after_counts[2] << ",0\n";
  return out.str();
}

std::string relabel_report_text_table(const RelabelReport& report) {
  std::ostringstream out;
  out << "relabel method: " << relabel_method_name(report.method) << '\n';
  out << "stage     negative   neutral    positive   unknown\n";
  auto row = [&](const char* stage, int64_t n, int64_t u, int64_t p,
                 int64_t unk) {
    std::ostringstream line;
    line << stage;
    while (line.str().size() < 10) line << ' ';
    for (int64_t v : {n, u, p, unk}) {
      std::string s = std::to_string(v);
      line << s;
      for (size_t i = s.size(); i < 11; ++i) line << ' ';
    }
    out << line.str() << '\n';
  };
  row("before", report.before_counts[0], report.before_counts[1],
      report.before_counts[2], report.before_unknown);
  row("after", report.after_counts[0], report.after_counts[1],
      report.after_counts[2], 0);
  out << "moved to neutral: " << report.moved_to_neutral << '\n';
  return out.str();
}

}  // namespace senta
