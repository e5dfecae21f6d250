#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "senta/common.hpp"

namespace senta {

struct CorpusStats {
  int64_t total_records = 0;
  std::map<SentimentLabel, int64_t> per_class_counts;
  int64_t unknown_count = 0;
  int64_t malformed_rows = 0;
};

// Streaming loader for the 6-field Sentiment140 CSV layout
// (polarity,id,date,query,user,text). Polarity 0 -> Negative, 2 -> Neutral,
// 4 -> Positive. The file is decoded as Latin-1 and re-encoded as UTF-8.
// Rows that do not have exactly six fields are counted as malformed and
// skipped. `limit` < 0 means no limit.
CorpusStats load_sentiment140(
    const std::string& path, int64_t limit,
    const std::function<void(TweetRecord&&)>& sink);

std::vector<TweetRecord> load_sentiment140(const std::string& path,
                                           int64_t limit,
                                           CorpusStats* stats = nullptr);

// Newline-delimited JSON objects, one per line, each with at least a "text"
// field; "id", "user", "timestamp" and "label" are honored when present.
// Records without "label" get an unknown original label.
std::vector<TweetRecord> load_tweet_dump(const std::string& path,
                                         CorpusStats* stats = nullptr);

enum class FrequencyMode { Common, Unique };

struct WordFrequencyTable {
  SentimentLabel label = SentimentLabel::Neutral;
  FrequencyMode mode = FrequencyMode::Common;
  // Sorted by count descending, ties lexicographic ascending.
  std::vector<std::pair<std::string, int64_t>> rows;
};

// Common: token occurrence counts over docs of `label`.
// Unique: restricted to tokens whose document frequency in every other class
// is zero.
WordFrequencyTable word_frequency(const std::vector<LabeledDoc>& docs,
                                  SentimentLabel label, FrequencyMode mode,
                                  int64_t top_k = -1);

std::string word_frequency_csv(const WordFrequencyTable& table);
std::string word_frequency_text_table(const WordFrequencyTable& table);

// Processed-corpus file: one doc per line,
// id<TAB>original<TAB>label<TAB>space-joined tokens
// where original/label are class names or "-" when absent.
void save_processed_corpus(const std::vector<LabeledDoc>& docs,
                           const std::string& path, bool with_labels);
std::vector<LabeledDoc> load_processed_corpus(const std::string& path);

}  // namespace senta
