#include "senta/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "json.hpp"
#include "senta/textpipe.hpp"

namespace senta {
namespace {

// The public Sentiment140 file is Latin-1; re-encode as UTF-8.
std::string latin1_to_utf8(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (unsigned char c : s) {
    if (c < 0x80) {
      out.push_back(static_cast<char>(c));
    } else {
      out.push_back(static_cast<char>(0xC0 | (c >> 6)));
      out.push_back(static_cast<char>(0x80 | (c & 0x3F)));
    }
  }
  return out;
}

// One CSV record; quoted fields, "" as an escaped quote. Returns false on
// EOF with no data.
bool read_csv_record(std::istream& in, std::vector<std::string>& fields) {
  fields.clear();
  std::string field;
  bool in_quotes = false;
  bool any = false;
  int c;
  while ((c = in.get()) != EOF) {
    any = true;
    const char ch = static_cast<char>(c);
    if (in_quotes) {
      if (ch == '"') {
        if (in.peek() == '"') {
          field.push_back('"');
          in.get();
        } else {
          in_quotes = false;
        }
      } else {
        field.push_back(ch);
      }
    } else if (ch == '"') {
      in_quotes = true;
    } else if (ch == ',') {
      fields.push_back(std::move(field));
      field.clear();
    } else if (ch == '\n') {
      break;
    } else if (ch != '\r') {
      field.push_back(ch);
    }
  }
  if (!any) return false;
  fields.push_back(std::move(field));
  return true;
}

std::optional<SentimentLabel> polarity_code_to_label(const std::string& code) {
  if (code == "0") return SentimentLabel::Negative;
  if (code == "2") return SentimentLabel::Neutral;
  if (code == "4") return SentimentLabel::Positive;
  return std::nullopt;
}

void count_label(CorpusStats& stats, const std::optional<SentimentLabel>& l) {
  ++stats.total_records;
  if (l)
    ++stats.per_class_counts[*l];
  else
    ++stats.unknown_count;
}

}  // namespace

CorpusStats load_sentiment140(const std::string& path, int64_t limit,
                              const std::function<void(TweetRecord&&)>& sink) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw io_error("cannot open corpus file: " + path);
  CorpusStats stats;
  std::vector<std::string> fields;
  while ((limit < 0 || stats.total_records < limit) &&
         read_csv_record(in, fields)) {
    if (fields.size() == 1 && fields[0].empty()) continue;  // blank line
    if (fields.size() != 6) {
      ++stats.malformed_rows;
      continue;
    }
    TweetRecord record;
    record.original_label = polarity_code_to_label(fields[0]);
    record.id = fields[1];
    record.timestamp = fields[2];
    record.user = fields[4];
    record.raw_text = latin1_to_utf8(fields[5]);
    count_label(stats, record.original_label);
    sink(std::move(record));
  }
  return stats;
}

std::vector<TweetRecord> load_sentiment140(const std::string& path,
                                           int64_t limit, CorpusStats* stats) {
  std::vector<TweetRecord> records;
  CorpusStats s = load_sentiment140(
      path, limit, [&](TweetRecord&& r) { records.push_back(std::move(r)); });
  if (stats) *stats = s;
  return records;
}

std::vector<TweetRecord> load_tweet_dump(const std::string& path,
                                         CorpusStats* stats) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw io_error("cannot open dump file: " + path);
  std::vector<TweetRecord> records;
  CorpusStats s;
  std::string line;
  int64_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    nlohmann::json obj = nlohmann::json::parse(line, nullptr, false);
    if (obj.is_discarded() || !obj.is_object() || !obj.contains("text") ||
        !obj["text"].is_string()) {
      ++s.malformed_rows;
      continue;
    }
    TweetRecord record;
    record.raw_text = obj["text"].get<std::string>();
    record.id = obj.value("id", std::to_string(line_no));
    record.user = obj.value("user", "");
    record.timestamp = obj.value("timestamp", "");
    if (obj.contains("label") && obj["label"].is_string())
      record.original_label = label_from_name(obj["label"].get<std::string>());
    count_label(s, record.original_label);
    records.push_back(std::move(record));
  }
  if (stats) *stats = s;
  return records;
}

WordFrequencyTable word_frequency(const std::vector<LabeledDoc>& docs,
                                  SentimentLabel label, FrequencyMode mode,
                                  int64_t top_k) {
  WordFrequencyTable table;
  table.label = label;
  table.mode = mode;

  std::unordered_map<std::string, int64_t> counts;
  for (const auto& d : docs) {
    if (d.label != label) continue;
    for (const auto& t : d.doc.tokens) ++counts[t];
  }
  if (mode == FrequencyMode::Unique) {
    std::unordered_set<std::string> elsewhere;
    for (const auto& d : docs) {
      if (!d.label || d.label == label) continue;
      for (const auto& t : d.doc.tokens) elsewhere.insert(t);
    }
    for (auto it = counts.begin(); it != counts.end();) {
      if (elsewhere.contains(it->first))
        it = counts.erase(it);
      else
        ++it;
    }
  }
  table.rows.assign(counts.begin(), counts.end());
  std::sort(table.rows.begin(), table.rows.end(),
            [](const auto& a, const auto& b) {
              if (a.second != b.second) return a.second > b.second;
              return a.first < b.first;
            });
  if (top_k >= 0 && static_cast<int64_t>(table.rows.size()) > top_k)
    table.rows.resize(static_cast<size_t>(top_k));
  return table;
}

std::string word_frequency_csv(const WordFrequencyTable& table) {
  std::ostringstream out;
  out << "token,count\n";
  for (const auto& [token, count] : table.rows)
    out << token << ',' << count << '\n';
  return out.str();
}

std::string word_frequency_text_table(const WordFrequencyTable& table) {
  size_t width = 5;
  for (const auto& [token, count] : table.rows)
    width = std::max(width, token.size());
  std::ostringstream out;
  out << label_name(table.label) << " ("
      << (table.mode == FrequencyMode::Common ? "common" : "unique") << ")\n";
  out << std::left << std::setw(static_cast<int>(width) + 2) << "token"
      << "count\n";
  for (const auto& [token, count] : table.rows)
    out << std::left << std::setw(static_cast<int>(width) + 2) << token << count
        << '\n';
  return out.str();
}

namespace {
std::string label_or_dash(const std::optional<SentimentLabel>& l) {
  return l ? label_name(*l) : "-";
}
}  // namespace

void save_processed_corpus(const std::vector<LabeledDoc>& docs,
                           const std::string& path, bool with_labels) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw io_error("cannot write corpus file: " + path);
  for (const auto& d : docs) {
    out << d.doc.source_id << '\t' << label_or_dash(d.original) << '\t'
        << (with_labels ? label_or_dash(d.label) : std::string("-")) << '\t';
    for (size_t i = 0; i < d.doc.tokens.size(); ++i) {
      if (i) out << ' ';
      out << d.doc.tokens[i];
    }
    out << '\n';
  }
  if (!out) throw io_error("write failed: " + path);
}

std::vector<LabeledDoc> load_processed_corpus(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw io_error("cannot open corpus file: " + path);
  std::vector<LabeledDoc> docs;
  std::string line;
  int64_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::vector<std::string> cols;
    size_t start = 0;
    for (int i = 0; i < 3; ++i) {
      auto tab = line.find('\t', start);
      if (tab == std::string::npos)
        throw parse_error("malformed corpus line " + std::to_string(line_no) +
                          " in " + path);
      cols.push_back(line.substr(start, tab - start));
      start = tab + 1;
    }
    LabeledDoc d;
    d.doc.source_id = cols[0];
    d.original = label_from_name(cols[1]);
    d.label = label_from_name(cols[2]);
    d.doc.tokens = tokenize(line.substr(start));
    d.doc.dropped_all = d.doc.tokens.empty();
    docs.push_back(std::move(d));
  }
  return docs;
}

}  // namespace senta
