#include "senta/textpipe.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace senta {
namespace {

bool is_ascii_letter(unsigned char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
}

bool is_word_char(unsigned char c) {
  return is_ascii_letter(c) || (c >= '0' && c <= '9') || c == '_';
}

bool is_space(unsigned char c) { return std::isspace(c) != 0; }

bool matches_at(std::string_view s, size_t i, std::string_view prefix) {
  if (i + prefix.size() > s.size()) return false;
  for (size_t j = 0; j < prefix.size(); ++j) {
    if (std::tolower(static_cast<unsigned char>(s[i + j])) != prefix[j])
      return false;
  }
  return true;
}

std::ifstream open_or_throw(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw io_error("cannot open file: " + path);
  return in;
}

std::string strip(const std::string& s) {
  size_t b = 0, e = s.size();
  while (b < e && is_space(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && is_space(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

}  // namespace

ReductionMode reduction_mode_from_name(std::string_view name) {
  if (name == "stem") return ReductionMode::Stem;
  if (name == "lemmatize") return ReductionMode::Lemmatize;
  if (name == "none") return ReductionMode::None;
  throw invalid_argument("unknown reduction mode: " + std::string(name));
}

const char* reduction_mode_name(ReductionMode m) {
  switch (m) {
    case ReductionMode::Stem: return "stem";
    case ReductionMode::Lemmatize: return "lemmatize";
    case ReductionMode::None: return "none";
  }
  return "?";
}

std::unordered_set<std::string> load_stopwords(const std::string& path) {
  auto in = open_or_throw(path);
  std::unordered_set<std::string> words;
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    line = strip(line);
    if (!line.empty()) words.insert(line);
  }
  return words;
}

std::unordered_map<std::string, std::vector<std::string>> load_slang(
    const std::string& path) {
  auto in = open_or_throw(path);
  std::unordered_map<std::string, std::vector<std::string>> map;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    auto tab = line.find('\t');
    if (tab == std::string::npos) continue;
    std::string key = strip(line.substr(0, tab));
    std::istringstream rest(line.substr(tab + 1));
    std::vector<std::string> expansion;
    std::string tok;
    while (rest >> tok) expansion.push_back(tok);
    if (!key.empty() && !expansion.empty()) map[key] = std::move(expansion);
  }
  return map;
}

std::unordered_map<std::string, std::string> load_lemmas(
    const std::string& path) {
  auto in = open_or_throw(path);
  std::unordered_map<std::string, std::string> map;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    auto tab = line.find('\t');
    if (tab == std::string::npos) continue;
    std::string form = strip(line.substr(0, tab));
    std::string lemma = strip(line.substr(tab + 1));
    if (!form.empty() && !lemma.empty()) map[form] = lemma;
  }
  return map;
}

PipelineConfig load_pipeline_config(const std::string& stopwords_path,
                                    const std::string& slang_path,
                                    const std::string& lemma_path,
                                    ReductionMode mode) {
  PipelineConfig config;
  if (!stopwords_path.empty()) config.stopwords = load_stopwords(stopwords_path);
  if (!slang_path.empty()) config.slang = load_slang(slang_path);
  if (!lemma_path.empty()) config.lemmas = load_lemmas(lemma_path);
  config.reduction = mode;
  return config;
}

// Strip order: URLs, then mentions, then numbers/symbols with case folding.
// The character pass maps everything outside [a-z'] to a space, keeps
// apostrophes only between letters, and folds the UTF-8 right single quote
// to '\''.
std::string normalize(std::string_view raw) {
  std::string out;
  out.reserve(raw.size());
  size_t i = 0;
  auto skip_until_space = [&](size_t from) {
    while (from < raw.size() && !is_space(static_cast<unsigned char>(raw[from])))
      ++from;
    return from;
  };
  while (i < raw.size()) {
    const unsigned char c = static_cast<unsigned char>(raw[i]);
    // URLs: http(s)://... and www.... run to the next whitespace.
    if ((matches_at(raw, i, "http://") || matches_at(raw, i, "https://") ||
         matches_at(raw, i, "www.")) &&
        true) {
      i = skip_until_space(i);
      out.push_back(' ');
      continue;
    }
    // @mentions: the '@' plus the following word characters.
    if (c == '@' && i + 1 < raw.size() &&
        is_word_char(static_cast<unsigned char>(raw[i + 1]))) {
      ++i;
      while (i < raw.size() && is_word_char(static_cast<unsigned char>(raw[i])))
        ++i;
      out.push_back(' ');
      continue;
    }
    if (is_ascii_letter(c)) {
      out.push_back(static_cast<char>(std::tolower(c)));
      ++i;
      continue;
    }
    // U+2019 right single quote, folded to an ASCII apostrophe.
    if (c == 0xE2 && i + 2 < raw.size() &&
        static_cast<unsigned char>(raw[i + 1]) == 0x80 &&
        static_cast<unsigned char>(raw[i + 2]) == 0x99) {
      if (!out.empty() && out.back() >= 'a' && out.back() <= 'z' &&
          i + 3 < raw.size() &&
          is_ascii_letter(static_cast<unsigned char>(raw[i + 3])))
        out.push_back('\'');
      else
        out.push_back(' ');
      i += 3;
      continue;
    }
    if (c == '\'') {
      if (!out.empty() && out.back() >= 'a' && out.back() <= 'z' &&
          i + 1 < raw.size() &&
          is_ascii_letter(static_cast<unsigned char>(raw[i + 1])))
        out.push_back('\'');
      else
        out.push_back(' ');
      ++i;
      continue;
    }
    // Everything else (digits, '#', punctuation, non-ASCII) separates words.
    out.push_back(' ');
    ++i;
  }
  // Collapse whitespace.
  std::string collapsed;
  collapsed.reserve(out.size());
  bool pending_space = false;
  for (char ch : out) {
    if (ch == ' ') {
      pending_space = !collapsed.empty();
    } else {
      if (pending_space) collapsed.push_back(' ');
      pending_space = false;
      collapsed.push_back(ch);
    }
  }
  return collapsed;
}

std::vector<std::string> tokenize(std::string_view text) {
  std::vector<std::string> tokens;
  size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && is_space(static_cast<unsigned char>(text[i]))) ++i;
    size_t start = i;
    while (i < text.size() && !is_space(static_cast<unsigned char>(text[i]))) ++i;
    if (i > start) tokens.emplace_back(text.substr(start, i - start));
  }
  return tokens;
}

std::vector<std::string> remove_stopwords(
    const std::vector<std::string>& tokens,
    const std::unordered_set<std::string>& stopwords) {
  std::vector<std::string> out;
  out.reserve(tokens.size());
  for (const auto& t : tokens)
    if (!stopwords.contains(t)) out.push_back(t);
  return out;
}

std::vector<std::string> expand_slang(
    const std::vector<std::string>& tokens,
    const std::unordered_map<std::string, std::vector<std::string>>& slang) {
  std::vector<std::string> out;
  out.reserve(tokens.size());
  for (const auto& t : tokens) {
    auto it = slang.find(t);
    if (it == slang.end()) {
      out.push_back(t);
    } else {
      out.insert(out.end(), it->second.begin(), it->second.end());
    }
  }
  return out;
}

std::vector<std::string> reduce(const std::vector<std::string>& tokens,
                                const PipelineConfig& config) {
  if (config.reduction == ReductionMode::None) return tokens;
  std::vector<std::string> out;
  out.reserve(tokens.size());
  for (const auto& t : tokens) {
    if (config.reduction == ReductionMode::Stem) {
      out.push_back(porter_stem(t));
    } else {
      auto it = config.lemmas.find(t);
      out.push_back(it == config.lemmas.end() ? t : it->second);
    }
  }
  return out;
}

ProcessedDoc preprocess(const TweetRecord& record, const PipelineConfig& config) {
  ProcessedDoc doc;
  doc.source_id = record.id;
  doc.tokens = reduce(
      expand_slang(remove_stopwords(tokenize(normalize(record.raw_text)),
                                    config.stopwords),
                   config.slang),
      config);
  doc.dropped_all = doc.tokens.empty();
  return doc;
}

}  // namespace senta
