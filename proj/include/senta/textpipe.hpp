#pragma once

#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "senta/common.hpp"

namespace senta {

enum class ReductionMode { Stem, Lemmatize, None };

ReductionMode reduction_mode_from_name(std::string_view name);
const char* reduction_mode_name(ReductionMode m);

struct PipelineConfig {
  std::unordered_set<std::string> stopwords;
  std::unordered_map<std::string, std::vector<std::string>> slang;
  std::unordered_map<std::string, std::string> lemmas;
  ReductionMode reduction = ReductionMode::Stem;
};

// List-file loaders. Stopwords: one token per line, '#' comments.
// Slang: slang<TAB>expansion words. Lemmas: form<TAB>lemma.
std::unordered_set<std::string> load_stopwords(const std::string& path);
std::unordered_map<std::string, std::vector<std::string>> load_slang(
    const std::string& path);
std::unordered_map<std::string, std::string> load_lemmas(const std::string& path);

// Convenience: loads the three list files (any may be empty-string to skip).
PipelineConfig load_pipeline_config(const std::string& stopwords_path,
                                    const std::string& slang_path,
                                    const std::string& lemma_path,
                                    ReductionMode mode);

// Strips URLs, @-mentions, '#' prefixes, numbers and non-alphabetic symbols,
// lowercases and collapses whitespace. Total and idempotent. Apostrophes
// between letters survive (contractions).
std::string normalize(std::string_view raw);

// Whitespace split of normalized text; never yields empty tokens.
std::vector<std::string> tokenize(std::string_view text);

std::vector<std::string> remove_stopwords(
    const std::vector<std::string>& tokens,
    const std::unordered_set<std::string>& stopwords);

std::vector<std::string> expand_slang(
    const std::vector<std::string>& tokens,
    const std::unordered_map<std::string, std::vector<std::string>>& slang);

std::vector<std::string> reduce(const std::vector<std::string>& tokens,
                                const PipelineConfig& config);

// Porter suffix-stripping stemmer (1980 algorithm).
std::string porter_stem(std::string_view word);

// normalize -> tokenize -> remove_stopwords -> expand_slang -> reduce,
// in exactly that order.
ProcessedDoc preprocess(const TweetRecord& record, const PipelineConfig& config);

}  // namespace senta
