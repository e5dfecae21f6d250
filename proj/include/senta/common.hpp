#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace senta {

// Canonical class order. Several tie-breaking rules depend on it, so the
// numeric values are part of the contract.
enum class SentimentLabel : int { Negative = 0, Neutral = 1, Positive = 2 };

constexpr int kNumClasses = 3;

constexpr std::array<SentimentLabel, 3> kAllLabels = {
    SentimentLabel::Negative, SentimentLabel::Neutral, SentimentLabel::Positive};

inline const char* label_name(SentimentLabel l) {
  switch (l) {
    case SentimentLabel::Negative: return "negative";
    case SentimentLabel::Neutral: return "neutral";
    case SentimentLabel::Positive: return "positive";
  }
  return "?";
}

std::optional<SentimentLabel> label_from_name(std::string_view name);

struct TweetRecord {
  std::string id;
  std::string raw_text;
  std::optional<SentimentLabel> original_label;  // nullopt = unknown
  std::string user;
  std::string timestamp;
};

struct ProcessedDoc {
  std::vector<std::string> tokens;
  std::string source_id;
  bool dropped_all = false;  // true iff tokens is empty
};

// A processed document together with its labels. `label` is the working
// (possibly relabeled) class; `original` is the label carried by the input
// file, when it had one.
struct LabeledDoc {
  ProcessedDoc doc;
  std::optional<SentimentLabel> label;
  std::optional<SentimentLabel> original;
};

struct io_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct parse_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct invalid_argument : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Derives a per-stage seed from the run seed, so that every stochastic stage
// gets an independent but reproducible stream. FNV-1a over the stage name,
// mixed with the base seed.
uint64_t mix_seed(uint64_t seed, std::string_view stage);

}  // namespace senta
