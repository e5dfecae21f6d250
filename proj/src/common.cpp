#include "senta/common.hpp"

namespace senta {

std::optional<SentimentLabel> label_from_name(std::string_view name) {
  if (name == "negative") return SentimentLabel::Negative;
  if (name == "neutral") return SentimentLabel::Neutral;
  if (name == "positive") return SentimentLabel::Positive;
  return std::nullopt;
}

uint64_t mix_seed(uint64_t seed, std::string_view stage) {
  uint64_t h = 14695981039346656037ull;  // FNV-1a offset basis
  for (unsigned char c : stage) {
    h ^= c;
    h *= 1099511628211ull;
  }
  h ^= seed + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  return h;
}

}  // namespace senta
