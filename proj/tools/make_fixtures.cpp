// Generates the synthetic corpora under data/fixtures/. Deterministic: the
// same seeds always reproduce the committed files byte for byte.
//
// Usage: make_fixtures <output-dir>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <random>
#include <string>
#include <vector>

namespace {

const std::vector<std::string> kPositive = {
    "good", "great",   "love", "happy", "awesome",
    "nice", "amazing", "fun",  "enjoy", "win"};

const std::vector<std::string> kNegative = {
    "bad",   "sad",    "hate",     "awful", "terrible",
    "angry", "boring", "annoying", "worst", "lose"};

// All fillers sort before "not" so that ranked truncation, which drops
// unknown tokens in lexicographic order, never removes the negator.
const std::vector<std::string> kFiller = {
    "coffee", "lunch",   "movie",  "film",    "game",   "city",  "music",
    "book",   "bike",    "garden", "desk",    "kitchen", "market", "morning",
    "laptop", "door",    "chair",  "dinner",  "beach",  "hotel"};

const std::vector<std::string> kBooster = {"really", "very", "totally"};

const std::vector<std::string> kUsers = {
    "sunny_day",  "quiet_fox", "blue_kite", "mapleleaf", "rivertown",
    "night_owl7", "green_tea", "old_radio", "papertown", "west_wind"};

enum class Intent { Positive, Negative, Neutral };

struct Row {
  Intent intent;
  std::string text;
};

std::string pick(std::mt19937_64& rng, const std::vector<std::string>& pool) {
  std::uniform_int_distribution<size_t> d(0, pool.size() - 1);
  return pool[d(rng)];
}

bool chance(std::mt19937_64& rng, double p) {
  std::uniform_real_distribution<double> d(0.0, 1.0);
  return d(rng) < p;
}

// Decorations the preprocessor is expected to strip.
std::string decorate(std::mt19937_64& rng, std::string text) {
  if (chance(rng, 0.25)) text = "@" + pick(rng, kUsers) + " " + text;
  if (chance(rng, 0.20)) text += " http://t.co/x" + std::to_string(rng() % 9000);
  if (chance(rng, 0.15)) text += " #daily";
  if (chance(rng, 0.30)) text += "!";
  if (chance(rng, 0.10)) {
    for (auto& ch : text)
      if (ch >= 'a' && ch <= 'z' && chance(rng, 0.5))
        ch = static_cast<char>(ch - 'a' + 'A');
  }
  return text;
}

Row make_row(std::mt19937_64& rng, int kind) {
  Row row;
  const std::string f1 = pick(rng, kFiller);
  const std::string f2 = pick(rng, kFiller);
  switch (kind) {
    case 0: {  // plainly positive
      std::string w = pick(rng, kPositive);
      if (chance(rng, 0.3)) w = pick(rng, kBooster) + " " + w;
      row.text = "the " + f1 + " was " + w + " today";
      row.intent = Intent::Positive;
      break;
    }
    case 1: {  // plainly negative
      std::string w = pick(rng, kNegative);
      if (chance(rng, 0.3)) w = pick(rng, kBooster) + " " + w;
      row.text = "this " + f1 + " is " + w;
      row.intent = Intent::Negative;
      break;
    }
    case 2: {  // negated positive reads negative
      row.text = "the " + f1 + " is not " + pick(rng, kPositive);
      row.intent = Intent::Negative;
      break;
    }
    case 3: {  // negated negative reads positive
      row.text = "not " + pick(rng, kNegative) + " at all, " + f1;
      row.intent = Intent::Positive;
      break;
    }
    default: {  // neutral chatter, no sentiment-bearing words
      row.text = "at the " + f1 + " with a " + f2 + " this " +
                 pick(rng, kFiller);
      row.intent = Intent::Neutral;
      break;
    }
  }
  row.text = decorate(rng, row.text);
  return row;
}

int polarity_code(Intent intent) {
  switch (intent) {
    case Intent::Negative: return 0;
    case Intent::Neutral: return 2;
    case Intent::Positive: return 4;
  }
  return 2;
}

const char* label_name(Intent intent) {
  switch (intent) {
    case Intent::Negative: return "negative";
    case Intent::Neutral: return "neutral";
    case Intent::Positive: return "positive";
  }
  return "neutral";
}

void write_s140(const std::string& path, size_t n, uint64_t seed,
                double label_noise) {
  std::mt19937_64 rng(seed);
  // kind mix: 30% pos, 30% neg, 12.5% + 12.5% negated, 15% neutral
  std::discrete_distribution<int> kinds({30, 30, 12.5, 12.5, 15});
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::fprintf(stderr, "cannot write %s\n", path.c_str());
    std::exit(1);
  }
  for (size_t i = 0; i < n; ++i) {
    const Row row = make_row(rng, kinds(rng));
    int code = polarity_code(row.intent);
    if (chance(rng, label_noise)) code = static_cast<int>(rng() % 3) * 2;
    out << '"' << code << "\",\"" << (2000000000 + i)
        << "\",\"Mon Apr 06 22:19:45 PDT 2009\",\"NO_QUERY\",\""
        << kUsers[i % kUsers.size()] << "\",\"" << row.text << "\"\n";
  }
}

void write_personality(const std::string& path, size_t n, uint64_t seed) {
  std::mt19937_64 rng(seed);
  // A negative-leaning subject: more gloom than cheer.
  std::discrete_distribution<int> kinds({20, 28, 14, 8, 30});
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::fprintf(stderr, "cannot write %s\n", path.c_str());
    std::exit(1);
  }
  for (size_t i = 0; i < n; ++i) {
    const Row row = make_row(rng, kinds(rng));
    std::string text = row.text;
    std::string escaped;
    for (char c : text) {
      if (c == '"' || c == '\\') escaped += '\\';
      escaped += c;
    }
    out << "{\"id\":\"p" << i << "\",\"user\":\"subject\",\"timestamp\":"
        << "\"2020-03-" << (1 + i % 28) << "T12:00:00Z\",\"text\":\""
        << escaped << "\",\"label\":\"" << label_name(row.intent) << "\"}\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::fprintf(stderr, "usage: make_fixtures <output-dir>\n");
    return 2;
  }
  const std::string dir = argv[1];
  write_s140(dir + "/synth20k.csv", 20000, 20240601, 0.08);
  write_s140(dir + "/s140_small.csv", 1000, 20240602, 0.08);
  write_personality(dir + "/personality300.jsonl", 300, 20240603);
  return 0;
}
