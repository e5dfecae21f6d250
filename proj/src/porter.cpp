#include <string>
#include <string_view>

#include "senta/textpipe.hpp"

// Porter's 1980 suffix-stripping algorithm, steps 1a through 5b.

namespace senta {
namespace {

bool is_consonant(const std::string& w, int i) {
  switch (w[static_cast<size_t>(i)]) {
    case 'a':
    case 'e':
    case 'i':
    case 'o':
    case 'u':
      return false;
    case 'y':
      return i == 0 ? true : !is_consonant(w, i - 1);
    default:
      return true;
  }
}

// m of w[0..end), the number of VC sequences.
int measure(const std::string& w, int end) {
  int n = 0;
  int i = 0;
  while (i < end && is_consonant(w, i)) ++i;
  while (i < end) {
    while (i < end && !is_consonant(w, i)) ++i;
    if (i >= end) break;
    ++n;
    while (i < end && is_consonant(w, i)) ++i;
  }
  return n;
}

bool has_vowel(const std::string& w, int end) {
  for (int i = 0; i < end; ++i)
    if (!is_consonant(w, i)) return true;
  return false;
}

bool ends_double_consonant(const std::string& w) {
  const int n = static_cast<int>(w.size());
  if (n < 2) return false;
  return w[n - 1] == w[n - 2] && is_consonant(w, n - 1);
}

// consonant-vowel-consonant ending where the final consonant is not w, x, y.
bool ends_cvc(const std::string& w) {
  const int n = static_cast<int>(w.size());
  if (n < 3) return false;
  if (!is_consonant(w, n - 1) || is_consonant(w, n - 2) ||
      !is_consonant(w, n - 3))
    return false;
  const char c = w[static_cast<size_t>(n - 1)];
  return c != 'w' && c != 'x' && c != 'y';
}

bool ends_with(const std::string& w, std::string_view suffix) {
  return w.size() >= suffix.size() &&
         std::string_view(w).substr(w.size() - suffix.size()) == suffix;
}

int stem_len(const std::string& w, std::string_view suffix) {
  return static_cast<int>(w.size() - suffix.size());
}

// Replaces `suffix` by `repl` when the measure of the remaining stem exceeds
// `min_m`. Returns true when the suffix matched (even if not replaced).
bool rule(std::string& w, std::string_view suffix, std::string_view repl,
          int min_m) {
  if (!ends_with(w, suffix)) return false;
  const int base = stem_len(w, suffix);
  if (measure(w, base) > min_m) {
    w.resize(static_cast<size_t>(base));
    w.append(repl);
  }
  return true;
}

void step1a(std::string& w) {
  if (ends_with(w, "sses"))
    w.resize(w.size() - 2);
  else if (ends_with(w, "ies"))
    w.resize(w.size() - 2);
  else if (ends_with(w, "ss"))
    ;
  else if (ends_with(w, "s"))
    w.resize(w.size() - 1);
}

void step1b(std::string& w) {
  if (ends_with(w, "eed")) {
    if (measure(w, stem_len(w, "eed")) > 0) w.resize(w.size() - 1);
    return;
  }
  bool stripped = false;
  if (ends_with(w, "ed") && has_vowel(w, stem_len(w, "ed"))) {
    w.resize(w.size() - 2);
    stripped = true;
  } else if (ends_with(w, "ing") && has_vowel(w, stem_len(w, "ing"))) {
    w.resize(w.size() - 3);
    stripped = true;
  }
  if (!stripped) return;
  if (ends_with(w, "at") || ends_with(w, "bl") || ends_with(w, "iz")) {
    w.push_back('e');
  } else if (ends_double_consonant(w)) {
    const char c = w.back();
    if (c != 'l' && c != 's' && c != 'z') w.pop_back();
  } else if (measure(w, static_cast<int>(w.size())) == 1 && ends_cvc(w)) {
    w.push_back('e');
  }
}

void step1c(std::string& w) {
  if (ends_with(w, "y") && has_vowel(w, static_cast<int>(w.size()) - 1))
    w.back() = 'i';
}

void step2(std::string& w) {
  switch (w[w.size() - 2]) {  // penultimate char indexes the rule group
    case 'a':
      if (rule(w, "ational", "ate", 0)) return;
      if (rule(w, "tional", "tion", 0)) return;
      break;
    case 'c':
      if (rule(w, "enci", "ence", 0)) return;
      if (rule(w, "anci", "ance", 0)) return;
      break;
    case 'e':
      if (rule(w, "izer", "ize", 0)) return;
      break;
    case 'l':
      if (rule(w, "abli", "able", 0)) return;
      if (rule(w, "alli", "al", 0)) return;
      if (rule(w, "entli", "ent", 0)) return;
      if (rule(w, "eli", "e", 0)) return;
      if (rule(w, "ousli", "ous", 0)) return;
      break;
    case 'o':
      if (rule(w, "ization", "ize", 0)) return;
      if (rule(w, "ation", "ate", 0)) return;
      if (rule(w, "ator", "ate", 0)) return;
      break;
    case 's':
      if (rule(w, "alism", "al", 0)) return;
      if (rule(w, "iveness", "ive", 0)) return;
      if (rule(w, "fulness", "ful", 0)) return;
      if (rule(w, "ousness", "ous", 0)) return;
      break;
    case 't':
      if (rule(w, "aliti", "al", 0)) return;
      if (rule(w, "iviti", "ive", 0)) return;
      if (rule(w, "biliti", "ble", 0)) return;
      break;
    default:
      break;
  }
}

void step3(std::string& w) {
  switch (w.back()) {
    case 'e':
      if (rule(w, "icate", "ic", 0)) return;
      if (rule(w, "ative", "", 0)) return;
      if (rule(w, "alize", "al", 0)) return;
      break;
    case 'i':
      if (rule(w, "iciti", "ic", 0)) return;
      break;
    case 'l':
      if (rule(w, "ical", "ic", 0)) return;
      if (rule(w, "ful", "", 0)) return;
      break;
    case 's':
      if (rule(w, "ness", "", 0)) return;
      break;
    default:
      break;
  }
}

void step4(std::string& w) {
  static constexpr std::string_view suffixes[] = {
      "al",  "ance", "ence", "er",  "ic",  "able", "ible", "ant", "ement",
      "ment", "ent", "ion",  "ou",  "ism", "ate",  "iti",  "ous", "ive",
      "ize"};
  for (std::string_view suffix : suffixes) {
    if (!ends_with(w, suffix)) continue;
    const int base = stem_len(w, suffix);
    if (suffix == "ion") {
      if (base > 0 && (w[static_cast<size_t>(base - 1)] == 's' ||
                       w[static_cast<size_t>(base - 1)] == 't') &&
          measure(w, base) > 1)
        w.resize(static_cast<size_t>(base));
      return;
    }
    if (measure(w, base) > 1) w.resize(static_cast<size_t>(base));
    return;
  }
}

void step5a(std::string& w) {
  if (!ends_with(w, "e")) return;
  const int base = static_cast<int>(w.size()) - 1;
  const int m = measure(w, base);
  if (m > 1) {
    w.pop_back();
  } else if (m == 1) {
    std::string stem = w.substr(0, static_cast<size_t>(base));
    if (!ends_cvc(stem)) w.pop_back();
  }
}

void step5b(std::string& w) {
  if (w.back() == 'l' && ends_double_consonant(w) &&
      measure(w, static_cast<int>(w.size())) > 1)
    w.pop_back();
}

}  // namespace

std::string porter_stem(std::string_view word) {
  std::string w(word);
  if (w.size() <= 2) return w;
  step1a(w);
  if (w.size() > 2) step1b(w);
  if (w.size() > 2) step1c(w);
  if (w.size() > 2) step2(w);
  if (w.size() > 2) step3(w);
  if (w.size() > 2) step4(w);
  if (w.size() > 2) step5a(w);
  if (w.size() > 2) step5b(w);
  return w;
}

}  // namespace senta
