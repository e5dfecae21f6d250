// Appends stemmed duplicates to a lexicon TSV so that stem-reduced corpus
// tokens still hit the lexicon. The stemmer in the core library is the
// source of truth; scripts/gen_lexicon.py only emits surface forms.
//
// Usage: lexicon_stems <in.tsv> <out.tsv>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include "senta/textpipe.hpp"

int main(int argc, char** argv) {
  if (argc != 3) {
    std::fprintf(stderr, "usage: lexicon_stems <in.tsv> <out.tsv>\n");
    return 2;
  }
  std::ifstream in(argv[1]);
  if (!in) {
    std::fprintf(stderr, "cannot open %s\n", argv[1]);
    return 2;
  }

  std::map<std::string, std::string> surface;  // token -> full row
  std::string header;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line[0] == '#') {
      header += line + "\n";
      continue;
    }
    const auto tab = line.find('\t');
    if (tab == std::string::npos) continue;
    surface[line.substr(0, tab)] = line;
  }

  std::map<std::string, std::string> stemmed;
  for (const auto& [token, row] : surface) {
    const std::string stem = senta::porter_stem(token);
    if (stem == token || surface.count(stem) || stemmed.count(stem)) continue;
    stemmed[stem] = stem + row.substr(token.size());
  }

  std::ofstream out(argv[2], std::ios::binary);
  if (!out) {
    std::fprintf(stderr, "cannot write %s\n", argv[2]);
    return 2;
  }
  out << header;
  for (const auto& [token, row] : surface) out << row << '\n';
  out << "# stem-reduced duplicates\n";
  for (const auto& [stem, row] : stemmed) out << row << '\n';
  std::cout << surface.size() << " surface + " << stemmed.size()
            << " stemmed rows\n";
  return 0;
}
