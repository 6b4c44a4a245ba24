#include "lexres/seed.hpp"

#include <istream>
#include <set>
#include <sstream>

namespace lexres {

namespace detail {
extern const std::string_view kSeedWordsText;
}

std::vector<std::string> read_seed_words(std::istream& in) {
  std::vector<std::string> words;
  std::set<std::string> seen;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream fields(line);
    std::string word;
    if (!(fields >> word) || word.front() == '#') continue;
    do {
      if (seen.insert(fold_case(word)).second) words.push_back(word);
    } while (fields >> word);
  }
  return words;
}

std::vector<std::string> default_seed_words() {
  std::istringstream in{std::string(detail::kSeedWordsText)};
  return read_seed_words(in);
}

Lexicon seeded_lexicon(std::span<const std::string> words, Timestamp now) {
  Lexicon lexicon;
  std::set<std::string> seen;
  for (const auto& w : words) {
    if (!seen.insert(fold_case(w)).second) continue;
    lexicon.insert(LexiconEntry::common(w, now));
  }
  return lexicon;
}

}  // namespace lexres
