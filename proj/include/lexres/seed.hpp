#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "lexres/lexicon.hpp"

namespace lexres {

// The built-in CommonWord vocabulary, deduplicated, in file order.
std::vector<std::string> default_seed_words();

// Whitespace-separated words; lines whose first non-blank character is '#' are skipped.
std::vector<std::string> read_seed_words(std::istream& in);

// Lexicon holding one CommonWord per distinct word. Case-folded duplicates are dropped.
Lexicon seeded_lexicon(std::span<const std::string> words, Timestamp now);

}  // namespace lexres
