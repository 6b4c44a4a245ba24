#include <cctype>

#include "lexres/dissector.hpp"
#include "word_class.hpp"

namespace lexres {

using namespace detail;

namespace {

void reindex(std::vector<Token>& tokens) {
  for (std::size_t i = 0; i < tokens.size(); ++i) tokens[i].index = i;
}

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

constexpr std::string_view kLeadingPunct = "(\"[";
constexpr std::string_view kTrailingPunct = ",.;:?!)\"]";

void push(std::vector<Token>& out, std::string surface, std::size_t begin, std::size_t end,
          bool possessive = false) {
  Token t;
  t.surface = std::move(surface);
  t.begin = begin;
  t.end = end;
  t.trailing_possessive = possessive;
  out.push_back(std::move(t));
}

}  // namespace

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && is_space(text[i])) ++i;
    if (i >= text.size()) break;
    std::size_t j = i;
    while (j < text.size() && !is_space(text[j])) ++j;

    std::size_t b = i;
    std::size_t e = j;
    // Brackets delimit discourses and are not tokens.
    for (; b < e && kLeadingPunct.find(text[b]) != std::string_view::npos; ++b) {
      if (text[b] != '[') push(tokens, std::string(1, text[b]), b, b + 1);
    }
    std::vector<Token> trailing;
    while (e > b && kTrailingPunct.find(text[e - 1]) != std::string_view::npos) {
      --e;
      if (text[e] != ']') push(trailing, std::string(1, text[e]), e, e + 1);
    }
    if (b < e) {
      auto word = text.substr(b, e - b);
      bool possessive = false;
      if (word.size() > 2 && (word.ends_with("'s") || word.ends_with("'S"))) {
        word.remove_suffix(2);
        possessive = true;
      } else if (word.size() > 4 && word.ends_with("’s")) {
        word.remove_suffix(4);
        possessive = true;
      }
      push(tokens, std::string(word), b, e, possessive);
    }
    tokens.insert(tokens.end(), trailing.rbegin(), trailing.rend());
    i = j;
  }
  reindex(tokens);
  return tokens;
}

namespace {

bool is_expansion_connector(std::string_view w) {
  return w == "of" || w == "on" || w == "the" || w == "and";
}

// Capitalised word that may sit inside an abbreviation's expansion.
bool is_expansion_word(const Token& t) {
  return starts_upper(t.surface) && !is_determiner(t.surface) && !is_punctuation(t.surface) &&
         !t.trailing_possessive;
}

}  // namespace

BoundTokens bind_abbreviations(std::vector<Token> tokens) {
  BoundTokens out;
  std::size_t i = 0;
  while (i < tokens.size()) {
    const bool pattern = tokens[i].surface == "(" && i + 2 < tokens.size() &&
                         tokens[i + 2].surface == ")" &&
                         is_abbreviation_form(tokens[i + 1].surface) &&
                         !tokens[i + 1].trailing_possessive;
    if (!pattern || i == 0 || !is_expansion_word(tokens[i - 1])) {
      out.tokens.push_back(tokens[i]);
      ++i;
      continue;
    }

    // Walk back over capitalised words; connectors only when a capitalised word precedes them.
    std::size_t start = i - 1;
    for (;;) {
      if (start == 0) break;
      std::size_t k = start - 1;
      if (is_expansion_word(tokens[k])) {
        start = k;
        continue;
      }
      while (k > 0 && is_expansion_connector(tokens[k].surface)) --k;
      if (k < start - 1 && is_expansion_word(tokens[k]) &&
          !is_expansion_connector(tokens[k].surface)) {
        start = k;
        continue;
      }
      break;
    }

    // The expansion words were already copied to the output; take them back.
    const std::size_t np_len = i - start;
    AbbreviationBinding binding;
    binding.abbreviation = tokens[i + 1].surface;
    for (std::size_t k = start; k < i; ++k) binding.expansion_tokens.push_back(tokens[k].surface);
    binding.span_begin = tokens[start].begin;
    binding.span_end = tokens[i - 1].end;
    out.tokens.resize(out.tokens.size() - np_len);

    Token abbr = std::move(tokens[i + 1]);
    abbr.trailing_possessive = false;
    out.tokens.push_back(std::move(abbr));
    out.bindings.push_back(std::move(binding));
    i += 3;
  }
  reindex(out.tokens);
  return out;
}

namespace {

bool is_compound_part(const Token& t) {
  return is_title_word(t.surface) && !is_function_class(t.surface);
}

std::string normalize_segment(const std::string& s) { return s == "Programme" ? "Program" : s; }

}  // namespace

std::vector<Token> join_compounds(std::vector<Token> tokens) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < tokens.size()) {
    if (!is_compound_part(tokens[i])) {
      out.push_back(std::move(tokens[i]));
      ++i;
      continue;
    }
    std::vector<std::size_t> run{i};
    bool used_of = false;
    std::size_t j = i + 1;
    auto closed = [&] { return tokens[run.back()].trailing_possessive; };
    while (j < tokens.size() && !closed()) {
      if (is_compound_part(tokens[j])) {
        run.push_back(j++);
      } else if (!used_of && tokens[j].surface == "of" && j + 1 < tokens.size() &&
                 is_compound_part(tokens[j + 1])) {
        run.push_back(j);
        run.push_back(j + 1);
        used_of = true;
        j += 2;
      } else {
        break;
      }
    }
    while (j < tokens.size() && !closed() && is_number(tokens[j].surface)) run.push_back(j++);

    if (run.size() < 2) {
      out.push_back(std::move(tokens[i]));
      ++i;
      continue;
    }
    Token compound;
    compound.is_compound = true;
    compound.begin = tokens[run.front()].begin;
    compound.end = tokens[run.back()].end;
    compound.trailing_possessive = tokens[run.back()].trailing_possessive;
    for (std::size_t k = 0; k < run.size(); ++k) {
      if (k) compound.surface += '_';
      compound.surface += normalize_segment(tokens[run[k]].surface);
    }
    out.push_back(std::move(compound));
    i = j;
  }
  reindex(out);
  return out;
}

}  // namespace lexres
