#pragma once

#include <algorithm>
#include <array>
#include <cctype>
#include <string>
#include <string_view>

namespace lexres::detail {

inline bool is_upper(char c) { return std::isupper(static_cast<unsigned char>(c)) != 0; }
inline bool is_lower(char c) { return std::islower(static_cast<unsigned char>(c)) != 0; }
inline bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }
inline bool is_alpha(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }

inline std::string lower(std::string_view s) {
  std::string out(s);
  for (auto& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

template <std::size_t N>
bool in_set(const std::array<std::string_view, N>& set, std::string_view word) {
  const auto w = lower(word);
  return std::find(set.begin(), set.end(), w) != set.end();
}

inline constexpr std::array<std::string_view, 13> kDeterminers = {
    "the", "a", "an", "this", "that", "these", "those", "its", "their", "his", "her", "our", "my"};

inline constexpr std::array<std::string_view, 19> kAuxiliaries = {
    "has", "have", "had", "will", "would", "shall", "should", "can", "could", "may",
    "might", "must", "is", "are", "was", "were", "do", "does", "did"};

inline constexpr std::array<std::string_view, 23> kPrepositions = {
    "of", "on", "from", "in", "to", "for", "with", "by", "at", "into", "about", "over",
    "under", "through", "during", "after", "before", "against", "between", "among",
    "without", "within", "across"};

inline constexpr std::array<std::string_view, 6> kCoordinators = {"and", "or", "but",
                                                                  "nor", "yet", "so"};

inline bool is_determiner(std::string_view w) { return in_set(kDeterminers, w); }
inline bool is_auxiliary(std::string_view w) { return in_set(kAuxiliaries, w); }
inline bool is_preposition(std::string_view w) { return in_set(kPrepositions, w); }
inline bool is_coordinator(std::string_view w) { return in_set(kCoordinators, w); }

inline bool is_punctuation(std::string_view w) {
  return w.size() == 1 && std::string_view(",.;:?!()\"").find(w[0]) != std::string_view::npos;
}

inline bool is_terminator(std::string_view w) { return w == "." || w == "?" || w == "!"; }

inline bool is_number(std::string_view w) {
  return !w.empty() && std::all_of(w.begin(), w.end(), is_digit);
}

// 2+ characters, uppercase letters or digits only, at least one letter.
inline bool is_abbreviation_form(std::string_view w) {
  if (w.size() < 2) return false;
  bool letter = false;
  for (char c : w) {
    if (is_upper(c)) {
      letter = true;
    } else if (!is_digit(c)) {
      return false;
    }
  }
  return letter;
}

inline bool starts_upper(std::string_view w) { return !w.empty() && is_upper(w.front()); }

// Title-case word such as "Government": uppercase first, at least one lowercase letter.
inline bool is_title_word(std::string_view w) {
  return starts_upper(w) && std::any_of(w.begin() + 1, w.end(), is_lower) &&
         std::all_of(w.begin(), w.end(), [](char c) { return is_alpha(c) || c == '-'; });
}

inline bool is_function_class(std::string_view w) {
  return is_determiner(w) || is_auxiliary(w) || is_preposition(w) || is_coordinator(w);
}

inline bool is_content_word(std::string_view w) {
  return !w.empty() && !is_punctuation(w) && !is_function_class(w);
}

inline bool is_gerund(std::string_view w) {
  return w.size() > 4 && is_lower(w.front()) && w.substr(w.size() - 3) == "ing";
}

inline std::string capitalize(std::string s) {
  if (!s.empty()) s.front() = static_cast<char>(std::toupper(static_cast<unsigned char>(s.front())));
  return s;
}

}  // namespace lexres::detail
