#include <algorithm>
#include <cctype>

#include "lexres/dissector.hpp"
#include "word_class.hpp"

namespace lexres {

std::string_view to_string(DiscourseLevel level) {
  switch (level) {
    case DiscourseLevel::Primitive: return "primitive";
    case DiscourseLevel::Compound: return "compound";
    case DiscourseLevel::Complex: return "complex";
  }
  return "?";
}

namespace {

std::vector<std::string_view> whitespace_words(std::string_view text) {
  std::vector<std::string_view> words;
  std::size_t i = 0;
  auto space = [](char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; };
  while (i < text.size()) {
    while (i < text.size() && space(text[i])) ++i;
    std::size_t j = i;
    while (j < text.size() && !space(text[j])) ++j;
    if (j > i) words.push_back(text.substr(i, j - i));
    i = j;
  }
  return words;
}

std::string strip_brackets(std::string_view w) {
  std::string out;
  std::copy_if(w.begin(), w.end(), std::back_inserter(out),
               [](char c) { return c != '[' && c != ']'; });
  return out;
}

bool ends_sentence(std::string_view w) {
  while (!w.empty() && (w.back() == '"' || w.back() == ')')) w.remove_suffix(1);
  return !w.empty() && detail::is_terminator(w.substr(w.size() - 1));
}

bool opens_sentence(std::string_view w) {
  const auto first = w.find_first_not_of("[(\"");
  return first != std::string_view::npos && detail::is_upper(w[first]);
}

}  // namespace

std::vector<std::string> normalized_tokens(std::string_view text) {
  std::vector<std::string> out;
  for (auto w : whitespace_words(text)) {
    auto s = strip_brackets(w);
    if (!s.empty()) out.push_back(std::move(s));
  }
  return out;
}

std::vector<Discourse> split_discourses(std::string_view text, const DissectorOptions& options) {
  const auto words = whitespace_words(text);

  std::vector<std::vector<std::string>> groups;
  std::vector<std::string> current;
  auto flush = [&] {
    if (!current.empty()) groups.push_back(std::move(current));
    current.clear();
  };

  int depth = 0;
  for (std::size_t i = 0; i < words.size(); ++i) {
    const auto w = words[i];
    if (w.front() == '[') flush();
    auto stripped = strip_brackets(w);
    if (!stripped.empty()) {
      depth += static_cast<int>(std::count(stripped.begin(), stripped.end(), '('));
      depth -= static_cast<int>(std::count(stripped.begin(), stripped.end(), ')'));
      current.push_back(stripped);
    }
    if (w.find(']') != std::string_view::npos) {
      flush();
      depth = 0;
    } else if (depth <= 0 && !stripped.empty() && ends_sentence(stripped) &&
               (i + 1 == words.size() || opens_sentence(words[i + 1]))) {
      flush();
      depth = 0;
    }
  }
  flush();
  if (groups.empty()) throw EmptyInput();

  std::vector<Discourse> discourses;
  for (std::size_t k = 0; k < groups.size(); ++k) {
    Discourse d;
    for (std::size_t j = 0; j < groups[k].size(); ++j) {
      if (j) d.text += ' ';
      d.text += groups[k][j];
    }
    d.ordinal = k + 1;
    d.level = DiscourseLevel::Complex;  // provisional; refined below
    const auto result = dissect(d, options);
    if (result.finite_clauses >= 2) {
      d.level = DiscourseLevel::Compound;
    } else if (result.primitives.size() == 1) {
      d.level = DiscourseLevel::Primitive;
    }
    discourses.push_back(std::move(d));
  }
  return discourses;
}

}  // namespace lexres
