#include <stdexcept>

#include "lexres/dissector.hpp"

namespace lexres {

GeneralizedPattern generalize(const PrimitiveDiscourse& p) {
  GeneralizedPattern pattern;
  char next = 'A';
  for (const auto& chunk : p.chunks) {
    if (const auto* fw = std::get_if<FunctionWord>(&chunk)) {
      pattern.items.emplace_back(*fw);
      continue;
    }
    if (next > 'Z') throw std::length_error("primitive has more than 26 content chunks");
    pattern.binding.emplace(next, render_chunk(chunk));
    pattern.items.emplace_back(Variable{next});
    ++next;
  }
  return pattern;
}

std::string render(const GeneralizedPattern& pattern) {
  std::string out;
  for (const auto& item : pattern.items) {
    if (!out.empty()) out += ' ';
    if (const auto* v = std::get_if<Variable>(&item)) {
      out += v->letter;
    } else {
      out += std::get<FunctionWord>(item).word;
    }
  }
  return out;
}

std::string render_bound(const GeneralizedPattern& pattern) {
  std::string out;
  for (const auto& item : pattern.items) {
    if (!out.empty()) out += ' ';
    if (const auto* v = std::get_if<Variable>(&item)) {
      out += pattern.binding.at(v->letter);
    } else {
      out += std::get<FunctionWord>(item).word;
    }
  }
  return out;
}

}  // namespace lexres
