#include "lexres/decision_providers.hpp"

#include <istream>
#include <ostream>
#include <sstream>

#include "word_class.hpp"

namespace lexres {

Decision ScriptedDecisionProvider::decide(std::string_view surface, const PrimitiveDiscourse&,
                                          Classification) {
  consulted_.emplace_back(surface);
  if (auto it = answers_.find(surface); it != answers_.end()) return it->second;
  return fallback_;
}

namespace {

std::vector<std::string> words_of(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> words;
  for (std::string w; in >> w;) words.push_back(w);
  return words;
}

}  // namespace

Decision InteractiveDecisionProvider::decide(std::string_view surface,
                                             const PrimitiveDiscourse& context,
                                             Classification) {
  std::string line;
  for (;;) {
    out_ << "unknown noun \"" << surface << "\" in \"" << render(context)
         << "\" — (n)ame / (a)bbreviation / (s)kip? " << std::flush;
    if (!std::getline(in_, line)) return Decision::skip();
    const auto answer = detail::lower(line);
    if (answer == "n" || answer == "name") return Decision::name();
    if (answer == "s" || answer == "skip") return Decision::skip();
    if (answer == "a" || answer == "abbreviation") break;
    out_ << "please answer n, a or s\n";
  }

  std::vector<std::string> expansion;
  for (int attempt = 0; attempt < 2; ++attempt) {
    out_ << "expansion for \"" << surface << "\" (blank for none): " << std::flush;
    if (!std::getline(in_, line)) return Decision::skip();
    expansion = words_of(line);
    if (expansion.empty()) return Decision::abbreviation();
    const auto verdict = lexicon_.validate_expansion(expansion);
    if (verdict.valid()) break;
    out_ << "not in the lexicon:";
    for (const auto& w : verdict.unknown_words) out_ << ' ' << w;
    out_ << '\n';
  }
  return Decision::abbreviation(std::move(expansion));
}

}  // namespace lexres
