#include "lexres/resolver.hpp"

#include <algorithm>
#include <set>

#include "word_class.hpp"

namespace lexres {

using namespace detail;

std::string_view to_string(Classification c) {
  switch (c) {
    case Classification::Abbreviation: return "abbreviation";
    case Classification::Name: return "name";
    case Classification::Unknown: return "unknown";
  }
  return "?";
}

namespace {

std::vector<std::string_view> segments(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    auto pos = s.find('_', start);
    out.push_back(s.substr(start, pos - start));
    if (pos == std::string_view::npos) return out;
    start = pos + 1;
  }
}

bool is_compound_joiner(std::string_view seg) {
  return seg == "of" || seg == "on" || seg == "the" || seg == "and";
}

}  // namespace

Classification classify(std::string_view surface) {
  const auto parts = segments(surface);
  if (std::any_of(parts.begin(), parts.end(), [](auto p) { return p.empty(); })) {
    return Classification::Unknown;
  }

  std::string joined;
  for (auto p : parts) joined += p;
  if (is_abbreviation_form(joined)) return Classification::Abbreviation;

  if (parts.size() == 1) {
    const bool title = surface.size() >= 2 && is_upper(surface[0]) &&
                       std::any_of(surface.begin() + 1, surface.end(), is_lower);
    return title ? Classification::Name : Classification::Unknown;
  }

  // Compound: every alphabetic segment capitalised, closed-class joiners allowed.
  bool any_alpha = false;
  for (auto p : parts) {
    if (!std::any_of(p.begin(), p.end(), is_alpha)) continue;
    any_alpha = true;
    if (is_compound_joiner(p)) continue;
    if (!is_upper(p.front())) return Classification::Unknown;
  }
  return any_alpha ? Classification::Name : Classification::Unknown;
}

ReportCounts report_counts(const ResolutionReport& report) {
  return {report.inserted_names.size(), report.inserted_abbreviations.size()};
}

namespace {

class Run {
 public:
  Run(std::span<const AbbreviationBinding> bindings, Lexicon& lexicon, DecisionProvider& provider,
      Timestamp now)
      : lexicon_(lexicon), provider_(provider), now_(now) {
    for (const auto& b : bindings) expansions_.emplace(b.abbreviation, b.expansion_tokens);
  }

  void visit(const std::string& surface, const PrimitiveDiscourse& context) {
    if (!visited_.insert(surface).second) return;
    ++report_.lookups;
    if (auto entry = lexicon_.lookup(surface)) {
      lexicon_.record_use(entry->surface, now_);
      return;
    }
    const auto cls = classify(surface);
    switch (cls) {
      case Classification::Abbreviation: {
        auto bound = expansions_.find(surface);
        if (bound == expansions_.end()) {
          insert_abbreviation(surface, std::nullopt);
          return;
        }
        if (try_expansion(surface, bound->second)) return;
        consult(surface, context, cls);
        return;
      }
      case Classification::Name:
        insert_name(surface);
        return;
      case Classification::Unknown:
        consult(surface, context, cls);
        return;
    }
  }

  ResolutionReport take() { return std::move(report_); }

 private:
  // Inserts on a valid expansion; otherwise records the rejection.
  bool try_expansion(const std::string& surface, const std::vector<std::string>& expansion) {
    auto verdict = lexicon_.validate_expansion(expansion);
    if (verdict.valid()) return insert_abbreviation(surface, expansion);
    report_.rejected_expansions.push_back({surface, expansion, std::move(verdict.unknown_words)});
    return false;
  }

  void consult(const std::string& surface, const PrimitiveDiscourse& context, Classification cls) {
    const auto decision = provider_.decide(surface, context, cls);
    bool inserted = false;
    switch (decision.kind) {
      case Decision::Kind::AcceptAsName:
        inserted = insert_name(surface);
        break;
      case Decision::Kind::AcceptAsAbbreviation:
        inserted = decision.expansion.empty() ? insert_abbreviation(surface, std::nullopt)
                                              : try_expansion(surface, decision.expansion);
        break;
      case Decision::Kind::Skip:
        break;
    }
    if (!inserted) report_.skipped.push_back(surface);
  }

  bool insert_name(const std::string& surface) {
    try {
      lexicon_.insert(LexiconEntry::name(surface, now_));
    } catch (const InvalidEntry&) {
      return false;
    }
    report_.inserted_names.push_back(surface);
    return true;
  }

  bool insert_abbreviation(const std::string& surface,
                           std::optional<std::vector<std::string>> expansion) {
    try {
      lexicon_.insert(LexiconEntry::abbreviation(surface, expansion, now_));
    } catch (const InvalidEntry&) {
      return false;
    }
    report_.inserted_abbreviations.push_back({surface, std::move(expansion)});
    return true;
  }

  Lexicon& lexicon_;
  DecisionProvider& provider_;
  Timestamp now_;
  std::map<std::string, std::vector<std::string>, std::less<>> expansions_;
  std::set<std::string, std::less<>> visited_;
  ResolutionReport report_;
};

}  // namespace

ResolutionReport resolve(std::span<const PrimitiveDiscourse> primitives,
                         std::span<const AbbreviationBinding> bindings, Lexicon& lexicon,
                         DecisionProvider& provider, Timestamp now) {
  Run run(bindings, lexicon, provider, now);
  for (const auto& p : primitives) {
    for (const auto& chunk : p.chunks) {
      const auto* cc = std::get_if<ContentChunk>(&chunk);
      if (cc && cc->role == ChunkRole::Noun) run.visit(cc->token.surface, p);
    }
  }
  return run.take();
}

}  // namespace lexres
