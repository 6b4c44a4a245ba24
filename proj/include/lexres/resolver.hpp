#pragma once

#include <cstddef>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lexres/dissector.hpp"
#include "lexres/lexicon.hpp"

namespace lexres {

enum class Classification { Abbreviation, Name, Unknown };

std::string_view to_string(Classification c);

// Shape-only test on a candidate noun; never consults a lexicon.
Classification classify(std::string_view surface);

struct Decision {
  enum class Kind { AcceptAsName, AcceptAsAbbreviation, Skip };

  Kind kind = Kind::Skip;
  // AcceptAsAbbreviation only. Empty means an abbreviation without a known expansion.
  std::vector<std::string> expansion;

  static Decision name() { return {Kind::AcceptAsName, {}}; }
  static Decision abbreviation(std::vector<std::string> expansion = {}) {
    return {Kind::AcceptAsAbbreviation, std::move(expansion)};
  }
  static Decision skip() { return {Kind::Skip, {}}; }
};

// Consulted whenever the resolver cannot settle an unknown noun on its own.
class DecisionProvider {
 public:
  virtual ~DecisionProvider() = default;
  virtual Decision decide(std::string_view surface, const PrimitiveDiscourse& context,
                          Classification suggested) = 0;
};

struct ResolutionReport {
  struct Abbreviation {
    std::string surface;
    std::optional<std::vector<std::string>> expansion;
  };
  struct Rejection {
    std::string abbreviation;
    std::vector<std::string> expansion;
    std::vector<std::string> unknown_words;
  };

  std::vector<std::string> inserted_names;
  std::vector<Abbreviation> inserted_abbreviations;
  std::vector<Rejection> rejected_expansions;
  std::vector<std::string> skipped;
  std::size_t lookups = 0;
};

struct ReportCounts {
  std::size_t names = 0;
  std::size_t abbreviations = 0;

  friend bool operator==(const ReportCounts&, const ReportCounts&) = default;
};

ReportCounts report_counts(const ResolutionReport& report);

/// Walks the noun chunks of `primitives` in order and brings `lexicon` up to date.
///
/// Known nouns get their use recorded. Unknown ones are classified: names are
/// inserted, abbreviations are inserted with the expansion from `bindings` when
/// it validates, and everything else goes to `provider`. Each distinct surface
/// is handled once per call.
ResolutionReport resolve(std::span<const PrimitiveDiscourse> primitives,
                         std::span<const AbbreviationBinding> bindings, Lexicon& lexicon,
                         DecisionProvider& provider, Timestamp now);

// Report TSV: `#names`, `#abbreviations`, `#rejections`, `#skipped` sections.
void write_report_tsv(const ResolutionReport& report, std::ostream& out);

// One-line summary for the terminal.
std::string summarize(const ResolutionReport& report);

}  // namespace lexres
