#include <ostream>
#include <sstream>

#include "lexres/resolver.hpp"

namespace lexres {

namespace {

void join(std::ostream& out, const std::vector<std::string>& words, char sep) {
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (i) out << sep;
    out << words[i];
  }
}

}  // namespace

void write_report_tsv(const ResolutionReport& report, std::ostream& out) {
  out << "#names\n";
  for (const auto& n : report.inserted_names) out << n << '\n';

  out << "#abbreviations\n";
  for (const auto& a : report.inserted_abbreviations) {
    out << a.surface << '\t';
    if (a.expansion) {
      join(out, *a.expansion, '_');
    } else {
      out << '-';
    }
    out << '\n';
  }

  out << "#rejections\n";
  for (const auto& r : report.rejected_expansions) {
    out << r.abbreviation << '\t';
    join(out, r.expansion, '_');
    out << '\t';
    join(out, r.unknown_words, '_');
    out << '\n';
  }

  out << "#skipped\n";
  for (const auto& s : report.skipped) out << s << '\n';
}

std::string summarize(const ResolutionReport& report) {
  const auto counts = report_counts(report);
  std::ostringstream out;
  out << "inserted names=" << counts.names << " abbreviations=" << counts.abbreviations
      << " rejected=" << report.rejected_expansions.size() << " skipped=" << report.skipped.size()
      << " lookups=" << report.lookups;
  return out.str();
}

}  // namespace lexres
