// One line per acceptance criterion; nonzero exit if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "lexres/cli.hpp"
#include "lexres/decision_providers.hpp"
#include "lexres/dissector.hpp"
#include "lexres/lexicon.hpp"
#include "lexres/resolver.hpp"
#include "lexres/seed.hpp"
#include "support/fragment.hpp"
#include "support/properties.hpp"
#include "support/temp_dir.hpp"

namespace {

using namespace lexres;
using namespace lexres::testing;
using Clock = std::chrono::steady_clock;

constexpr double kRowsBudgetSeconds = 1.0;
constexpr double kPropertyBudgetSeconds = 30.0;
constexpr int kRoundTrips = 100;

const Timestamp kT0 = *parse_iso8601("2009-03-01T00:00:00Z");

int failures = 0;

void report(int id, const char* name, bool pass, const std::string& detail) {
  std::printf("[%s] %d %s: %s\n", pass ? "PASS" : "FAIL", id, name, detail.c_str());
  if (!pass) ++failures;
}

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string squeeze(const std::string& s) {
  std::istringstream in(s);
  std::string out;
  for (std::string w; in >> w;) out += (out.empty() ? "" : " ") + w;
  return out;
}

std::vector<std::pair<std::string, std::string>> normalized(Rows rows) {
  for (auto& [p, g] : rows) {
    p = squeeze(p);
    g = squeeze(g);
  }
  std::sort(rows.begin(), rows.end());
  return rows;
}

std::string describe_diff(const Rows& got, const Rows& want) {
  std::string d;
  for (const auto& r : want) {
    if (std::find(got.begin(), got.end(), r) == got.end()) d += " missing{" + r.first + "}";
  }
  for (const auto& r : got) {
    if (std::find(want.begin(), want.end(), r) == want.end()) d += " extra{" + r.first + "}";
  }
  return d;
}

void first_rows() {
  const auto start = Clock::now();
  const auto r = dissect(Discourse{kFirstDiscourse});
  Rows rows;
  for (const auto& p : r.primitives) rows.emplace_back(render(p), render(generalize(p)));
  const double t = seconds_since(start);
  const auto got = normalized(rows);
  const auto want = normalized(kFirstRows);
  const bool ok = got == want && t < kRowsBudgetSeconds;
  report(1, "first discourse rows", ok,
         std::to_string(got.size()) + "/6 rows, " + std::to_string(t) + " s" +
             describe_diff(got, want));
}

void second_rows() {
  const auto start = Clock::now();
  const auto r = dissect_text(kFragment);
  Rows rows;
  bool flagged = false;
  for (const auto& p : r.primitives) {
    if (p.source_ordinal != 2) continue;
    rows.emplace_back(render(p), render(generalize(p)));
    flagged |= p.anaphoric && render(p) == "Project of IPEC";
  }
  const bool diagnosed = std::any_of(r.diagnostics.begin(), r.diagnostics.end(), [](auto& d) {
    return d.kind == Diagnostic::Kind::Anaphora && d.source_ordinal == 2;
  });
  const double t = seconds_since(start);
  const auto got = normalized(rows);
  const auto want = normalized(kSecondRows);
  const bool ok = got == want && flagged && diagnosed && t < kRowsBudgetSeconds;
  report(2, "second discourse rows", ok,
         std::to_string(got.size()) + "/8 rows, anaphora " +
             (flagged && diagnosed ? "flagged" : "NOT flagged") + ", " + std::to_string(t) +
             " s" + describe_diff(got, want));
}

void rejection_rule() {
  auto lex = seeded_lexicon(default_seed_words(), kT0);
  const std::vector<std::string> nonsense{"Paksin", "Skidn", "Odind"};
  const std::vector<std::string> real{"Pakistan", "State", "Oil"};
  const auto bad = lex.validate_expansion(nonsense);
  const bool before = !lex.validate_expansion(real).valid();
  lex.insert(LexiconEntry::name("Pakistan", kT0));
  const auto good = lex.validate_expansion(real);
  const bool ok = !bad.valid() && bad.unknown_words == nonsense && good.valid();
  report(3, "rejection rule", ok,
         "nonsense unknown=" + std::to_string(bad.unknown_words.size()) + "/3, real valid=" +
             (good.valid() ? "yes" : "no") + (before ? " (after adding Pakistan)" : ""));
}

int cli(std::vector<std::string> args, std::string* out = nullptr) {
  args.insert(args.begin(), "lexres");
  std::istringstream in;
  std::ostringstream o, e;
  const int code = cli::run(args, {in, o, e, nullptr});
  if (out) *out = o.str();
  return code;
}

void month_rule() {
  TempDir dir;
  const auto path = dir / "lexicon.tsv";
  Lexicon lex;
  lex.insert(LexiconEntry::name("Karimo", kT0));
  auto busy = LexiconEntry::name("Ledavu", kT0);
  busy.use_count = 5;
  lex.insert(busy);
  save(lex, path);

  const auto now = format_iso8601(kT0 + days(31));
  std::string first, second;
  const int c1 = cli({"evict", "--lexicon", path.string(), "--now", now}, &first);
  const int c2 = cli({"evict", "--lexicon", path.string(), "--now", now}, &second);
  const auto after = load(path);
  const bool ok = c1 == 0 && c2 == 0 && first == "Karimo\n" && second.empty() &&
                  !after.contains("Karimo") && after.contains("Ledavu");
  report(4, "month rule", ok,
         "evicted {" + squeeze(first) + "} at +31 days, use_count 5 entry " +
             (after.contains("Ledavu") ? "survived" : "evicted"));
}

void fragment_resolution() {
  auto lex = seeded_lexicon(default_seed_words(), kT0);
  const auto r = dissect_text(kFragment);
  BatchDecisionProvider skip(Decision::skip());
  const auto first = resolve(r.primitives, r.bindings, lex, skip, kT0);
  const auto second = resolve(r.primitives, r.bindings, lex, skip, kT0 + days(1));

  std::vector<std::string> names = first.inserted_names;
  std::vector<std::string> abbrs;
  for (const auto& a : first.inserted_abbreviations) abbrs.push_back(a.surface);
  auto want_names = kFragmentNames;
  auto want_abbrs = kFragmentAbbreviations;
  for (auto* v : {&names, &abbrs, &want_names, &want_abbrs}) std::sort(v->begin(), v->end());

  const auto c2 = report_counts(second);
  const bool ok = abbrs == want_abbrs && names == want_names && c2 == ReportCounts{0, 0};
  report(5, "fragment resolution", ok,
         "abbreviations=" + std::to_string(abbrs.size()) + " names=" +
             std::to_string(names.size()) + ", rerun inserted " +
             std::to_string(c2.names + c2.abbreviations));
}

void property_suite() {
  const auto start = Clock::now();
  const auto results = all_properties();
  const double t = seconds_since(start);
  bool ok = t < kPropertyBudgetSeconds;
  std::string detail;
  int min_cases = 1 << 30;
  for (const auto& r : results) {
    ok &= r.ok();
    min_cases = std::min(min_cases, r.cases);
    if (!r.ok()) detail += " {" + r.name + ": " + r.first_failure + "}";
  }
  report(6, "property suite", ok,
         std::to_string(results.size()) + " properties, >=" + std::to_string(min_cases) +
             " cases each, " + std::to_string(t) + " s" + detail);
}

struct Corrupt {
  const char* text;
  std::size_t line;
};

void persistence() {
  TempDir dir;
  Gen g(7);
  int round_trips = 0;
  for (int i = 0; i < kRoundTrips; ++i) {
    const auto lex = random_lexicon(g);
    const auto path = dir / ("l" + std::to_string(i) + ".tsv");
    save(lex, path);
    round_trips += load(path) == lex;
  }

  const std::string ok_row = "ILO\tABBR\t-\t2009-03-01T00:00:00Z\t2009-03-01T00:00:00Z\t1\n";
  const std::vector<std::pair<std::string, std::size_t>> fixtures = {
      {"", 1},
      {"#lexicon v2\n", 1},
      {ok_row, 1},
      {"#lexicon v1\n" + ok_row + "Pakistan\tNAME\t-\t2009-03-01T00:00:00Z\t1\n", 3},
      {"#lexicon v1\n# c\n" + ok_row + "X\tVERB\t-\t2009-03-01T00:00:00Z\t2009-03-01T00:00:00Z\t1\n", 4},
      {"#lexicon v1\nX\tNAME\t-\tyesterday\t2009-03-01T00:00:00Z\t1\n", 2},
      {"#lexicon v1\n" + ok_row + "X\tNAME\t-\t2009-03-01T00:00:00Z\t2009-03-01T00:00:00Z\t-3\n", 3},
      {"#lexicon v1\n" + ok_row + ok_row, 3},
      {"#lexicon v1\n" + ok_row + "X\tCOMMON\tA_B\t2009-03-01T00:00:00Z\t2009-03-01T00:00:00Z\t1\n", 3},
  };
  int pinpointed = 0;
  std::string misses;
  for (std::size_t i = 0; i < fixtures.size(); ++i) {
    const auto path = dir / ("bad" + std::to_string(i) + ".tsv");
    std::ofstream(path, std::ios::binary) << fixtures[i].first;
    try {
      load(path);
      misses += " #" + std::to_string(i) + " accepted";
    } catch (const FormatError& e) {
      if (e.line() == fixtures[i].second) {
        ++pinpointed;
      } else {
        misses += " #" + std::to_string(i) + " line " + std::to_string(e.line());
      }
    }
  }
  const bool ok = round_trips == kRoundTrips && pinpointed == static_cast<int>(fixtures.size());
  report(7, "persistence", ok,
         std::to_string(round_trips) + "/" + std::to_string(kRoundTrips) + " round trips, " +
             std::to_string(pinpointed) + "/" + std::to_string(fixtures.size()) +
             " corrupt fixtures pinpointed" + misses);
}

}  // namespace

int main() {
  first_rows();
  second_rows();
  rejection_rule();
  month_rule();
  fragment_resolution();
  property_suite();
  persistence();
  std::printf("%s: %d failing\n", failures ? "FAILED" : "ALL PASSED", failures);
  return failures ? 1 : 0;
}
