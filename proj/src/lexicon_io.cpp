#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <system_error>
#include <unistd.h>

#include "lexres/lexicon.hpp"

namespace lexres {

namespace {

constexpr std::string_view kHeader = "#lexicon v1";

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    auto pos = s.find(sep, start);
    out.push_back(s.substr(start, pos - start));
    if (pos == std::string_view::npos) return out;
    start = pos + 1;
  }
}

EntryKind parse_kind(std::string_view field, std::size_t line) {
  if (field == "NAME") return EntryKind::Name;
  if (field == "ABBR") return EntryKind::Abbreviation;
  if (field == "COMMON") return EntryKind::CommonWord;
  throw FormatError(line, "unknown kind '" + std::string(field) + "'");
}

Timestamp parse_time(std::string_view field, std::size_t line, const char* what) {
  auto t = parse_iso8601(field);
  if (!t) throw FormatError(line, std::string("bad ") + what + " '" + std::string(field) + "'");
  return *t;
}

LexiconEntry parse_line(std::string_view text, std::size_t line) {
  const auto fields = split(text, '\t');
  if (fields.size() != 6) {
    throw FormatError(line, "expected 6 tab-separated fields, got " + std::to_string(fields.size()));
  }
  LexiconEntry e;
  e.surface = std::string(fields[0]);
  e.kind = parse_kind(fields[1], line);
  if (fields[2] != "-") {
    std::vector<std::string> words;
    for (auto w : split(fields[2], '_')) words.emplace_back(w);
    e.expansion = std::move(words);
  }
  e.added_at = parse_time(fields[3], line, "added_at");
  e.last_used_at = parse_time(fields[4], line, "last_used_at");

  const auto count = fields[5];
  auto [ptr, ec] = std::from_chars(count.data(), count.data() + count.size(), e.use_count);
  if (count.empty() || ec != std::errc{} || ptr != count.data() + count.size()) {
    throw FormatError(line, "bad use_count '" + std::string(count) + "'");
  }
  try {
    check_entry(e);
  } catch (const InvalidEntry& err) {
    throw FormatError(line, err.what());
  }
  return e;
}

}  // namespace

void write_lexicon(const Lexicon& lexicon, std::ostream& out) {
  out << kHeader << '\n';
  for (const auto& [surface, e] : lexicon.entries()) {
    out << surface << '\t' << to_string(e.kind) << '\t';
    if (e.expansion) {
      for (std::size_t i = 0; i < e.expansion->size(); ++i) {
        if (i) out << '_';
        out << (*e.expansion)[i];
      }
    } else {
      out << '-';
    }
    out << '\t' << format_iso8601(e.added_at) << '\t' << format_iso8601(e.last_used_at) << '\t'
        << e.use_count << '\n';
  }
}

Lexicon read_lexicon(std::istream& in) {
  Lexicon lexicon;
  std::string text;
  std::size_t line = 0;
  if (!std::getline(in, text) || text != kHeader) {
    throw FormatError(1, "missing '#lexicon v1' header");
  }
  ++line;
  while (std::getline(in, text)) {
    ++line;
    if (text.empty() || text.front() == '#') continue;
    auto entry = parse_line(text, line);
    try {
      lexicon.insert(std::move(entry));
    } catch (const DuplicateSurface& err) {
      throw FormatError(line, err.what());
    }
  }
  return lexicon;
}

void save(const Lexicon& lexicon, const std::filesystem::path& path) {
  auto tmp = path;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoFailure("cannot write " + tmp.string());
    write_lexicon(lexicon, out);
    out.flush();
    if (!out) {
      std::error_code ignored;
      std::filesystem::remove(tmp, ignored);
      throw IoFailure("write failed for " + tmp.string());
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::error_code ignored;
    std::filesystem::remove(tmp, ignored);
    throw IoFailure("cannot replace " + path.string() + ": " + ec.message());
  }
}

Lexicon load(const std::filesystem::path& path) {
  std::error_code ec;
  if (!std::filesystem::is_regular_file(path, ec)) {
    throw IoFailure("not a readable lexicon file: " + path.string());
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoFailure("cannot open " + path.string());
  return read_lexicon(in);
}

}  // namespace lexres
