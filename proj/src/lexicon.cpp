#include "lexres/lexicon.hpp"

#include <algorithm>
#include <cctype>

namespace lexres {

std::string_view to_string(EntryKind kind) {
  switch (kind) {
    case EntryKind::Name: return "NAME";
    case EntryKind::Abbreviation: return "ABBR";
    case EntryKind::CommonWord: return "COMMON";
  }
  return "?";
}

LexiconEntry LexiconEntry::name(std::string surface, Timestamp now) {
  return {std::move(surface), EntryKind::Name, std::nullopt, now, now, 1};
}

LexiconEntry LexiconEntry::abbreviation(std::string surface,
                                        std::optional<std::vector<std::string>> expansion,
                                        Timestamp now) {
  return {std::move(surface), EntryKind::Abbreviation, std::move(expansion), now, now, 1};
}

LexiconEntry LexiconEntry::common(std::string surface, Timestamp now) {
  return {std::move(surface), EntryKind::CommonWord, std::nullopt, now, now, 1};
}

DuplicateSurface::DuplicateSurface(const std::string& surface)
    : LexiconError("duplicate surface: " + surface) {}

UnknownSurface::UnknownSurface(const std::string& surface)
    : LexiconError("unknown surface: " + surface) {}

FormatError::FormatError(std::size_t line, std::string reason)
    : LexiconError("line " + std::to_string(line) + ": " + reason),
      line_(line),
      reason_(std::move(reason)) {}

std::string fold_case(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

namespace {

bool has_control_break(std::string_view s) {
  return s.find_first_of("\t\n\r") != std::string_view::npos;
}

}  // namespace

void check_entry(const LexiconEntry& entry) {
  if (entry.surface.empty()) throw InvalidEntry("empty surface");
  if (has_control_break(entry.surface)) {
    throw InvalidEntry("surface contains tab or newline: " + entry.surface);
  }
  // A leading '#' would read back as a comment line.
  if (entry.surface.front() == '#') throw InvalidEntry("surface starts with '#': " + entry.surface);
  if (entry.use_count < 1) throw InvalidEntry("use_count must be >= 1: " + entry.surface);
  if (entry.last_used_at < entry.added_at) {
    throw InvalidEntry("last_used_at precedes added_at: " + entry.surface);
  }
  if (entry.expansion) {
    if (entry.kind != EntryKind::Abbreviation) {
      throw InvalidEntry("expansion on non-abbreviation: " + entry.surface);
    }
    if (entry.expansion->empty()) throw InvalidEntry("empty expansion: " + entry.surface);
    for (const auto& w : *entry.expansion) {
      if (w.empty() || w == "-" || w.find('_') != std::string::npos || has_control_break(w)) {
        throw InvalidEntry("bad expansion word '" + w + "' for " + entry.surface);
      }
    }
  }
}

Lexicon::FoldIndex* Lexicon::index_for(EntryKind kind) {
  switch (kind) {
    case EntryKind::CommonWord: return &common_fold_;
    case EntryKind::Name: return &name_fold_;
    case EntryKind::Abbreviation: return nullptr;
  }
  return nullptr;
}

std::optional<LexiconEntry> Lexicon::lookup(std::string_view surface) const {
  if (auto it = entries_.find(surface); it != entries_.end()) return it->second;

  const bool single_lowercase_word =
      !surface.empty() && std::all_of(surface.begin(), surface.end(), [](unsigned char c) {
        return c != '_' && !std::isspace(c) && !std::isupper(c);
      });
  if (!single_lowercase_word) return std::nullopt;

  auto folded = common_fold_.find(fold_case(surface));
  if (folded == common_fold_.end() || folded->second.empty()) return std::nullopt;
  return entries_.find(*folded->second.begin())->second;
}

bool Lexicon::contains(std::string_view surface) const {
  return entries_.find(surface) != entries_.end();
}

void Lexicon::insert(LexiconEntry entry) {
  check_entry(entry);
  if (contains(entry.surface)) throw DuplicateSurface(entry.surface);
  if (auto* index = index_for(entry.kind)) (*index)[fold_case(entry.surface)].insert(entry.surface);
  auto key = entry.surface;
  entries_.emplace(std::move(key), std::move(entry));
}

void Lexicon::record_use(std::string_view surface, Timestamp now) {
  auto it = entries_.find(surface);
  if (it == entries_.end()) throw UnknownSurface(std::string(surface));
  auto& e = it->second;
  ++e.use_count;
  e.last_used_at = std::max(e.last_used_at, now);
}

ExpansionVerdict Lexicon::validate_expansion(std::span<const std::string> words) const {
  ExpansionVerdict verdict;
  for (const auto& w : words) {
    const auto key = fold_case(w);
    if (!common_fold_.contains(key) && !name_fold_.contains(key)) {
      verdict.unknown_words.push_back(w);
    }
  }
  return verdict;
}

void Lexicon::unindex(const LexiconEntry& entry) {
  auto* index = index_for(entry.kind);
  if (!index) return;
  auto it = index->find(fold_case(entry.surface));
  if (it == index->end()) return;
  it->second.erase(entry.surface);
  if (it->second.empty()) index->erase(it);
}

std::vector<std::string> Lexicon::evict_stale(Timestamp now, Duration ttl, long long min_uses) {
  if (ttl <= Duration::zero()) throw std::invalid_argument("ttl must be positive");
  if (min_uses < 1) throw std::invalid_argument("min_uses must be >= 1");

  std::vector<std::string> evicted;
  for (auto it = entries_.begin(); it != entries_.end();) {
    const auto& e = it->second;
    if (e.kind != EntryKind::CommonWord && now - e.last_used_at > ttl &&
        e.use_count <= min_uses) {
      evicted.push_back(e.surface);
      unindex(e);
      it = entries_.erase(it);
    } else {
      ++it;
    }
  }
  // entries_ is ordered, so `evicted` already is.
  return evicted;
}

LexiconStats Lexicon::stats() const {
  LexiconStats s;
  for (const auto& [_, e] : entries_) {
    switch (e.kind) {
      case EntryKind::Name: ++s.names; break;
      case EntryKind::Abbreviation: ++s.abbreviations; break;
      case EntryKind::CommonWord: ++s.common; break;
    }
  }
  return s;
}

}  // namespace lexres
