#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "lexres/timestamp.hpp"

namespace lexres {

enum class EntryKind { Name, Abbreviation, CommonWord };

std::string_view to_string(EntryKind kind);

struct LexiconEntry {
  std::string surface;
  EntryKind kind = EntryKind::CommonWord;
  // Only abbreviations carry an expansion; an abbreviation may also have none.
  std::optional<std::vector<std::string>> expansion;
  Timestamp added_at{};
  Timestamp last_used_at{};
  long long use_count = 1;

  static LexiconEntry name(std::string surface, Timestamp now);
  static LexiconEntry abbreviation(std::string surface,
                                   std::optional<std::vector<std::string>> expansion,
                                   Timestamp now);
  static LexiconEntry common(std::string surface, Timestamp now);

  friend bool operator==(const LexiconEntry&, const LexiconEntry&) = default;
};

class LexiconError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DuplicateSurface : public LexiconError {
 public:
  explicit DuplicateSurface(const std::string& surface);
};

class UnknownSurface : public LexiconError {
 public:
  explicit UnknownSurface(const std::string& surface);
};

// An entry that breaks the LexiconEntry invariants.
class InvalidEntry : public LexiconError {
 public:
  using LexiconError::LexiconError;
};

class IoFailure : public LexiconError {
 public:
  using LexiconError::LexiconError;
};

class FormatError : public LexiconError {
 public:
  FormatError(std::size_t line, std::string reason);

  std::size_t line() const noexcept { return line_; }
  const std::string& reason() const noexcept { return reason_; }

 private:
  std::size_t line_;
  std::string reason_;
};

// Throws InvalidEntry when `entry` violates one of its invariants.
void check_entry(const LexiconEntry& entry);

// Result of validate_expansion: valid iff no word is unknown.
struct ExpansionVerdict {
  std::vector<std::string> unknown_words;

  bool valid() const noexcept { return unknown_words.empty(); }
};

struct LexiconStats {
  std::size_t names = 0;
  std::size_t abbreviations = 0;
  std::size_t common = 0;

  std::size_t total() const noexcept { return names + abbreviations + common; }
  friend bool operator==(const LexiconStats&, const LexiconStats&) = default;
};

/// Store of known lexical units keyed by exact surface.
///
/// Names and abbreviations are case-sensitive. Common words are additionally
/// reachable case-insensitively, which is what expansion validation and the
/// lowercase lookup fallback rely on.
///
/// Not internally synchronised: concurrent const access is safe, mutation must
/// be serialised by the caller.
class Lexicon {
 public:
  using EntryMap = std::map<std::string, LexiconEntry, std::less<>>;

  std::optional<LexiconEntry> lookup(std::string_view surface) const;
  bool contains(std::string_view surface) const;

  // Throws DuplicateSurface or InvalidEntry.
  void insert(LexiconEntry entry);

  // Throws UnknownSurface.
  void record_use(std::string_view surface, Timestamp now);

  // Every word must match a CommonWord or Name entry case-insensitively.
  ExpansionVerdict validate_expansion(std::span<const std::string> words) const;

  /// Removes non-CommonWord entries idle for longer than `ttl` whose use count
  /// is at most `min_uses`. Returns the removed surfaces in sorted order.
  std::vector<std::string> evict_stale(Timestamp now, Duration ttl, long long min_uses);

  LexiconStats stats() const;

  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }
  const EntryMap& entries() const noexcept { return entries_; }

  friend bool operator==(const Lexicon& a, const Lexicon& b) { return a.entries_ == b.entries_; }

 private:
  using FoldIndex = std::map<std::string, std::set<std::string>, std::less<>>;

  FoldIndex* index_for(EntryKind kind);
  void unindex(const LexiconEntry& entry);

  EntryMap entries_;
  FoldIndex common_fold_;
  FoldIndex name_fold_;
};

std::string fold_case(std::string_view s);

// Lexicon file, v1. save() writes to a sibling temp file and renames it over `path`.
void write_lexicon(const Lexicon& lexicon, std::ostream& out);
Lexicon read_lexicon(std::istream& in);
void save(const Lexicon& lexicon, const std::filesystem::path& path);
Lexicon load(const std::filesystem::path& path);

}  // namespace lexres
