#pragma once

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace lexres {

struct Token {
  std::string surface;
  std::size_t index = 0;
  bool is_compound = false;
  // Source carried `'s`; the suffix is not part of `surface`.
  bool trailing_possessive = false;
  // Byte range in the discourse text the token came from.
  std::size_t begin = 0;
  std::size_t end = 0;

  friend bool operator==(const Token&, const Token&) = default;
};

enum class DiscourseLevel { Primitive, Compound, Complex };

std::string_view to_string(DiscourseLevel level);

struct Discourse {
  std::string text;
  DiscourseLevel level = DiscourseLevel::Complex;
  std::size_t ordinal = 1;  // 1-based position within the source text
};

// Role of a content chunk inside the clause it was taken from. Only nouns are
// candidates for lexicon resolution.
enum class ChunkRole { Noun, Modifier, Predicate };

struct ContentChunk {
  Token token;
  ChunkRole role = ChunkRole::Noun;
};

struct FunctionWord {
  std::string word;
};

using Chunk = std::variant<ContentChunk, FunctionWord>;

enum class RuleId {
  Possessive,              // R1
  Apposition,              // R2
  Attributive,             // R3
  SubjectVerb,             // R4
  InfinitivePurpose,       // R5, passive form
  Recipient,               // R5, "V-ed to the N"
  AbbreviationPremodifier, // R6
  ReducedRelative,         // R7
  Prepositional,           // R8
  Antecedent,              // definite back-reference, always flagged
};

std::string_view to_string(RuleId rule);

struct PrimitiveDiscourse {
  std::vector<Chunk> chunks;
  std::size_t source_ordinal = 1;
  RuleId rule = RuleId::SubjectVerb;
  // Set when the primitive depends on an earlier discourse.
  bool anaphoric = false;
};

// Space-joined chunks; compound tokens are wrapped in parentheses.
std::string render(const PrimitiveDiscourse& p);
std::string render_chunk(const Chunk& c);

struct AbbreviationBinding {
  std::string abbreviation;
  std::vector<std::string> expansion_tokens;
  // Byte range of the expanded noun phrase in the discourse text.
  std::size_t span_begin = 0;
  std::size_t span_end = 0;
};

struct Diagnostic {
  enum class Kind { NoRuleApplies, Anaphora };
  Kind kind = Kind::NoRuleApplies;
  std::size_t source_ordinal = 1;
  std::string span;
  std::string message;
};

struct DissectorOptions {
  // Words emitted as FunctionWord; every other emitted word is content.
  std::vector<std::string> closed_class = {"of", "has",  "is", "are",  "was", "will", "to",
                                           "the", "from", "on", "a", "an", "and"};
};

// Earlier-discourse facts consulted when a later discourse opens with a definite noun.
struct DiscourseContext {
  struct Antecedent {
    std::string object_head;  // case-folded
    Token subject;
  };
  std::vector<Antecedent> antecedents;
};

struct DissectionResult {
  std::vector<PrimitiveDiscourse> primitives;
  std::vector<AbbreviationBinding> bindings;
  std::vector<Diagnostic> diagnostics;
  // Clauses with a subject and a finite verb.
  std::size_t finite_clauses = 0;

  bool has_uncovered_spans() const;
};

class EmptyInput : public std::invalid_argument {
 public:
  EmptyInput() : std::invalid_argument("empty input text") {}
};

// Whitespace tokens of `text` with `[` and `]` removed; the unit of the partition property.
std::vector<std::string> normalized_tokens(std::string_view text);

// Throws EmptyInput when `text` has no tokens.
std::vector<Discourse> split_discourses(std::string_view text,
                                        const DissectorOptions& options = {});

// Word and punctuation tokens for one discourse.
std::vector<Token> tokenize(std::string_view text);

struct BoundTokens {
  std::vector<Token> tokens;
  std::vector<AbbreviationBinding> bindings;
};

// Rewrites `NP ( ABBR )` to the single token ABBR.
BoundTokens bind_abbreviations(std::vector<Token> tokens);

// Joins proper-noun runs (with one internal "of" and trailing digits) into underscore compounds.
std::vector<Token> join_compounds(std::vector<Token> tokens);

DissectionResult dissect(const Discourse& discourse, DiscourseContext& context,
                         const DissectorOptions& options = {});
DissectionResult dissect(const Discourse& discourse, const DissectorOptions& options = {});

// split_discourses followed by dissect over a shared context.
DissectionResult dissect_text(std::string_view text, const DissectorOptions& options = {});

struct Variable {
  char letter = 'A';
};

struct GeneralizedPattern {
  std::vector<std::variant<Variable, FunctionWord>> items;
  std::map<char, std::string> binding;  // letter -> rendered content chunk
};

GeneralizedPattern generalize(const PrimitiveDiscourse& p);

// "A of B".
std::string render(const GeneralizedPattern& pattern);

// Substitutes the binding back into the pattern.
std::string render_bound(const GeneralizedPattern& pattern);

}  // namespace lexres
