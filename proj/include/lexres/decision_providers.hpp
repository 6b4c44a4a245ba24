#pragma once

#include <iosfwd>
#include <map>
#include <string>

#include "lexres/lexicon.hpp"
#include "lexres/resolver.hpp"

namespace lexres {

// Answers every consultation with the same decision.
class BatchDecisionProvider final : public DecisionProvider {
 public:
  explicit BatchDecisionProvider(Decision fallback) : fallback_(std::move(fallback)) {}

  Decision decide(std::string_view, const PrimitiveDiscourse&, Classification) override {
    return fallback_;
  }

 private:
  Decision fallback_;
};

// Per-surface answers for tests; unlisted surfaces get `fallback`.
class ScriptedDecisionProvider final : public DecisionProvider {
 public:
  explicit ScriptedDecisionProvider(std::map<std::string, Decision, std::less<>> answers,
                                    Decision fallback = Decision::skip())
      : answers_(std::move(answers)), fallback_(std::move(fallback)) {}

  Decision decide(std::string_view surface, const PrimitiveDiscourse&, Classification) override;

  // Surfaces asked about, in order.
  const std::vector<std::string>& consulted() const noexcept { return consulted_; }

 private:
  std::map<std::string, Decision, std::less<>> answers_;
  Decision fallback_;
  std::vector<std::string> consulted_;
};

/// Asks a person on a terminal.
///
/// Prompt: `unknown noun "<surface>" in "<primitive>" — (n)ame / (a)bbreviation / (s)kip?`
/// An abbreviation answer is followed by an expansion prompt. An expansion with
/// words missing from `lexicon` is re-prompted once; a second failure is passed
/// through so the resolver records the rejection. End of input means skip.
class InteractiveDecisionProvider final : public DecisionProvider {
 public:
  InteractiveDecisionProvider(std::istream& in, std::ostream& out, const Lexicon& lexicon)
      : in_(in), out_(out), lexicon_(lexicon) {}

  Decision decide(std::string_view surface, const PrimitiveDiscourse& context,
                  Classification) override;

 private:
  std::istream& in_;
  std::ostream& out_;
  const Lexicon& lexicon_;
};

}  // namespace lexres
