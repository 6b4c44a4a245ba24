#include <algorithm>
#include <optional>

#include "lexres/dissector.hpp"
#include "word_class.hpp"

namespace lexres {

using namespace detail;

std::string_view to_string(RuleId rule) {
  switch (rule) {
    case RuleId::Possessive: return "R1";
    case RuleId::Apposition: return "R2";
    case RuleId::Attributive: return "R3";
    case RuleId::SubjectVerb: return "R4";
    case RuleId::InfinitivePurpose: return "R5";
    case RuleId::Recipient: return "R5-recipient";
    case RuleId::AbbreviationPremodifier: return "R6";
    case RuleId::ReducedRelative: return "R7";
    case RuleId::Prepositional: return "R8";
    case RuleId::Antecedent: return "antecedent";
  }
  return "?";
}

bool DissectionResult::has_uncovered_spans() const {
  return std::any_of(diagnostics.begin(), diagnostics.end(), [](const Diagnostic& d) {
    return d.kind == Diagnostic::Kind::NoRuleApplies;
  });
}

std::string render_chunk(const Chunk& c) {
  if (const auto* fw = std::get_if<FunctionWord>(&c)) return fw->word;
  const auto& t = std::get<ContentChunk>(c).token;
  return t.is_compound ? "(" + t.surface + ")" : t.surface;
}

std::string render(const PrimitiveDiscourse& p) {
  std::string out;
  for (const auto& c : p.chunks) {
    if (!out.empty()) out += ' ';
    out += render_chunk(c);
  }
  return out;
}

namespace {

bool is_plural(std::string_view surface) {
  const auto cut = surface.rfind('_');
  const auto last = lower(cut == std::string_view::npos ? surface : surface.substr(cut + 1));
  static constexpr std::array<std::string_view, 7> kIrregular = {
      "children", "people", "men", "women", "data", "media", "police"};
  if (std::find(kIrregular.begin(), kIrregular.end(), last) != kIrregular.end()) return true;
  if (last.size() < 3 || last.back() != 's') return false;
  const auto tail = last.substr(last.size() - 2);
  return tail != "ss" && tail != "us" && tail != "is";
}

std::string past_participle(std::string_view verb) {
  std::string v(verb);
  if (v.ends_with("ed")) return v;
  if (v.ends_with('e')) return v + "d";
  if (v.size() > 1 && v.back() == 'y' &&
      std::string_view("aeiou").find(v[v.size() - 2]) == std::string_view::npos) {
    return v.substr(0, v.size() - 1) + "ied";
  }
  return v + "ed";
}

struct NounPhrase {
  std::optional<std::size_t> determiner;
  std::vector<std::size_t> possessor;  // possessor head last
  std::vector<std::size_t> core;       // modifiers, then head
  std::vector<std::size_t> appositives;
  std::size_t end = 0;

  std::size_t head() const { return core.back(); }
  bool has_possessor() const { return !possessor.empty(); }
};

struct Site {
  std::size_t token = 0;
  ChunkRole role = ChunkRole::Noun;
};

class ClauseDissector {
 public:
  ClauseDissector(const std::vector<Token>& tokens, std::size_t first, std::size_t last,
                  std::size_t ordinal, const DissectorOptions& options,
                  DiscourseContext& context, std::vector<bool>& covered, DissectionResult& out)
      : tok_(tokens),
        first_(first),
        end_(last),
        ordinal_(ordinal),
        options_(options),
        context_(context),
        covered_(covered),
        out_(out) {}

  // Returns true when the clause has a subject and a finite verb.
  bool run();

 private:
  const std::string& s(std::size_t i) const { return tok_[i].surface; }

  Chunk content(std::size_t i, ChunkRole role) {
    covered_[i] = true;
    return ContentChunk{tok_[i], role};
  }

  Chunk derived(std::size_t i, std::string surface, ChunkRole role) {
    covered_[i] = true;
    Token t = tok_[i];
    t.surface = std::move(surface);
    t.is_compound = false;
    return ContentChunk{std::move(t), role};
  }

  Chunk word(std::string_view w) const {
    const auto folded = lower(w);
    const auto& cc = options_.closed_class;
    if (std::find(cc.begin(), cc.end(), folded) != cc.end()) return FunctionWord{std::string(w)};
    Token t;
    t.surface = std::string(w);
    return ContentChunk{std::move(t), ChunkRole::Predicate};
  }

  static PrimitiveDiscourse make(RuleId rule, std::vector<Chunk> chunks, std::size_t ordinal,
                                 bool anaphoric = false) {
    if (!chunks.empty()) {
      if (auto* cc = std::get_if<ContentChunk>(&chunks.front())) {
        cc->token.surface = capitalize(std::move(cc->token.surface));
      } else {
        auto& fw = std::get<FunctionWord>(chunks.front());
        fw.word = capitalize(std::move(fw.word));
      }
    }
    return PrimitiveDiscourse{std::move(chunks), ordinal, rule, anaphoric};
  }

  void emit(RuleId rule, std::vector<Chunk> chunks, bool anaphoric = false) {
    out_.primitives.push_back(make(rule, std::move(chunks), ordinal_, anaphoric));
  }

  void emit_all(std::vector<PrimitiveDiscourse> ps) {
    for (auto& p : ps) out_.primitives.push_back(std::move(p));
  }

  std::string copula(std::size_t head) const { return is_plural(s(head)) ? "are" : "is"; }

  std::optional<NounPhrase> parse_np(std::size_t pos) const;
  std::vector<PrimitiveDiscourse> np_primitives(const NounPhrase& np, bool fold_possessive);
  void uncovered_span(std::size_t& pos);
  void tail(std::optional<Site> site, std::size_t last_head,
            std::optional<std::size_t> recipient_verb, std::size_t pos);

  const std::vector<Token>& tok_;
  std::size_t first_;
  std::size_t end_;
  std::size_t ordinal_;
  const DissectorOptions& options_;
  DiscourseContext& context_;
  std::vector<bool>& covered_;
  DissectionResult& out_;
};

std::optional<NounPhrase> ClauseDissector::parse_np(std::size_t pos) const {
  NounPhrase np;
  std::size_t i = pos;
  if (i < end_ && is_determiner(s(i))) np.determiner = i++;
  std::vector<std::size_t> run;
  while (i < end_ && is_content_word(s(i))) {
    const bool continues = i + 1 < end_ && is_content_word(s(i + 1));
    if (is_gerund(s(i)) && !run.empty() && !continues) break;  // reduced relative
    run.push_back(i);
    if (tok_[i].trailing_possessive) {
      np.possessor = std::move(run);
      run.clear();
    }
    ++i;
  }
  if (run.empty()) {
    if (!np.has_possessor()) return std::nullopt;
    run = std::move(np.possessor);
    np.possessor.clear();
  }
  np.core = std::move(run);
  np.end = i;

  // "International_Labour_Organization ILO": the compound restates the abbreviation.
  auto drop_appositives = [&](std::vector<std::size_t>& part) {
    std::vector<std::size_t> kept;
    for (std::size_t k = 0; k < part.size(); ++k) {
      if (k + 1 < part.size() && tok_[part[k]].is_compound &&
          is_abbreviation_form(s(part[k + 1]))) {
        np.appositives.push_back(part[k]);
      } else {
        kept.push_back(part[k]);
      }
    }
    part = std::move(kept);
  };
  drop_appositives(np.possessor);
  drop_appositives(np.core);
  return np;
}

std::vector<PrimitiveDiscourse> ClauseDissector::np_primitives(const NounPhrase& np,
                                                               bool fold_possessive) {
  std::vector<PrimitiveDiscourse> ps;
  for (auto a : np.appositives) covered_[a] = true;
  const auto head = np.head();

  if (np.has_possessor() && !fold_possessive) {
    ps.push_back(make(RuleId::Possessive,
                      {content(head, ChunkRole::Noun), word("of"),
                       content(np.possessor.back(), ChunkRole::Noun)},
                      ordinal_));
  }

  std::vector<std::size_t> noun_modifiers;
  std::vector<std::size_t> adjectives;
  for (std::size_t k = 0; k + 1 < np.core.size(); ++k) {
    const auto m = np.core[k];
    if (starts_upper(s(m)) || tok_[m].is_compound || is_number(s(m))) {
      ps.push_back(make(RuleId::AbbreviationPremodifier,
                        {content(head, ChunkRole::Noun), word("of"), content(m, ChunkRole::Noun)},
                        ordinal_));
    } else if (k + 2 == np.core.size() && is_gerund(s(m))) {
      noun_modifiers.push_back(m);
    } else {
      adjectives.push_back(m);
    }
  }
  for (auto adj : adjectives) {
    std::vector<Chunk> chunks;
    for (auto m : noun_modifiers) chunks.push_back(content(m, ChunkRole::Modifier));
    chunks.push_back(content(head, ChunkRole::Noun));
    chunks.push_back(word(copula(head)));
    chunks.push_back(content(adj, ChunkRole::Predicate));
    ps.push_back(make(RuleId::Attributive, std::move(chunks), ordinal_));
  }
  return ps;
}

void ClauseDissector::uncovered_span(std::size_t& pos) {
  // Skip to the next phrase boundary; the coverage pass reports the words.
  ++pos;
  while (pos < end_ && is_content_word(s(pos))) ++pos;
}

bool ClauseDissector::run() {
  std::size_t pos = first_;
  while (pos < end_ && is_punctuation(s(pos))) ++pos;
  auto subject = parse_np(pos);
  if (!subject) return false;
  pos = subject->end;

  std::vector<std::size_t> aux;
  while (pos < end_ && is_auxiliary(s(pos))) aux.push_back(pos++);
  std::optional<std::size_t> verb;
  if (!aux.empty()) {
    if (pos < end_ && is_content_word(s(pos))) {
      verb = pos++;
    } else {
      verb = aux.back();
      aux.pop_back();
    }
  } else if (subject->core.size() >= 2 && !subject->has_possessor() &&
             !starts_upper(s(subject->head())) && !tok_[subject->head()].is_compound) {
    verb = subject->head();
    subject->core.pop_back();
  }

  const auto subj_head = subject->head();

  // "The project ..." where an earlier discourse introduced the project as an object.
  if (subject->determiner && lower(s(*subject->determiner)) == "the" &&
      !starts_upper(s(subj_head))) {
    const auto key = lower(s(subj_head));
    for (auto it = context_.antecedents.rbegin(); it != context_.antecedents.rend(); ++it) {
      if (it->object_head != key) continue;
      emit(RuleId::Antecedent,
           {content(subj_head, ChunkRole::Noun), word("of"),
            ContentChunk{it->subject, ChunkRole::Noun}},
           /*anaphoric=*/true);
      out_.diagnostics.push_back(
          {Diagnostic::Kind::Anaphora, ordinal_, "the " + s(subj_head),
           "definite noun linked to earlier subject " + it->subject.surface});
      break;
    }
  }
  emit_all(np_primitives(*subject, false));

  if (!verb) {
    // Verbless clause: a bare noun phrase, possibly followed by prepositional phrases.
    tail(std::nullopt, subj_head, std::nullopt, pos);
    return false;
  }

  std::vector<Chunk> main{content(subj_head, ChunkRole::Noun)};
  for (auto a : aux) main.push_back(word(s(a)));
  main.push_back(content(*verb, ChunkRole::Predicate));

  std::optional<NounPhrase> object;
  if (pos < end_ && (is_determiner(s(pos)) || is_content_word(s(pos))) && !is_gerund(s(pos))) {
    object = parse_np(pos);
  }
  std::vector<PrimitiveDiscourse> object_ps;
  if (object) {
    pos = object->end;
    object_ps = np_primitives(*object, false);
    if (!covered_[object->head()] && main.size() < 5) {
      main.push_back(content(object->head(), ChunkRole::Noun));
    }
    context_.antecedents.push_back({lower(s(object->head())), tok_[subj_head]});
  }
  emit(RuleId::SubjectVerb, std::move(main));
  emit_all(std::move(object_ps));

  if (object) {
    tail(Site{object->head(), ChunkRole::Noun}, object->head(), verb, pos);
  } else {
    tail(Site{*verb, ChunkRole::Predicate}, subj_head, std::nullopt, pos);
  }
  return true;
}

void ClauseDissector::tail(std::optional<Site> site, std::size_t last_head,
                           std::optional<std::size_t> recipient_verb, std::size_t pos) {
  while (pos < end_) {
    const auto& w = s(pos);
    if (is_punctuation(w)) {
      ++pos;
      continue;
    }
    const auto lw = lower(w);

    if (lw == "to" && pos + 1 < end_ && is_content_word(s(pos + 1)) && !starts_upper(s(pos + 1)) &&
        !is_number(s(pos + 1)) && !tok_[pos + 1].is_compound) {
      const auto inf = pos + 1;
      pos = inf + 1;
      std::optional<NounPhrase> object;
      if (pos < end_ && (is_determiner(s(pos)) || is_content_word(s(pos))) && !is_gerund(s(pos))) {
        object = parse_np(pos);
      }
      if (object && object->determiner) {
        pos = object->end;
        const auto head = object->head();
        std::vector<Chunk> chunks{content(head, ChunkRole::Noun)};
        if (object->has_possessor()) {
          chunks.push_back(word("of"));
          chunks.push_back(content(object->possessor.back(), ChunkRole::Noun));
        }
        chunks.push_back(word(copula(head)));
        chunks.push_back(derived(inf, past_participle(s(inf)), ChunkRole::Predicate));
        emit(RuleId::InfinitivePurpose, std::move(chunks));
        emit_all(np_primitives(*object, true));
        site.reset();
        last_head = head;
        recipient_verb = inf;
      } else if (object) {
        pos = object->end;
        emit_all(np_primitives(*object, false));
        site = Site{inf, ChunkRole::Predicate};
        last_head = object->head();
        recipient_verb = inf;
      } else {
        site = Site{inf, ChunkRole::Predicate};
        recipient_verb.reset();
      }
      continue;
    }

    if (is_preposition(w)) {
      auto np = parse_np(pos + 1);
      if (!np) {
        uncovered_span(pos);
        continue;
      }
      if (lw == "to" && recipient_verb) {
        const auto v = *recipient_verb;
        std::vector<Chunk> chunks{derived(v, past_participle(lower(s(v))), ChunkRole::Predicate),
                                  word("to")};
        if (np->determiner && lower(s(*np->determiner)) == "the") chunks.push_back(word("the"));
        chunks.push_back(content(np->head(), ChunkRole::Noun));
        emit(RuleId::Recipient, std::move(chunks));
      } else if (lw == "of" || lw == "from" || lw == "on") {
        if (site) {
          const Site at = *site;
          emit(RuleId::Prepositional,
               {content(at.token, at.role), word(lw), content(np->head(), ChunkRole::Noun)});
        } else {
          site = Site{np->head(), ChunkRole::Noun};
        }
      }
      recipient_verb.reset();
      emit_all(np_primitives(*np, false));
      last_head = np->head();
      pos = np->end;
      continue;
    }

    if (is_gerund(w)) {
      emit(RuleId::ReducedRelative, {content(last_head, ChunkRole::Noun),
                                     word(copula(last_head)), content(pos, ChunkRole::Predicate)});
      ++pos;
      continue;
    }

    uncovered_span(pos);
  }
}

bool is_clause_break(const std::vector<Token>& tokens, std::size_t i) {
  const auto& w = tokens[i].surface;
  if (w == ";" || is_terminator(w)) return true;
  return w == "," && i + 1 < tokens.size() && is_coordinator(tokens[i + 1].surface);
}

void report_uncovered(const std::vector<Token>& tokens, const std::vector<bool>& covered,
                      std::size_t ordinal, DissectionResult& out) {
  std::string span;
  auto flush = [&] {
    if (span.empty()) return;
    out.diagnostics.push_back({Diagnostic::Kind::NoRuleApplies, ordinal, span,
                               "no dissection rule covers \"" + span + "\""});
    span.clear();
  };
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (is_content_word(tokens[i].surface) && !covered[i]) {
      if (!span.empty()) span += ' ';
      span += tokens[i].surface;
    } else if (!is_punctuation(tokens[i].surface) || covered[i]) {
      flush();
    }
  }
  flush();
}

}  // namespace

DissectionResult dissect(const Discourse& discourse, DiscourseContext& context,
                         const DissectorOptions& options) {
  DissectionResult out;
  auto bound = bind_abbreviations(tokenize(discourse.text));
  out.bindings = std::move(bound.bindings);
  const auto tokens = join_compounds(std::move(bound.tokens));

  std::vector<bool> covered(tokens.size(), false);
  const auto n = tokens.size();
  std::size_t start = 0;
  std::size_t i = 0;
  while (i <= n) {
    if (i < n && !is_clause_break(tokens, i)) {
      ++i;
      continue;
    }
    if (i > start) {
      ClauseDissector clause(tokens, start, i, discourse.ordinal, options, context, covered, out);
      if (clause.run()) ++out.finite_clauses;
    }
    // ", and" drops the coordinator too.
    i += (i < n && tokens[i].surface == ",") ? 2 : 1;
    start = i;
  }
  report_uncovered(tokens, covered, discourse.ordinal, out);
  return out;
}

DissectionResult dissect(const Discourse& discourse, const DissectorOptions& options) {
  DiscourseContext context;
  return dissect(discourse, context, options);
}

DissectionResult dissect_text(std::string_view text, const DissectorOptions& options) {
  DissectionResult all;
  DiscourseContext context;
  for (const auto& d : split_discourses(text, options)) {
    auto r = dissect(d, context, options);
    std::move(r.primitives.begin(), r.primitives.end(), std::back_inserter(all.primitives));
    std::move(r.bindings.begin(), r.bindings.end(), std::back_inserter(all.bindings));
    std::move(r.diagnostics.begin(), r.diagnostics.end(), std::back_inserter(all.diagnostics));
    all.finite_clauses += r.finite_clauses;
  }
  return all;
}

}  // namespace lexres
