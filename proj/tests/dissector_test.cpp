#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "lexres/dissector.hpp"
#include "support/fragment.hpp"

namespace lexres {
namespace {

using testing::Rows;

Rows rows_of(const DissectionResult& r) {
  Rows rows;
  for (const auto& p : r.primitives) rows.emplace_back(render(p), render(generalize(p)));
  return rows;
}

Rows sorted(Rows r) {
  std::sort(r.begin(), r.end());
  return r;
}

TEST(SplitDiscourses, FragmentGivesTwoComplexDiscourses) {
  for (const auto& text : {testing::kFragment, testing::kFragmentTwoBrackets}) {
    const auto ds = split_discourses(text);
    ASSERT_EQ(ds.size(), 2u) << text;
    EXPECT_EQ(ds[0].level, DiscourseLevel::Complex);
    EXPECT_EQ(ds[1].level, DiscourseLevel::Complex);
    EXPECT_EQ(ds[0].ordinal, 1u);
    EXPECT_EQ(ds[1].ordinal, 2u);
  }
}

TEST(SplitDiscourses, SingleSentence) {
  const auto ds = split_discourses("ILO helps.");
  ASSERT_EQ(ds.size(), 1u);
  EXPECT_EQ(ds[0].level, DiscourseLevel::Primitive);
}

TEST(SplitDiscourses, TwoSentencesPartitionTokens) {
  const std::string text = "A ran. B sat.";
  const auto ds = split_discourses(text);
  ASSERT_EQ(ds.size(), 2u);
  std::vector<std::string> joined;
  for (const auto& d : ds) {
    const auto t = normalized_tokens(d.text);
    joined.insert(joined.end(), t.begin(), t.end());
  }
  EXPECT_EQ(joined, normalized_tokens(text));
}

TEST(SplitDiscourses, TerminatorInsideParenthesesDoesNotSplit) {
  EXPECT_EQ(split_discourses("IPEC (est. Geneva) helps.").size(), 1u);
}

TEST(SplitDiscourses, LowercaseAfterTerminatorDoesNotSplit) {
  EXPECT_EQ(split_discourses("It costs 3 p.m. rates. Then it stops.").size(), 2u);
}

TEST(SplitDiscourses, CoordinatedClausesAreCompound) {
  const auto ds = split_discourses("IPEC has started, and ILO has helped.");
  ASSERT_EQ(ds.size(), 1u);
  EXPECT_EQ(ds[0].level, DiscourseLevel::Compound);
}

TEST(SplitDiscourses, EmptyInputThrows) {
  EXPECT_THROW(split_discourses(""), EmptyInput);
  EXPECT_THROW(split_discourses(" \n\t "), EmptyInput);
  EXPECT_THROW(split_discourses("[ ]"), EmptyInput);
}

TEST(Dissect, FirstDiscourseRows) {
  const auto r = dissect(Discourse{testing::kFirstDiscourse});
  EXPECT_EQ(sorted(rows_of(r)), sorted(testing::kFirstRows));
  EXPECT_FALSE(r.has_uncovered_spans());
  EXPECT_EQ(r.bindings.size(), 2u);
}

TEST(Dissect, SecondDiscourseRowsWithFlaggedAnaphor) {
  const auto r = dissect_text(testing::kFragment);
  Rows second;
  bool flagged = false;
  for (const auto& p : r.primitives) {
    if (p.source_ordinal != 2) continue;
    second.emplace_back(render(p), render(generalize(p)));
    if (render(p) == "Project of IPEC") flagged = p.anaphoric && p.rule == RuleId::Antecedent;
  }
  EXPECT_EQ(sorted(second), sorted(testing::kSecondRows));
  EXPECT_TRUE(flagged);
  const bool noted = std::any_of(r.diagnostics.begin(), r.diagnostics.end(), [](const auto& d) {
    return d.kind == Diagnostic::Kind::Anaphora && d.source_ordinal == 2;
  });
  EXPECT_TRUE(noted);
  EXPECT_FALSE(r.has_uncovered_spans());
}

TEST(Dissect, SecondDiscourseAloneHasNoAntecedent) {
  const auto r = dissect(Discourse{testing::kSecondDiscourse});
  for (const auto& p : r.primitives) EXPECT_FALSE(p.anaphoric) << render(p);
  EXPECT_EQ(r.primitives.size(), testing::kSecondRows.size() - 1);
}

TEST(Dissect, SimpleSubjectVerbIsItsOwnPrimitive) {
  const auto r = dissect(Discourse{"IPEC helps"});
  ASSERT_EQ(r.primitives.size(), 1u);
  EXPECT_EQ(render(r.primitives[0]), "IPEC helps");
  EXPECT_EQ(render(generalize(r.primitives[0])), "A B");
}

TEST(Dissect, BirdsFly) {
  const auto r = dissect_text("Birds fly.");
  ASSERT_EQ(r.primitives.size(), 1u);
  EXPECT_EQ(render(r.primitives[0]), "Birds fly");
  EXPECT_EQ(render(generalize(r.primitives[0])), "A B");
}

TEST(Dissect, PossessiveBecomesOf) {
  const auto r = dissect_text("Pakistan's Government has agreed.");
  const auto rows = rows_of(r);
  EXPECT_NE(std::find(rows.begin(), rows.end(), std::pair<std::string, std::string>(
                                                    "Government of Pakistan", "A of B")),
            rows.end());
}

TEST(Dissect, UncoveredWordsAreDiagnosedNotDropped) {
  const auto r = dissect_text("Quickly, however, seventeen.");
  EXPECT_TRUE(r.has_uncovered_spans());
  const auto it = std::find_if(r.diagnostics.begin(), r.diagnostics.end(), [](const auto& d) {
    return d.kind == Diagnostic::Kind::NoRuleApplies;
  });
  ASSERT_NE(it, r.diagnostics.end());
  EXPECT_FALSE(it->span.empty());
}

TEST(Dissect, PrimitivesHaveContentAndBoundedLength) {
  const auto r = dissect_text(testing::kFragment);
  for (const auto& p : r.primitives) {
    const auto content = std::count_if(p.chunks.begin(), p.chunks.end(), [](const Chunk& c) {
      return std::holds_alternative<ContentChunk>(c);
    });
    EXPECT_GE(content, 1) << render(p);
    EXPECT_LE(p.chunks.size(), 5u) << render(p);
  }
}

TEST(Dissect, ClosedClassIsConfigurable) {
  DissectorOptions options;
  options.closed_class = {"of"};
  const auto r = dissect(Discourse{"IPEC has initiated"}, options);
  ASSERT_EQ(r.primitives.size(), 1u);
  EXPECT_EQ(render(generalize(r.primitives[0])), "A B C");
}

TEST(Generalize, FragmentExamples) {
  const auto first = dissect(Discourse{testing::kFirstDiscourse});
  std::set<std::string> patterns;
  for (const auto& p : first.primitives) {
    const auto g = generalize(p);
    patterns.insert(render(g));
    EXPECT_EQ(render_bound(g), render(p));
  }
  EXPECT_TRUE(patterns.count("A of B"));
  EXPECT_TRUE(patterns.count("A of B is C"));
}

TEST(Generalize, BindingMapsLettersToChunks) {
  const auto r = dissect(Discourse{testing::kFirstDiscourse});
  const auto it = std::find_if(r.primitives.begin(), r.primitives.end(),
                               [](const auto& p) { return render(p) == "IPEC of ILO"; });
  ASSERT_NE(it, r.primitives.end());
  const auto g = generalize(*it);
  EXPECT_EQ(g.binding, (std::map<char, std::string>{{'A', "IPEC"}, {'B', "ILO"}}));
}

TEST(Generalize, RepeatedChunkGetsFreshLetter) {
  PrimitiveDiscourse p;
  p.chunks = {ContentChunk{Token{"Birds"}, ChunkRole::Noun}, FunctionWord{"of"},
              ContentChunk{Token{"birds"}, ChunkRole::Noun}};
  EXPECT_EQ(render(generalize(p)), "A of B");
}

}  // namespace
}  // namespace lexres
