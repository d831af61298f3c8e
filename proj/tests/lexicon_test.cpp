#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "synthetic_lexicon.hpp"
#include "test_util.hpp"
#include "vadarc/lexicon.hpp"

namespace {

using vadarc::Tokens;
using vadarc::VadScores;

const vadarc::VadLexicon& fixture() {
  static const vadarc::VadLexicon lex =
      vadarc::load_vad_lexicon(vadarc_test::fixtures() / "lexicon" / "synthetic10.tsv");
  return lex;
}

TEST(LoadVadLexicon, SyntheticFixtureRoundTrip) {
  const auto& lex = fixture();
  EXPECT_EQ(lex.size(), 10u);
  EXPECT_EQ(lex.skipped_phrases, 1u);
  for (const auto& e : vadarc_test::synthetic10()) {
    auto got = vadarc::lookup(lex, e.term);
    ASSERT_TRUE(got) << e.term;
    EXPECT_EQ(got->valence, e.v);
    EXPECT_EQ(got->arousal, e.a);
    EXPECT_EQ(got->dominance, e.d);
  }
  auto joy = vadarc::lookup(lex, "joy");
  ASSERT_TRUE(joy);
  EXPECT_EQ(*joy, (VadScores{0.95, 0.60, 0.55}));
}

TEST(LoadVadLexicon, HeaderIsOptional) {
  auto lex = vadarc::parse_vad_lexicon("joy\t0.95\t0.60\t0.55\n", "inline");
  EXPECT_EQ(lex.size(), 1u);
  auto with_header = vadarc::parse_vad_lexicon("term\tvalence\tarousal\tdominance\njoy\t1\t0\t0.5\n", "h");
  EXPECT_EQ(with_header.size(), 1u);
}

TEST(LoadVadLexicon, PhrasesSkipped) {
  auto lex = vadarc::parse_vad_lexicon("out of sorts\t0.2\t0.4\t0.3\nfine\t0.7\t0.3\t0.5\n", "p");
  EXPECT_EQ(lex.skipped_phrases, 1u);
  EXPECT_EQ(lex.size(), 1u);
  EXPECT_FALSE(vadarc::lookup(lex, "out"));
}

TEST(LoadVadLexicon, DuplicateLastWinsWithWarning) {
  auto lex = vadarc::parse_vad_lexicon("a\t0.1\t0.1\t0.1\nA\t0.9\t0.8\t0.7\n", "d");
  EXPECT_EQ(lex.size(), 1u);
  EXPECT_EQ(*vadarc::lookup(lex, "a"), (VadScores{0.9, 0.8, 0.7}));
  EXPECT_EQ(lex.warnings.size(), 1u);
}

TEST(LoadVadLexicon, OutOfRangeIsFatal) {
  try {
    vadarc::parse_vad_lexicon("joy\t0.5\t1.2\t0.5\n", "r");
    FAIL();
  } catch (const vadarc::Error& e) {
    EXPECT_NE(std::string(e.what()).find("score out of range"), std::string::npos);
  }
  EXPECT_THROW(vadarc::parse_vad_lexicon("joy\t-0.5\t0.2\t0.5\n", "r"), vadarc::Error);
  EXPECT_THROW(vadarc::parse_vad_lexicon("joy\tnan\t0.2\t0.5\n", "r"), vadarc::Error);
}

TEST(LoadVadLexicon, RescaleMapsEndpointsExactly) {
  auto lex = vadarc::parse_vad_lexicon("a\t-1\t0\t1\nb\t-0.5\t0.25\t0.5\n", "s", {.rescale = true});
  EXPECT_EQ(*vadarc::lookup(lex, "a"), (VadScores{0.0, 0.5, 1.0}));
  EXPECT_EQ(*vadarc::lookup(lex, "b"), (VadScores{0.25, 0.625, 0.75}));
  EXPECT_THROW(vadarc::parse_vad_lexicon("a\t-1.5\t0\t1\n", "s", {.rescale = true}), vadarc::Error);
}

TEST(LoadVadLexicon, TooFewColumnsNamesLine) {
  try {
    vadarc::parse_vad_lexicon("a\t0.1\t0.1\t0.1\nb\t0.1\t0.2\n", "c");
    FAIL();
  } catch (const vadarc::Error& e) {
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos);
  }
}

TEST(LoadVadLexicon, NonNumericAfterFirstRowIsFatal) {
  EXPECT_THROW(vadarc::parse_vad_lexicon("a\t0.1\t0.1\t0.1\nb\tx\t0.2\t0.3\n", "n"), vadarc::Error);
  EXPECT_THROW(vadarc::load_vad_lexicon("/nonexistent.tsv"), vadarc::Error);
}

TEST(LoadVadLexicon, AcceptsCrlfAndExtraColumns) {
  auto lex = vadarc::parse_vad_lexicon("a\t0.1\t0.2\t0.3\textra\r\n\r\nb\t1\t1\t1\r\n", "x");
  EXPECT_EQ(lex.size(), 2u);
  EXPECT_EQ(*vadarc::lookup(lex, "a"), (VadScores{0.1, 0.2, 0.3}));
}

TEST(Lookup, ExactLowercaseOnly) {
  EXPECT_TRUE(vadarc::lookup(fixture(), "joy"));
  EXPECT_FALSE(vadarc::lookup(fixture(), "zzzq"));
  EXPECT_FALSE(vadarc::lookup(fixture(), "Joy"));
  EXPECT_FALSE(vadarc::lookup(fixture(), "jo"));
}

TEST(ScoreTokens, Singleton) {
  auto s = vadarc::score_tokens({"joy"}, fixture());
  ASSERT_TRUE(s.means);
  EXPECT_EQ(*s.means, (VadScores{0.95, 0.60, 0.55}));
  EXPECT_EQ(s.tokens_total, 1u);
  EXPECT_EQ(s.tokens_matched, 1u);
}

TEST(ScoreTokens, NoMatch) {
  auto s = vadarc::score_tokens({"zzzq"}, fixture());
  EXPECT_FALSE(s.means);
  EXPECT_EQ(s.tokens_total, 1u);
  EXPECT_EQ(s.tokens_matched, 0u);
  EXPECT_FALSE(vadarc::score_tokens({}, fixture()).means);
}

TEST(ScoreTokens, OccurrenceWeighted) {
  // joy x3 + dark x1: valence (3*0.95 + 0.22)/4, not (0.95 + 0.22)/2.
  auto s = vadarc::score_tokens({"joy", "joy", "dark", "joy", "zzz"}, fixture());
  ASSERT_TRUE(s.means);
  EXPECT_NEAR(s.means->valence, (3 * 0.95 + 0.22) / 4, 1e-15);
  EXPECT_EQ(s.tokens_total, 5u);
  EXPECT_EQ(s.tokens_matched, 4u);
}

TEST(ScoreTokensProperty, MatchesOracleAndInvariants) {
  std::mt19937 rng(19);
  const auto vocab = vadarc_test::oracle_vocabulary();
  std::uniform_int_distribution<std::size_t> pick(0, vocab.size() - 1);
  for (int iter = 0; iter < 500; ++iter) {
    Tokens tokens;
    for (int n = static_cast<int>(rng() % 201); n > 0; --n) tokens.push_back(vocab[pick(rng)]);

    const auto s = vadarc::score_tokens(tokens, fixture());
    const auto oracle = vadarc_test::oracle_means(tokens);
    EXPECT_EQ(s.tokens_total, tokens.size());
    EXPECT_EQ(s.tokens_matched, oracle.matched);
    ASSERT_EQ(s.means.has_value(), oracle.matched > 0);
    if (s.means) {
      EXPECT_NEAR(s.means->valence, oracle.v, 1e-12);
      EXPECT_NEAR(s.means->arousal, oracle.a, 1e-12);
      EXPECT_NEAR(s.means->dominance, oracle.d, 1e-12);
      for (double x : {s.means->valence, s.means->arousal, s.means->dominance}) {
        EXPECT_GE(x, 0.0);
        EXPECT_LE(x, 1.0);
      }
      EXPECT_GE(s.means->valence, oracle.min_v - 1e-15);
      EXPECT_LE(s.means->valence, oracle.max_v + 1e-15);
    }

    Tokens shuffled = tokens;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    const auto p = vadarc::score_tokens(shuffled, fixture());
    EXPECT_EQ(p.tokens_matched, s.tokens_matched);
    if (s.means) {
      EXPECT_NEAR(p.means->valence, s.means->valence, 1e-12);
    }

    // Additivity: concatenation equals the count-weighted combination of the parts.
    const std::size_t cut = tokens.empty() ? 0 : rng() % tokens.size();
    const Tokens left(tokens.begin(), tokens.begin() + static_cast<std::ptrdiff_t>(cut));
    const Tokens right(tokens.begin() + static_cast<std::ptrdiff_t>(cut), tokens.end());
    const auto l = vadarc::score_tokens(left, fixture());
    const auto r = vadarc::score_tokens(right, fixture());
    EXPECT_EQ(l.tokens_matched + r.tokens_matched, s.tokens_matched);
    if (s.means) {
      const double wl = static_cast<double>(l.tokens_matched);
      const double wr = static_cast<double>(r.tokens_matched);
      const double combined = ((l.means ? l.means->arousal * wl : 0) +
                               (r.means ? r.means->arousal * wr : 0)) / (wl + wr);
      EXPECT_NEAR(combined, s.means->arousal, 1e-12);
    }
  }
}

TEST(ScoreCorpus, CardinalityEmptyChapterAndPooledAggregate) {
  std::vector<vadarc::ChapterTokens> chapters = {
      {1, {{"joy"}}},
      {2, {}},
      {3, {{"dark", "dark"}, {"dark", "zzz"}}},
  };
  const auto scores = vadarc::score_corpus(chapters, fixture());
  ASSERT_EQ(scores.chapters.size(), 3u);
  EXPECT_EQ(scores.chapters[1].chapter_index, 2);
  EXPECT_EQ(scores.chapters[1].tokens_total, 0u);
  EXPECT_FALSE(scores.chapters[1].means);
  // Pooled: (0.95 + 3*0.22)/4 = 0.4025; the mean of chapter means would be 0.585.
  ASSERT_TRUE(scores.aggregate.means);
  EXPECT_NEAR(scores.aggregate.means->valence, (0.95 + 3 * 0.22) / 4, 1e-15);
  EXPECT_EQ(scores.aggregate.tokens_total, 5u);
  EXPECT_EQ(scores.aggregate.tokens_matched, 4u);
}

TEST(ScoresCsv, FormatAndParseBack) {
  std::vector<vadarc::ChapterTokens> chapters = {{1, {{"joy", "calm"}}}, {2, {{"zzz"}}}};
  const auto scores = vadarc::score_corpus(chapters, fixture());
  const std::string text = vadarc::format_scores_csv(scores);
  EXPECT_EQ(text.substr(0, text.find('\n')), "chapter,valence,arousal,dominance,tokens_total,tokens_matched");
  EXPECT_NE(text.find("\n2,,,,1,0\n"), std::string::npos);
  EXPECT_NE(text.find("\nall,"), std::string::npos);
  const auto back = vadarc::parse_scores_csv(text, "scores.csv");
  ASSERT_EQ(back.chapters.size(), 2u);
  EXPECT_EQ(back.chapters[0].means, scores.chapters[0].means);  // shortest round-trip is exact
  EXPECT_FALSE(back.chapters[1].means);
  EXPECT_EQ(back.aggregate.tokens_total, 3u);
  EXPECT_THROW(vadarc::parse_scores_csv("chapter,valence\n", "x"), vadarc::Error);
  EXPECT_THROW(vadarc::parse_scores_csv(std::string(vadarc::kScoresCsvHeader) + "\n1,,,,0,0\n", "x"),
               vadarc::Error);
}

}  // namespace
