#include <gtest/gtest.h>

#include <random>
#include <string>
#include <vector>

#include "dialogue_annotation.hpp"
#include "test_util.hpp"
#include "vadarc/dialogue.hpp"

namespace {

using vadarc::Chapter;
using vadarc::extract_utterances;
using vadarc::Utterance;

Chapter chapter_of(std::string body, int index = 1) {
  Chapter ch;
  ch.index = index;
  ch.heading = "Chapter " + std::to_string(index) + "\n";
  ch.body = std::move(body);
  return ch;
}

std::vector<std::string> texts(const std::vector<Utterance>& us) {
  std::vector<std::string> out;
  for (const auto& u : us) out.push_back(u.text);
  return out;
}

TEST(ExtractUtterances, SinglePair) {
  auto res = extract_utterances(chapter_of(R"(He said "Good morning!" and left.)"));
  ASSERT_EQ(res.utterances.size(), 1u);
  EXPECT_EQ(res.utterances[0].text, "Good morning!");
  EXPECT_EQ(res.utterances[0].seq, 1);
  EXPECT_EQ(res.utterances[0].start_offset, 9u);
  EXPECT_EQ(res.utterances[0].end_offset, 22u);
}

TEST(ExtractUtterances, TwoPairs) {
  auto res = extract_utterances(chapter_of(R"("Yes," she said, "go on.")"));
  EXPECT_EQ(texts(res.utterances), (std::vector<std::string>{"Yes,", "go on."}));
  EXPECT_EQ(res.utterances[1].seq, 2);
}

TEST(ExtractUtterances, TypographicQuotes) {
  auto res = extract_utterances(chapter_of("“Don’t be a fool” he cried"));
  EXPECT_EQ(texts(res.utterances), (std::vector<std::string>{"Don’t be a fool"}));
  EXPECT_TRUE(res.warnings.empty());
}

TEST(ExtractUtterances, AnnotatedFixture) {
  const Chapter ch = vadarc::read_chapter_file(
      vadarc_test::fixtures() / "dialogue" / "annotated_chapter.txt", 3);
  auto res = extract_utterances(ch);
  EXPECT_EQ(texts(res.utterances), vadarc_test::annotated_utterances());
  EXPECT_EQ(res.warnings.size(), vadarc_test::kAnnotatedWarnings);
  EXPECT_EQ(res.dropped_unbalanced, 1u);
  for (const auto& u : res.utterances) {
    EXPECT_EQ(ch.body.substr(u.start_offset, u.end_offset - u.start_offset), u.text);
    EXPECT_EQ(u.chapter_index, 3);
  }
  ASSERT_FALSE(res.warnings.empty());
  EXPECT_NE(res.warnings[0].message.find("chapter 3"), std::string::npos);
}

TEST(ExtractUtterances, UnbalancedOpenerAtEndOfChapterIsDropped) {
  auto res = extract_utterances(chapter_of("\"one\" and then \"never closed"));
  EXPECT_EQ(texts(res.utterances), (std::vector<std::string>{"one"}));
  EXPECT_EQ(res.dropped_unbalanced, 1u);
  ASSERT_EQ(res.warnings.size(), 1u);
  EXPECT_NE(res.warnings[0].message.find("offset 15"), std::string::npos);
}

TEST(ExtractUtterances, ContinuationQuotesAreNotStitched) {
  const std::string body =
      "“First paragraph of a speech\n\n“Second paragraph, which closes.”\n";
  auto res = extract_utterances(chapter_of(body));
  EXPECT_EQ(texts(res.utterances), (std::vector<std::string>{"Second paragraph, which closes."}));
  EXPECT_EQ(res.dropped_unbalanced, 1u);
}

TEST(ExtractUtterances, ReopenedTypographicQuoteDropsEarlierOpener) {
  auto res = extract_utterances(chapter_of("“stray opener then “a real one” ends"));
  EXPECT_EQ(texts(res.utterances), (std::vector<std::string>{"a real one"}));
  EXPECT_EQ(res.warnings.size(), 1u);
}

TEST(ExtractUtterances, BlankQuotesProduceNothing) {
  auto res = extract_utterances(chapter_of("\"\" and \"  \" and “\n”"));
  EXPECT_TRUE(res.utterances.empty());
  EXPECT_TRUE(res.warnings.empty());
}

TEST(ExtractUtterances, ConfigurableStyles) {
  vadarc::QuoteConfig guillemets;
  guillemets.styles = {vadarc::parse_quote_style("«»")};
  auto res = extract_utterances(chapter_of("Il dit «Bonjour» et \"not this\""), guillemets);
  EXPECT_EQ(texts(res.utterances), (std::vector<std::string>{"Bonjour"}));
  EXPECT_THROW(vadarc::parse_quote_style("\""), vadarc::Error);
  EXPECT_THROW(vadarc::parse_quote_style("abc"), vadarc::Error);
}

TEST(ExtractUtterances, NoMergingAcrossChapters) {
  const Chapter a = chapter_of("Ends with an opener \"and nothing more\n", 1);
  const Chapter b = chapter_of("then\" a stray close and \"a pair\"", 2);
  auto ra = extract_utterances(a);
  auto rb = extract_utterances(b);
  EXPECT_TRUE(ra.utterances.empty());
  EXPECT_EQ(ra.dropped_unbalanced, 1u);
  // Within chapter 2 the stray mark pairs with the next one; nothing comes from chapter 1.
  for (const auto& u : rb.utterances) {
    EXPECT_EQ(u.chapter_index, 2);
    EXPECT_EQ(u.text.find("nothing more"), std::string::npos);
  }
}

// Random bodies over a small alphabet heavy in quote marks and line breaks.
std::string random_body(std::mt19937& rng) {
  static const std::vector<std::string> pieces = {"\"", "“", "”", "a", "b c", "\n", "\n\n", " ",
                                                  "’", "'", "é", "—"};
  std::uniform_int_distribution<std::size_t> pick(0, pieces.size() - 1);
  std::uniform_int_distribution<int> len(0, 60);
  std::string s;
  for (int n = len(rng); n > 0; --n) s += pieces[pick(rng)];
  return s;
}

std::size_t count_marks(const std::string& s) {
  return vadarc_test::count_occurrences(s, "\"") + vadarc_test::count_occurrences(s, "“") +
         vadarc_test::count_occurrences(s, "”");
}

TEST(ExtractUtterancesProperty, FidelitySoundnessDeterminism) {
  std::mt19937 rng(11);
  for (int iter = 0; iter < 2000; ++iter) {
    const Chapter ch = chapter_of(random_body(rng), 4);
    const auto res = extract_utterances(ch);
    EXPECT_LE(res.utterances.size(), count_marks(ch.body) / 2);
    for (std::size_t i = 0; i < res.utterances.size(); ++i) {
      const auto& u = res.utterances[i];
      EXPECT_EQ(u.seq, static_cast<int>(i) + 1);
      EXPECT_EQ(ch.body.substr(u.start_offset, u.end_offset - u.start_offset), u.text);
      EXPECT_EQ(u.text.find("\n\n"), std::string::npos);
      if (i) {
        EXPECT_GT(u.start_offset, res.utterances[i - 1].end_offset);
      }
    }
    EXPECT_EQ(res.warnings.size(), res.dropped_unbalanced);
    const auto again = extract_utterances(ch);
    EXPECT_EQ(again.utterances, res.utterances);
  }
}

TEST(UtterancesCsv, EscapesPerRfc4180) {
  std::vector<Utterance> us = {{1, 1, "Yes, \"now\"", 0, 0}};
  EXPECT_EQ(vadarc::format_utterances_csv(us), "chapter,seq,utterance\n1,1,\"Yes, \"\"now\"\"\"\n");
}

TEST(UtterancesCsv, EmptyListIsHeaderOnly) {
  EXPECT_EQ(vadarc::format_utterances_csv({}), "chapter,seq,utterance\n");
}

TEST(UtterancesCsv, RowCountAndReadBack) {
  vadarc_test::TempDir dir;
  std::vector<Utterance> us = {{2, 1, "plain", 0, 0}, {2, 2, "multi\nline, with \"quotes\"", 0, 0}};
  auto path = vadarc::write_utterances_csv(us, dir.path() / "c.csv");
  const std::string text = vadarc::io::read_file(path);
  EXPECT_EQ(vadarc_test::count_occurrences(text, "\n2,"), 2u);
  auto back = vadarc::read_utterances_csv(path);
  ASSERT_EQ(back.size(), 2u);
  EXPECT_EQ(back[1].text, us[1].text);
  EXPECT_EQ(back[1].seq, 2);
}

TEST(UtterancesCsv, TwoUtterancesThreeLines) {
  std::vector<Utterance> us = {{1, 1, "a", 0, 0}, {1, 2, "b", 0, 0}};
  EXPECT_EQ(vadarc_test::count_occurrences(vadarc::format_utterances_csv(us), "\n"), 3u);
}

TEST(UtterancesCsv, MalformedRowNamesFileAndLine) {
  vadarc_test::TempDir dir;
  const auto path = dir.path() / "bad.csv";
  vadarc::io::write_file(path, "chapter,seq,utterance\n1,1,ok\n1,x,bad\n");
  try {
    vadarc::read_utterances_csv(path);
    FAIL();
  } catch (const vadarc::Error& e) {
    EXPECT_NE(std::string(e.what()).find("bad.csv"), std::string::npos);
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos);
  }
  vadarc::io::write_file(path, "chapter,seq,utterance\n1,1,\"unterminated\n");
  EXPECT_THROW(vadarc::read_utterances_csv(path), vadarc::Error);
  vadarc::io::write_file(path, "wrong,header\n");
  EXPECT_THROW(vadarc::read_utterances_csv(path), vadarc::Error);
  vadarc::io::write_file(path, "chapter,seq,utterance\n1,1\n");
  EXPECT_THROW(vadarc::read_utterances_csv(path), vadarc::Error);
}

TEST(CompileFullDialogue, CountsAndOrder) {
  vadarc_test::TempDir dir;
  auto c1 = vadarc::write_utterances_csv({{1, 1, "one", 0, 0}, {1, 2, "two\nlines", 0, 0}},
                                         dir.path() / "chapter_1_dialogues.csv");
  auto c2 = vadarc::write_utterances_csv({{2, 1, "three", 0, 0}}, dir.path() / "chapter_2_dialogues.csv");
  // Input order does not matter; output follows (chapter, seq).
  auto out = vadarc::compile_full_dialogue({c2, c1}, dir.path() / "full_dialogue.txt");
  EXPECT_EQ(vadarc::io::read_file(out), "one\ntwo lines\nthree\n");
}

TEST(CompileFullDialogue, EmptyInputsGiveEmptyFile) {
  vadarc_test::TempDir dir;
  auto c1 = vadarc::write_utterances_csv({}, dir.path() / "a.csv");
  auto out = vadarc::compile_full_dialogue({c1}, dir.path() / "full_dialogue.txt");
  EXPECT_EQ(vadarc::io::read_file(out), "");
  EXPECT_EQ(vadarc::io::read_file(vadarc::compile_full_dialogue({}, dir.path() / "f2.txt")), "");
}

TEST(CompileFullDialogue, MalformedInputIsFatal) {
  vadarc_test::TempDir dir;
  vadarc::io::write_file(dir.path() / "bad.csv", "chapter,seq,utterance\n1,1,\"x\"y\n");
  EXPECT_THROW(vadarc::compile_full_dialogue({dir.path() / "bad.csv"}, dir.path() / "o.txt"),
               vadarc::Error);
  EXPECT_THROW(vadarc::compile_full_dialogue({dir.path() / "missing.csv"}, dir.path() / "o.txt"),
               vadarc::Error);
}

}  // namespace
