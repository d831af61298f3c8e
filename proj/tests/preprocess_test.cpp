#include <gtest/gtest.h>

#include <random>
#include <string>
#include <vector>

#include "test_util.hpp"
#include "vadarc/preprocess.hpp"
#include "vadarc/utf8.hpp"

namespace {

using vadarc::Tokens;

vadarc::StopwordSet stops_of(std::initializer_list<const char*> words) {
  vadarc::StopwordSet s;
  for (const char* w : words) s.words.insert(w);
  return s;
}

std::size_t char_count(const Tokens& tokens) {
  std::size_t n = 0;
  for (const auto& t : tokens) n += vadarc::utf8::length(t);
  return n;
}

std::string join(const Tokens& tokens) {
  std::string s;
  for (const auto& t : tokens) s += (s.empty() ? "" : " ") + t;
  return s;
}

TEST(NormalizeText, CaseAndSpaces) {
  EXPECT_EQ(vadarc::normalize_text("Good  Morning "), "good morning");
  EXPECT_EQ(vadarc::normalize_text("HAPPY"), "happy");
  EXPECT_EQ(vadarc::normalize_text(""), "");
  EXPECT_EQ(vadarc::normalize_text("\t Tab\nand NBSP  "), "tab and nbsp");
}

TEST(NormalizeText, HappyVariantsAreIdentical) {
  EXPECT_EQ(vadarc::normalize_text("Happy"), vadarc::normalize_text("happy"));
  EXPECT_EQ(vadarc::normalize_text("HAPPY"), vadarc::normalize_text("happy"));
}

TEST(NormalizeText, UnicodeSimpleFolding) {
  EXPECT_EQ(vadarc::normalize_text("ÉLAN Ωmega ДОМ"), "élan ωmega дом");
  EXPECT_EQ(vadarc::normalize_text("STRASSE ß"), "strasse ß");  // simple folding keeps ß
}

TEST(Tokenize, KeepsInternalApostrophes) {
  EXPECT_EQ(vadarc::tokenize("don't stop"), (Tokens{"don't", "stop"}));
  EXPECT_EQ(vadarc::tokenize("don’t stop"), (Tokens{"don’t", "stop"}));
}

TEST(Tokenize, SplitsHyphens) { EXPECT_EQ(vadarc::tokenize("frying-pan"), (Tokens{"frying", "pan"})); }

TEST(Tokenize, PunctuationBoundaries) {
  EXPECT_EQ(vadarc::tokenize("well... yes!"), (Tokens{"well", "yes"}));
  EXPECT_EQ(vadarc::tokenize("'tis goin' — “ok”"), (Tokens{"tis", "goin", "ok"}));
  EXPECT_EQ(vadarc::tokenize("year 1843, café"), (Tokens{"year", "1843", "café"}));
  EXPECT_EQ(vadarc::tokenize(""), Tokens{});
}

TEST(ExpandContractions, NegationForms) {
  EXPECT_EQ(vadarc::expand_contractions({"don't"}), (Tokens{"do", "not"}));
  EXPECT_EQ(vadarc::expand_contractions({"won't"}), (Tokens{"will", "not"}));
  EXPECT_EQ(vadarc::expand_contractions({"cannot"}), (Tokens{"can", "not"}));
  EXPECT_EQ(vadarc::expand_contractions({"can't"}), (Tokens{"can", "not"}));
  EXPECT_EQ(vadarc::expand_contractions({"shan't"}), (Tokens{"shall", "not"}));
  EXPECT_EQ(vadarc::expand_contractions({"ain't"}), (Tokens{"not"}));
  EXPECT_EQ(vadarc::expand_contractions({"couldn’t"}), (Tokens{"could", "not"}));
  EXPECT_EQ(vadarc::expand_contractions({"isn't", "x"}), (Tokens{"is", "not", "x"}));
}

TEST(ExpandContractions, OtherCliticsDropped) {
  EXPECT_EQ(vadarc::expand_contractions({"bilbo's", "we're", "i've", "you'll", "he'd", "i'm"}),
            (Tokens{"bilbo", "we", "i", "you", "he", "i"}));
  EXPECT_EQ(vadarc::expand_contractions({"o'clock", "rock'n'roll"}),
            (Tokens{"o'clock", "rock'n'roll"}));
}

TEST(StripPunctuation, Examples) {
  EXPECT_EQ(vadarc::strip_punctuation(vadarc::expand_contractions({"bilbo's"})), (Tokens{"bilbo"}));
  EXPECT_EQ(vadarc::strip_punctuation({"bilbo's"}), (Tokens{"bilbos"}));
  EXPECT_EQ(vadarc::strip_punctuation({"—"}), Tokens{});
  EXPECT_EQ(vadarc::strip_punctuation({"o'clock"}), (Tokens{"oclock"}));
}

TEST(LoadStopwords, UnionOfFiles) {
  vadarc_test::TempDir dir;
  vadarc::io::write_file(dir.path() / "a.txt", "the\nand");
  vadarc::io::write_file(dir.path() / "b.txt", "# extended\nAND\n\n  would \n");
  auto set = vadarc::load_stopwords({dir.path() / "a.txt", dir.path() / "b.txt"});
  EXPECT_EQ(set.size(), 3u);
  EXPECT_TRUE(set.contains("the"));
  EXPECT_TRUE(set.contains("and"));
  EXPECT_TRUE(set.contains("would"));
  EXPECT_FALSE(set.contains("# extended"));
  EXPECT_EQ(set.sources.size(), 2u);
}

TEST(LoadStopwords, EmptyFileEmptySet) {
  vadarc_test::TempDir dir;
  vadarc::io::write_file(dir.path() / "e.txt", "");
  EXPECT_EQ(vadarc::load_stopwords({dir.path() / "e.txt"}).size(), 0u);
}

TEST(LoadStopwords, MissingFileNamesPath) {
  try {
    vadarc::load_stopwords({"/nonexistent/stops.txt"});
    FAIL();
  } catch (const vadarc::Error& e) {
    EXPECT_NE(std::string(e.what()).find("/nonexistent/stops.txt"), std::string::npos);
  }
}

TEST(LoadStopwords, BundledExtendedListCoversModalFillers) {
  auto set = vadarc::load_stopwords({std::filesystem::path(VADARC_DATA_DIR) / "stopwords" /
                                     "english_extended.txt"});
  EXPECT_TRUE(set.contains("would"));
  EXPECT_TRUE(set.contains("could"));
  EXPECT_TRUE(set.contains("may"));
  EXPECT_TRUE(set.contains("come"));
  auto baseline = vadarc::load_stopwords({std::filesystem::path(VADARC_DATA_DIR) / "stopwords" /
                                          "english_baseline.txt"});
  EXPECT_TRUE(baseline.contains("the"));
  EXPECT_FALSE(baseline.contains("would"));
}

TEST(RemoveStopwords, Examples) {
  EXPECT_EQ(vadarc::remove_stopwords({"the", "good", "and", "time"}, stops_of({"the", "and"})),
            (Tokens{"good", "time"}));
  EXPECT_EQ(vadarc::remove_stopwords({"not", "lost"}, stops_of({"not"})), (Tokens{"not", "lost"}));
  EXPECT_EQ(vadarc::remove_stopwords({}, stops_of({"x"})), Tokens{});
}

TEST(PreprocessPipeline, GoldenTrace) {
  const auto stops = stops_of({"i", "do", "like", "the"});
  const auto t = vadarc::trace_preprocess("\"I don't like the dark!\"", stops);
  EXPECT_EQ(t.normalized, "\"i don't like the dark!\"");
  EXPECT_EQ(t.tokenized, (Tokens{"i", "don't", "like", "the", "dark"}));
  EXPECT_EQ(t.expanded, (Tokens{"i", "do", "not", "like", "the", "dark"}));
  EXPECT_EQ(t.stripped, (Tokens{"i", "do", "not", "like", "the", "dark"}));
  EXPECT_EQ(t.filtered, (Tokens{"not", "dark"}));
  EXPECT_EQ(vadarc::preprocess_pipeline("\"I don't like the dark!\"", stops), t.filtered);
}

TEST(PreprocessPipeline, TrivialCases) {
  const vadarc::StopwordSet none;
  EXPECT_EQ(vadarc::preprocess_pipeline("", none), Tokens{});
  EXPECT_EQ(vadarc::preprocess_pipeline("GOOD good Good", none), (Tokens{"good", "good", "good"}));
}

TEST(FilteredFormat, RoundTrip) {
  const std::vector<Tokens> lines = {{"a", "b"}, {}, {"c"}};
  const std::string text = vadarc::format_filtered(lines);
  EXPECT_EQ(text, "a b\n\nc\n");
  EXPECT_EQ(vadarc::parse_filtered(text), lines);
  EXPECT_TRUE(vadarc::parse_filtered("").empty());
}

// Sentences mixing case, punctuation, contractions and non-ASCII letters.
std::string random_sentence(std::mt19937& rng, bool force_negation) {
  static const std::vector<std::string> words = {
      "The", "GOOD", "time", "o'clock", "Baggins's", "frying-pan", "…", "—", "!", "1843",
      "café", "ÉTÉ", "we're", "I'm", "'tis", "goin'", "“Well”", "rock'n'roll", "  ", "x-y-z",
      "Thorin’s", "can", "not", "dark,", "Ωmega"};
  static const std::vector<std::string> negations = {
      "don't", "DON'T", "won't", "can't", "shan't", "ain't", "isn’t", "couldn't", "Wouldn't",
      "didn’t", "mustn't", "needn't", "cannot", "haven't", "doesn't"};
  std::uniform_int_distribution<std::size_t> w(0, words.size() - 1);
  std::uniform_int_distribution<std::size_t> ng(0, negations.size() - 1);
  std::uniform_int_distribution<int> len(0, 14);
  std::string s;
  const int n = len(rng);
  const int neg_at = force_negation ? static_cast<int>(rng() % (n + 1)) : -1;
  for (int i = 0; i <= n; ++i) {
    if (i == neg_at) s += " " + negations[ng(rng)] + " ";
    if (i < n) s += words[w(rng)] + (rng() % 3 ? " " : "");
  }
  return s;
}

TEST(PreprocessProperty, NegationPreserved) {
  std::mt19937 rng(3);
  auto stops = vadarc::load_stopwords(
      {std::filesystem::path(VADARC_DATA_DIR) / "stopwords" / "english_baseline.txt",
       std::filesystem::path(VADARC_DATA_DIR) / "stopwords" / "english_extended.txt"});
  for (int i = 0; i < 500; ++i) {
    const std::string s = random_sentence(rng, true);
    const Tokens out = vadarc::preprocess_pipeline(s, stops);
    EXPECT_NE(std::find(out.begin(), out.end(), "not"), out.end()) << s;
  }
}

TEST(PreprocessProperty, AlphabetIdempotenceMonotonicity) {
  std::mt19937 rng(5);
  const auto stops = stops_of({"the", "we", "i", "can", "tis", "do", "is", "not"});
  for (int i = 0; i < 1000; ++i) {
    const std::string s = random_sentence(rng, rng() % 2);
    const auto t = vadarc::trace_preprocess(s, stops);

    for (const auto& tok : t.filtered) {
      EXPECT_FALSE(tok.empty());
      EXPECT_EQ(vadarc::utf8::fold_case(tok), tok);
      vadarc::utf8::for_each(tok, [&](char32_t cp, std::size_t, std::size_t) {
        EXPECT_TRUE(vadarc::utf8::is_word_char(cp)) << tok;
      });
      EXPECT_TRUE(tok == "not" || !stops.contains(tok)) << tok;
    }

    EXPECT_EQ(vadarc::preprocess_pipeline(join(t.filtered), stops), t.filtered) << s;

    EXPECT_LE(vadarc::utf8::length(t.normalized), vadarc::utf8::length(s));
    EXPECT_LE(char_count(t.tokenized), vadarc::utf8::length(t.normalized));
    EXPECT_LE(char_count(t.stripped), char_count(t.expanded));
    EXPECT_LE(char_count(t.filtered), char_count(t.stripped));
    EXPECT_LE(t.expanded.size(), 2 * t.tokenized.size());
  }
}

}  // namespace
