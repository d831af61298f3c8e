#pragma once

// Dialogue text -> lowercase, negation-explicit, stopword-free tokens.
//
// Stages run in a fixed order: normalize_text, tokenize, expand_contractions,
// strip_punctuation, remove_stopwords.

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "vadarc/error.hpp"
#include "vadarc/io.hpp"
#include "vadarc/utf8.hpp"

namespace vadarc {

using Tokens = std::vector<std::string>;

struct TokenList {
  Tokens tokens;
  int chapter_index = 0;
  int seq = 0;
};

inline constexpr std::string_view kNegationToken = "not";

// Lowercases with simple case folding, collapses whitespace runs to one space, trims.
inline std::string normalize_text(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  bool pending_space = false;
  utf8::for_each(text, [&](char32_t cp, std::size_t, std::size_t) {
    if (utf8::is_space(cp)) {
      pending_space = !out.empty();
      return;
    }
    if (pending_space) {
      out.push_back(' ');
      pending_space = false;
    }
    utf8::append(out, utf8::fold_case(cp));
  });
  return out;
}

// Maximal runs of letters/digits, joined across an apostrophe only when a word character
// sits on both sides of it. Everything else, hyphens included, separates tokens.
inline Tokens tokenize(std::string_view text) {
  struct Cp {
    char32_t cp;
    std::size_t off;
    std::size_t len;
  };
  std::vector<Cp> cps;
  cps.reserve(text.size());
  utf8::for_each(text, [&](char32_t cp, std::size_t off, std::size_t len) {
    cps.push_back({cp, off, len});
  });

  Tokens tokens;
  std::string current;
  auto flush = [&] {
    if (!current.empty()) tokens.push_back(std::move(current));
    current.clear();
  };
  for (std::size_t i = 0; i < cps.size(); ++i) {
    const auto& c = cps[i];
    if (utf8::is_word_char(c.cp)) {
      current.append(text.substr(c.off, c.len));
    } else if (utf8::is_apostrophe(c.cp) && !current.empty() && i + 1 < cps.size() &&
               utf8::is_word_char(cps[i + 1].cp)) {
      current.append(text.substr(c.off, c.len));
    } else {
      flush();
    }
  }
  flush();
  return tokens;
}

namespace detail {

inline std::string straighten_apostrophes(std::string_view token) {
  std::string out;
  out.reserve(token.size());
  for (std::size_t i = 0; i < token.size();) {
    if (token.compare(i, 3, "\xE2\x80\x99") == 0) {  // ’
      out.push_back('\'');
      i += 3;
    } else {
      out.push_back(token[i++]);
    }
  }
  return out;
}

}  // namespace detail

// X+n't becomes (X, "not") with irregular auxiliaries resolved; other clitics
// ('s 're 've 'll 'd 'm) are dropped from their host.
inline Tokens expand_contractions(const Tokens& tokens) {
  Tokens out;
  out.reserve(tokens.size() + tokens.size() / 4);
  const std::string not_token(kNegationToken);

  for (const auto& original : tokens) {
    const std::string token = detail::straighten_apostrophes(original);
    std::string bare = token;
    std::erase(bare, '\'');
    if (bare == "cannot") {
      out.emplace_back("can");
      out.push_back(not_token);
      continue;
    }
    if (token.ends_with("n't")) {
      if (token == "won't") {
        out.emplace_back("will");
      } else if (token == "can't") {
        out.emplace_back("can");
      } else if (token == "shan't") {
        out.emplace_back("shall");
      } else if (token != "ain't" && token.size() > 3) {
        out.push_back(token.substr(0, token.size() - 3));
      }
      out.push_back(not_token);
      continue;
    }
    const std::size_t apos = token.rfind('\'');
    if (apos != std::string::npos && apos > 0) {
      const std::string_view suffix = std::string_view(token).substr(apos + 1);
      if (suffix == "s" || suffix == "re" || suffix == "ve" || suffix == "ll" || suffix == "d" ||
          suffix == "m") {
        out.push_back(token.substr(0, apos));
        continue;
      }
    }
    out.push_back(token);
  }
  return out;
}

// Keeps only letters and digits inside each token; drops tokens left empty.
inline Tokens strip_punctuation(const Tokens& tokens) {
  Tokens out;
  out.reserve(tokens.size());
  for (const auto& token : tokens) {
    std::string kept;
    kept.reserve(token.size());
    utf8::for_each(token, [&](char32_t cp, std::size_t off, std::size_t len) {
      if (utf8::is_word_char(cp)) kept.append(token, off, len);
    });
    if (!kept.empty()) out.push_back(std::move(kept));
  }
  return out;
}

struct StopwordSet {
  std::unordered_set<std::string> words;
  std::vector<std::string> sources;

  bool contains(std::string_view token) const { return words.count(std::string(token)) > 0; }
  std::size_t size() const { return words.size(); }
};

// One word per line, '#' starts a comment line. Words are case-folded and deduplicated.
inline StopwordSet load_stopwords(const std::vector<std::filesystem::path>& paths) {
  StopwordSet set;
  for (const auto& path : paths) {
    if (!std::filesystem::is_regular_file(path)) {
      throw Error("stopword file not found: '" + path.string() + "'");
    }
    const std::string text = io::read_file(path);
    if (auto bad = utf8::find_invalid(text)) {
      throw Error("invalid encoding: malformed UTF-8 at byte offset " + std::to_string(*bad) +
                  " in '" + path.string() + "'");
    }
    std::size_t pos = 0;
    while (pos <= text.size()) {
      std::size_t nl = text.find('\n', pos);
      if (nl == std::string::npos) nl = text.size();
      const std::string word = normalize_text(std::string_view(text).substr(pos, nl - pos));
      if (!word.empty() && word.front() != '#') set.words.insert(word);
      pos = nl + 1;
    }
    set.sources.push_back(path.string());
  }
  return set;
}

// Removes stopwords but always keeps the negation token.
inline Tokens remove_stopwords(const Tokens& tokens, const StopwordSet& stops) {
  Tokens out;
  out.reserve(tokens.size());
  for (const auto& token : tokens) {
    if (token == kNegationToken || !stops.contains(token)) out.push_back(token);
  }
  return out;
}

// Intermediate output of every stage, for inspection and tests.
struct PreprocessTrace {
  std::string normalized;
  Tokens tokenized;
  Tokens expanded;
  Tokens stripped;
  Tokens filtered;
};

inline PreprocessTrace trace_preprocess(std::string_view text, const StopwordSet& stops) {
  PreprocessTrace t;
  t.normalized = normalize_text(text);
  t.tokenized = tokenize(t.normalized);
  t.expanded = expand_contractions(t.tokenized);
  t.stripped = strip_punctuation(t.expanded);
  t.filtered = remove_stopwords(t.stripped, stops);
  return t;
}

inline Tokens preprocess_pipeline(std::string_view text, const StopwordSet& stops) {
  return remove_stopwords(
      strip_punctuation(expand_contractions(tokenize(normalize_text(text)))), stops);
}

inline std::filesystem::path filtered_file_name(int chapter_index) {
  return "chapter_" + std::to_string(chapter_index) + "_filtered.txt";
}

// Space-separated tokens, one utterance per line.
inline std::string format_filtered(const std::vector<Tokens>& utterances) {
  std::string out;
  for (const auto& tokens : utterances) {
    for (std::size_t i = 0; i < tokens.size(); ++i) {
      if (i) out.push_back(' ');
      out += tokens[i];
    }
    out.push_back('\n');
  }
  return out;
}

inline std::vector<Tokens> parse_filtered(std::string_view text) {
  std::vector<Tokens> lines;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    Tokens tokens;
    std::string_view line = text.substr(pos, nl - pos);
    std::size_t i = 0;
    while (i < line.size()) {
      std::size_t sp = line.find(' ', i);
      if (sp == std::string_view::npos) sp = line.size();
      if (sp > i) tokens.emplace_back(line.substr(i, sp - i));
      i = sp + 1;
    }
    lines.push_back(std::move(tokens));
    pos = nl + 1;
  }
  return lines;
}

}  // namespace vadarc
