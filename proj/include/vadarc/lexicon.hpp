#pragma once

// NRC-VAD-format lexicon loading and occurrence-weighted Valence/Arousal/Dominance scoring.

#include <charconv>
#include <cmath>
#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <system_error>
#include <unordered_map>
#include <vector>

#include "vadarc/csv.hpp"
#include "vadarc/error.hpp"
#include "vadarc/io.hpp"
#include "vadarc/preprocess.hpp"
#include "vadarc/utf8.hpp"

namespace vadarc {

struct VadScores {
  double valence = 0.0;
  double arousal = 0.0;
  double dominance = 0.0;

  friend bool operator==(const VadScores&, const VadScores&) = default;
};

struct VadLexicon {
  std::unordered_map<std::string, VadScores> entries;
  std::size_t skipped_phrases = 0;
  std::string source_name;
  Warnings warnings;

  std::size_t size() const { return entries.size(); }
};

struct LexiconOptions {
  // Accept scores in [-1,1] and map them onto [0,1] with (x+1)/2.
  bool rescale = false;
};

namespace detail {

inline std::optional<double> parse_double(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return value;
}

inline std::vector<std::string_view> split_tabs(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t pos = 0;
  while (true) {
    std::size_t tab = line.find('\t', pos);
    if (tab == std::string_view::npos) {
      fields.push_back(line.substr(pos));
      break;
    }
    fields.push_back(line.substr(pos, tab - pos));
    pos = tab + 1;
  }
  return fields;
}

// Case-folded with whitespace runs collapsed, so phrases are detectable by an inner space.
inline std::string normalize_term(std::string_view s) { return normalize_text(s); }

}  // namespace detail

// Tab-separated rows: term, valence, arousal, dominance (extra columns ignored). A first row
// whose score columns are not numeric is taken as a header. Multi-word terms are counted in
// skipped_phrases; a repeated term keeps its last row.
inline VadLexicon parse_vad_lexicon(std::string_view text, std::string source_name,
                                    LexiconOptions options = {}) {
  if (auto bad = utf8::find_invalid(text)) {
    throw Error("invalid encoding: malformed UTF-8 at byte offset " + std::to_string(*bad) +
                " in lexicon '" + source_name + "'");
  }
  if (text.starts_with("\xEF\xBB\xBF")) text.remove_prefix(3);

  VadLexicon lex;
  lex.source_name = source_name;
  const std::string where = "lexicon '" + source_name + "'";

  bool first_row = true;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.find_first_not_of(" \t") == std::string_view::npos) continue;

    const auto fields = detail::split_tabs(line);
    if (fields.size() < 4) {
      throw Error(where + ", line " + std::to_string(line_no) +
                  ": expected 4 tab-separated columns (term, valence, arousal, dominance), got " +
                  std::to_string(fields.size()));
    }
    std::optional<double> raw[3] = {detail::parse_double(fields[1]),
                                    detail::parse_double(fields[2]),
                                    detail::parse_double(fields[3])};
    const bool numeric = raw[0] && raw[1] && raw[2];
    if (first_row) {
      first_row = false;
      if (!numeric) continue;  // header
    }
    if (!numeric) {
      throw Error(where + ", line " + std::to_string(line_no) + ": non-numeric score");
    }

    double scores[3];
    for (int i = 0; i < 3; ++i) {
      const double x = *raw[i];
      const double lo = options.rescale ? -1.0 : 0.0;
      if (!(x >= lo && x <= 1.0)) {
        throw Error(where + ", line " + std::to_string(line_no) + ": score out of range [" +
                    (options.rescale ? "-1" : "0") + ",1]: " + std::string(fields[i + 1]) +
                    (options.rescale ? "" : " (use --rescale for [-1,1] lexicons)"));
      }
      scores[i] = options.rescale ? (x + 1.0) / 2.0 : x;
    }

    const std::string term = detail::normalize_term(fields[0]);
    if (term.empty()) {
      throw Error(where + ", line " + std::to_string(line_no) + ": empty term");
    }
    if (term.find(' ') != std::string::npos) {
      ++lex.skipped_phrases;
      continue;
    }
    auto [it, inserted] = lex.entries.insert_or_assign(term, VadScores{scores[0], scores[1], scores[2]});
    if (!inserted) {
      lex.warnings.push_back({where + ", line " + std::to_string(line_no) + ": duplicate term '" +
                              term + "', keeping the later entry"});
    }
  }
  return lex;
}

inline VadLexicon load_vad_lexicon(const std::filesystem::path& path, LexiconOptions options = {}) {
  if (!std::filesystem::is_regular_file(path)) {
    throw Error("lexicon file not found: '" + path.string() + "'");
  }
  return parse_vad_lexicon(io::read_file(path), path.string(), options);
}

// Exact match; the token is expected to be lowercase already.
inline std::optional<VadScores> lookup(const VadLexicon& lexicon, std::string_view token) {
  auto it = lexicon.entries.find(std::string(token));
  if (it == lexicon.entries.end()) return std::nullopt;
  return it->second;
}

// Running sums for an occurrence-weighted mean. Mergeable, so chapter and corpus scores
// come from the same arithmetic.
struct VadAccumulator {
  double sum_valence = 0.0;
  double sum_arousal = 0.0;
  double sum_dominance = 0.0;
  std::size_t matched = 0;
  std::size_t total = 0;

  void add(const VadLexicon& lexicon, const Tokens& tokens) {
    for (const auto& token : tokens) {
      ++total;
      if (auto s = lookup(lexicon, token)) {
        sum_valence += s->valence;
        sum_arousal += s->arousal;
        sum_dominance += s->dominance;
        ++matched;
      }
    }
  }

  void merge(const VadAccumulator& other) {
    sum_valence += other.sum_valence;
    sum_arousal += other.sum_arousal;
    sum_dominance += other.sum_dominance;
    matched += other.matched;
    total += other.total;
  }

  std::optional<VadScores> mean() const {
    if (matched == 0) return std::nullopt;
    const double n = static_cast<double>(matched);
    return VadScores{sum_valence / n, sum_arousal / n, sum_dominance / n};
  }
};

struct ChapterScore {
  int chapter_index = 0;
  std::optional<VadScores> means;  // absent when nothing matched
  std::size_t tokens_total = 0;
  std::size_t tokens_matched = 0;

  double match_rate() const {
    return tokens_total ? static_cast<double>(tokens_matched) / static_cast<double>(tokens_total)
                        : 0.0;
  }
};

inline ChapterScore to_score(int chapter_index, const VadAccumulator& acc) {
  return {chapter_index, acc.mean(), acc.total, acc.matched};
}

inline ChapterScore score_tokens(const Tokens& tokens, const VadLexicon& lexicon,
                                 int chapter_index = 0) {
  VadAccumulator acc;
  acc.add(lexicon, tokens);
  return to_score(chapter_index, acc);
}

struct ChapterTokens {
  int chapter_index = 0;
  std::vector<Tokens> utterances;
};

struct CorpusScores {
  std::vector<ChapterScore> chapters;
  ChapterScore aggregate;  // pooled over every token occurrence, not a mean of means
};

inline CorpusScores score_corpus(const std::vector<ChapterTokens>& per_chapter,
                                 const VadLexicon& lexicon) {
  CorpusScores result;
  VadAccumulator pooled;
  result.chapters.reserve(per_chapter.size());
  for (const auto& chapter : per_chapter) {
    VadAccumulator acc;
    for (const auto& tokens : chapter.utterances) acc.add(lexicon, tokens);
    pooled.merge(acc);
    result.chapters.push_back(to_score(chapter.chapter_index, acc));
  }
  result.aggregate = to_score(0, pooled);
  return result;
}

inline std::string format_number(double value) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
  ensure(ec == std::errc(), "number formatting failed");
  return std::string(buf, ptr);
}

inline constexpr std::string_view kScoresCsvHeader =
    "chapter,valence,arousal,dominance,tokens_total,tokens_matched";

inline std::string format_scores_csv(const CorpusScores& scores) {
  std::string out(kScoresCsvHeader);
  out.push_back('\n');
  auto row = [&](const std::string& label, const ChapterScore& s) {
    out += label;
    if (s.means) {
      out += ',' + format_number(s.means->valence) + ',' + format_number(s.means->arousal) + ',' +
             format_number(s.means->dominance);
    } else {
      out += ",,,";
    }
    out += ',' + std::to_string(s.tokens_total) + ',' + std::to_string(s.tokens_matched) + '\n';
  };
  for (const auto& s : scores.chapters) row(std::to_string(s.chapter_index), s);
  row("all", scores.aggregate);
  return out;
}

inline CorpusScores parse_scores_csv(std::string_view text, const std::string& source_name) {
  const std::string where = "'" + source_name + "'";
  std::vector<csv::Record> records;
  try {
    records = csv::parse(text);
  } catch (const csv::ParseError& e) {
    throw Error("malformed scores file " + where + ", " + e.what());
  }
  if (records.empty() || records.front().fields.size() != 6 ||
      records.front().fields[0] != "chapter") {
    throw Error("malformed scores file " + where + ": expected header '" +
                std::string(kScoresCsvHeader) + "'");
  }
  auto fail = [&](std::size_t line, const std::string& what) -> Error {
    return Error("malformed scores file " + where + ", line " + std::to_string(line) + ": " + what);
  };
  auto parse_count = [&](const std::string& s, std::size_t line) {
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
      throw fail(line, "bad count '" + s + "'");
    }
    return value;
  };

  CorpusScores scores;
  bool saw_aggregate = false;
  for (std::size_t i = 1; i < records.size(); ++i) {
    const auto& rec = records[i];
    if (rec.fields.size() != 6) throw fail(rec.line, "expected 6 fields");
    ChapterScore s;
    const auto& f = rec.fields;
    if (!f[1].empty() || !f[2].empty() || !f[3].empty()) {
      auto v = detail::parse_double(f[1]);
      auto a = detail::parse_double(f[2]);
      auto d = detail::parse_double(f[3]);
      if (!v || !a || !d) throw fail(rec.line, "bad score value");
      s.means = VadScores{*v, *a, *d};
    }
    s.tokens_total = parse_count(f[4], rec.line);
    s.tokens_matched = parse_count(f[5], rec.line);
    if (f[0] == "all") {
      scores.aggregate = s;
      saw_aggregate = true;
    } else {
      s.chapter_index = static_cast<int>(parse_count(f[0], rec.line));
      scores.chapters.push_back(s);
    }
  }
  if (!saw_aggregate) throw Error("malformed scores file " + where + ": missing 'all' row");
  return scores;
}

}  // namespace vadarc
