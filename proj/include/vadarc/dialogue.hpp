#pragma once

// Quoted-dialogue extraction and the per-chapter CSV / compiled full-dialogue files.

#include <algorithm>
#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "vadarc/corpus.hpp"
#include "vadarc/csv.hpp"
#include "vadarc/error.hpp"
#include "vadarc/io.hpp"
#include "vadarc/utf8.hpp"

namespace vadarc {

struct Utterance {
  int chapter_index = 0;
  int seq = 0;
  std::string text;               // contents without the enclosing marks
  std::size_t start_offset = 0;   // byte offsets of `text` within the chapter body
  std::size_t end_offset = 0;

  friend bool operator==(const Utterance&, const Utterance&) = default;
};

struct QuoteStyle {
  std::string open;
  std::string close;

  bool directional() const { return open != close; }
  friend bool operator==(const QuoteStyle&, const QuoteStyle&) = default;
};

// Parses a two-character style spec such as `""`, `“”` or `«»`.
inline QuoteStyle parse_quote_style(std::string_view spec) {
  std::vector<std::string> marks;
  utf8::for_each(spec, [&](char32_t, std::size_t off, std::size_t len) {
    marks.emplace_back(spec.substr(off, len));
  });
  if (marks.size() != 2 || utf8::find_invalid(spec)) {
    throw Error("quote style must be exactly two characters (opening and closing mark), got '" +
                std::string(spec) + "'");
  }
  return {marks[0], marks[1]};
}

struct QuoteConfig {
  std::vector<QuoteStyle> styles{{"\"", "\""}, {"\xE2\x80\x9C", "\xE2\x80\x9D"}};  // "…" and “…”
};

struct ExtractResult {
  std::vector<Utterance> utterances;
  std::size_t dropped_unbalanced = 0;
  Warnings warnings;
};

namespace detail {

inline bool blank_after(std::string_view s) {
  bool any = false;
  bool blank = true;
  utf8::for_each(s, [&](char32_t cp, std::size_t, std::size_t) {
    any = true;
    if (!utf8::is_space(cp)) blank = false;
  });
  return !any || blank;
}

// True when `pos` sits on an LF that ends a paragraph: the following line is blank.
inline bool paragraph_break_at(std::string_view body, std::size_t pos) {
  if (body[pos] != '\n') return false;
  std::size_t next = pos + 1;
  while (next < body.size() && (body[next] == ' ' || body[next] == '\t')) ++next;
  return next < body.size() && body[next] == '\n';
}

}  // namespace detail

// Left-to-right pair scan. A span opened by one style closes only on that style's closing
// mark. A span still open at a paragraph break or the end of the chapter is dropped with a
// warning; so is a directional span that meets its own opening mark again before closing.
inline ExtractResult extract_utterances(const Chapter& chapter, const QuoteConfig& config = {}) {
  ExtractResult result;
  const std::string_view body = chapter.body;

  auto at = [&](std::size_t pos, const std::string& mark) {
    return !mark.empty() && body.compare(pos, mark.size(), mark) == 0;
  };
  auto step = [&](std::size_t pos) {
    auto d = utf8::decode(body, pos);
    return d ? d->length : std::size_t{1};
  };

  const QuoteStyle* open_style = nullptr;
  std::size_t open_pos = 0;
  std::size_t content_start = 0;

  auto drop_open = [&] {
    ++result.dropped_unbalanced;
    result.warnings.push_back({"chapter " + std::to_string(chapter.index) +
                               ": unbalanced opening quote at body byte offset " +
                               std::to_string(open_pos) + " dropped"});
    open_style = nullptr;
  };

  std::size_t pos = 0;
  while (pos < body.size()) {
    if (!open_style) {
      const QuoteStyle* found = nullptr;
      for (const auto& style : config.styles) {
        if (at(pos, style.open)) {
          found = &style;
          break;
        }
      }
      if (found) {
        open_style = found;
        open_pos = pos;
        content_start = pos + found->open.size();
        pos = content_start;
      } else {
        pos += step(pos);
      }
      continue;
    }

    if (at(pos, open_style->close)) {
      std::string_view content = body.substr(content_start, pos - content_start);
      if (!detail::blank_after(content)) {
        Utterance u;
        u.chapter_index = chapter.index;
        u.seq = static_cast<int>(result.utterances.size()) + 1;
        u.text = std::string(content);
        u.start_offset = content_start;
        u.end_offset = pos;
        result.utterances.push_back(std::move(u));
      }
      pos += open_style->close.size();
      open_style = nullptr;
    } else if (open_style->directional() && at(pos, open_style->open)) {
      const QuoteStyle* style = open_style;
      drop_open();
      open_style = style;
      open_pos = pos;
      content_start = pos + style->open.size();
      pos = content_start;
    } else if (detail::paragraph_break_at(body, pos)) {
      drop_open();
      pos += 1;
    } else {
      pos += step(pos);
    }
  }
  if (open_style) drop_open();
  return result;
}

inline std::filesystem::path dialogue_csv_name(int chapter_index) {
  return "chapter_" + std::to_string(chapter_index) + "_dialogues.csv";
}

inline constexpr std::string_view kUtteranceCsvHeader = "chapter,seq,utterance";

inline std::string format_utterances_csv(const std::vector<Utterance>& utterances) {
  std::string out(kUtteranceCsvHeader);
  out.push_back('\n');
  for (const auto& u : utterances) {
    const std::string chapter = std::to_string(u.chapter_index);
    const std::string seq = std::to_string(u.seq);
    csv::append_record(out, {chapter, seq, u.text});
  }
  return out;
}

inline std::filesystem::path write_utterances_csv(const std::vector<Utterance>& utterances,
                                                  const std::filesystem::path& path) {
  io::write_file(path, format_utterances_csv(utterances));
  return path;
}

// Reads a file written by write_utterances_csv. Offsets are not stored and come back as 0.
inline std::vector<Utterance> read_utterances_csv(const std::filesystem::path& path) {
  const std::string text = io::read_file(path);
  const std::string where = "'" + path.string() + "'";
  std::vector<csv::Record> records;
  try {
    records = csv::parse(text);
  } catch (const csv::ParseError& e) {
    throw Error("malformed CSV in " + where + ", " + e.what());
  }
  if (records.empty() || records.front().fields.size() != 3 ||
      records.front().fields[0] != "chapter" || records.front().fields[1] != "seq" ||
      records.front().fields[2] != "utterance") {
    throw Error("malformed CSV in " + where + ", line 1: expected header '" +
                std::string(kUtteranceCsvHeader) + "'");
  }

  auto parse_int = [&](const std::string& s, std::size_t line) {
    if (s.empty() || s.size() > 9 || s.find_first_not_of("0123456789") != std::string::npos) {
      throw Error("malformed CSV in " + where + ", line " + std::to_string(line) +
                  ": expected a positive integer, got '" + s + "'");
    }
    return std::stoi(s);
  };

  std::vector<Utterance> out;
  for (std::size_t i = 1; i < records.size(); ++i) {
    const auto& rec = records[i];
    if (rec.fields.size() != 3) {
      throw Error("malformed CSV in " + where + ", line " + std::to_string(rec.line) +
                  ": expected 3 fields, got " + std::to_string(rec.fields.size()));
    }
    Utterance u;
    u.chapter_index = parse_int(rec.fields[0], rec.line);
    u.seq = parse_int(rec.fields[1], rec.line);
    u.text = rec.fields[2];
    out.push_back(std::move(u));
  }
  return out;
}

// Line breaks inside an utterance become single spaces so each utterance occupies one line.
inline std::string flatten_lines(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) out.push_back(c == '\n' || c == '\r' ? ' ' : c);
  return out;
}

inline std::filesystem::path compile_full_dialogue(
    const std::vector<std::filesystem::path>& per_chapter_csv_paths,
    const std::filesystem::path& out_path) {
  std::vector<Utterance> all;
  for (const auto& path : per_chapter_csv_paths) {
    auto rows = read_utterances_csv(path);
    all.insert(all.end(), std::make_move_iterator(rows.begin()),
               std::make_move_iterator(rows.end()));
  }
  std::stable_sort(all.begin(), all.end(), [](const Utterance& a, const Utterance& b) {
    return a.chapter_index != b.chapter_index ? a.chapter_index < b.chapter_index : a.seq < b.seq;
  });
  std::string out;
  for (const auto& u : all) {
    out += flatten_lines(u.text);
    out.push_back('\n');
  }
  io::write_file(out_path, out);
  return out_path;
}

}  // namespace vadarc
