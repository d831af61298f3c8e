#pragma once

// Loading a plain-text novel and cutting it into chapters at heading lines.

#include <cstddef>
#include <filesystem>
#include <optional>
#include <regex>
#include <string>
#include <string_view>
#include <vector>

#include "vadarc/error.hpp"
#include "vadarc/io.hpp"
#include "vadarc/utf8.hpp"

namespace vadarc {

struct RawCorpus {
  std::string text;  // valid UTF-8, LF line endings, no BOM
  std::string source_name;
};

struct Chapter {
  int index = 0;
  std::string heading;  // the heading line including its terminating LF, if any
  std::string body;     // everything after the heading line up to the next heading
  std::size_t start_offset = 0;
  std::size_t end_offset = 0;

  // Heading line without the line terminator.
  std::string_view title() const {
    std::string_view h = heading;
    if (!h.empty() && h.back() == '\n') h.remove_suffix(1);
    return h;
  }
};

// Strips a UTF-8 BOM and converts CRLF / lone CR to LF. Nothing else is altered.
inline RawCorpus normalize_corpus(std::string_view raw, std::string source_name = {}) {
  if (auto bad = utf8::find_invalid(raw)) {
    throw Error("invalid encoding: malformed UTF-8 at byte offset " + std::to_string(*bad) +
                (source_name.empty() ? "" : " in '" + source_name + "'"));
  }
  if (raw.starts_with("\xEF\xBB\xBF")) raw.remove_prefix(3);

  RawCorpus corpus;
  corpus.source_name = std::move(source_name);
  corpus.text.reserve(raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (raw[i] == '\r') {
      corpus.text.push_back('\n');
      if (i + 1 < raw.size() && raw[i + 1] == '\n') ++i;
    } else {
      corpus.text.push_back(raw[i]);
    }
  }
  return corpus;
}

// Parses a roman numeral in canonical subtractive form (case-insensitive).
inline std::optional<int> parse_roman(std::string_view s) {
  if (s.empty()) return std::nullopt;
  auto value = [](char c) -> int {
    switch (c) {
      case 'i': case 'I': return 1;
      case 'v': case 'V': return 5;
      case 'x': case 'X': return 10;
      case 'l': case 'L': return 50;
      case 'c': case 'C': return 100;
      case 'd': case 'D': return 500;
      case 'm': case 'M': return 1000;
      default: return 0;
    }
  };
  int total = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    int v = value(s[i]);
    if (v == 0) return std::nullopt;
    int next = i + 1 < s.size() ? value(s[i + 1]) : 0;
    total += (v < next) ? -v : v;
  }
  // Reject non-canonical spellings such as "iiii" or "vx" by re-encoding.
  static constexpr std::pair<int, std::string_view> kDigits[] = {
      {1000, "m"}, {900, "cm"}, {500, "d"}, {400, "cd"}, {100, "c"}, {90, "xc"}, {50, "l"},
      {40, "xl"},  {10, "x"},   {9, "ix"},  {5, "v"},   {4, "iv"},  {1, "i"}};
  if (total <= 0 || total >= 4000) return std::nullopt;
  std::string canon;
  int rest = total;
  for (auto [v, digits] : kDigits) {
    while (rest >= v) {
      canon += digits;
      rest -= v;
    }
  }
  if (canon.size() != s.size()) return std::nullopt;
  for (std::size_t i = 0; i < s.size(); ++i) {
    char c = s[i];
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c + 32);
    if (c != canon[i]) return std::nullopt;
  }
  return total;
}

// Heading recognizer. The default accepts lines such as "Chapter 1", "CHAPTER IV. The Title"
// or "chapter 12: A Title". A custom expression is matched case-insensitively against each
// line (without its LF); capture group 1, when present, supplies the chapter number.
class HeadingPattern {
 public:
  static constexpr std::string_view kDefault =
      R"(^[ \t]*chapter[ \t]+([0-9]+|[ivxlcdm]+)\b.*$)";

  HeadingPattern() : HeadingPattern(std::string(kDefault)) {}

  explicit HeadingPattern(std::string expression) : expression_(std::move(expression)) {
    try {
      regex_ = std::regex(expression_, std::regex::ECMAScript | std::regex::icase);
    } catch (const std::regex_error& e) {
      throw Error("invalid heading pattern '" + expression_ + "': " + e.what());
    }
  }

  const std::string& expression() const { return expression_; }

  struct Match {
    std::optional<int> number;  // absent when the pattern has no usable number group
  };

  std::optional<Match> match(std::string_view line) const {
    std::match_results<std::string_view::const_iterator> m;
    if (!std::regex_search(line.begin(), line.end(), m, regex_)) return std::nullopt;
    if (m.position(0) != 0) return std::nullopt;  // anchored at line start
    Match result;
    if (m.size() > 1 && m[1].matched) {
      std::string num = m[1].str();
      if (!num.empty() && num.find_first_not_of("0123456789") == std::string::npos) {
        if (num.size() > 9) return std::nullopt;
        result.number = std::stoi(num);
      } else if (auto roman = parse_roman(num)) {
        result.number = *roman;
      } else if (expression_ == kDefault) {
        return std::nullopt;  // e.g. "Chapter mdcd": not a numeral, so not a heading
      }
    }
    return result;
  }

 private:
  std::string expression_;
  std::regex regex_;
};

struct SegmentResult {
  std::vector<Chapter> chapters;
  std::size_t front_matter_bytes = 0;
  Warnings warnings;
};

inline SegmentResult segment_chapters(const RawCorpus& corpus,
                                      const HeadingPattern& pattern = HeadingPattern()) {
  const std::string_view text = corpus.text;

  struct HeadingHit {
    std::size_t start;
    std::size_t line_end;  // one past the LF, or text.size()
    std::optional<int> number;
  };
  std::vector<HeadingHit> hits;

  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t nl = text.find('\n', pos);
    std::size_t content_end = nl == std::string_view::npos ? text.size() : nl;
    std::size_t line_end = nl == std::string_view::npos ? text.size() : nl + 1;
    if (auto m = pattern.match(text.substr(pos, content_end - pos))) {
      hits.push_back({pos, line_end, m->number});
    }
    pos = line_end;
  }

  if (hits.empty()) {
    throw Error("no chapters found" +
                (corpus.source_name.empty() ? std::string() : " in '" + corpus.source_name + "'") +
                "; override the heading pattern (--heading-pattern) if chapters use a "
                "different heading style");
  }

  SegmentResult result;
  result.front_matter_bytes = hits.front().start;

  bool sequential = true;
  int previous = 0;
  for (const auto& hit : hits) {
    if (!hit.number || *hit.number <= previous) {
      sequential = false;
      break;
    }
    previous = *hit.number;
  }
  if (!sequential) {
    result.warnings.push_back(
        {"chapter numbers are missing, duplicated or out of order; keeping document order "
         "and renumbering chapters 1.." + std::to_string(hits.size())});
  }

  result.chapters.reserve(hits.size());
  for (std::size_t i = 0; i < hits.size(); ++i) {
    const auto& hit = hits[i];
    const std::size_t end = i + 1 < hits.size() ? hits[i + 1].start : text.size();
    Chapter ch;
    ch.index = sequential ? *hit.number : static_cast<int>(i + 1);
    ch.heading = std::string(text.substr(hit.start, hit.line_end - hit.start));
    ch.body = std::string(text.substr(hit.line_end, end - hit.line_end));
    ch.start_offset = hit.start;
    ch.end_offset = end;
    result.chapters.push_back(std::move(ch));
  }
  return result;
}

inline std::filesystem::path chapter_file_name(int index) {
  return "chapter_" + std::to_string(index) + ".txt";
}

// Writes chapter_<index>.txt (heading + body) per chapter; returns the paths in index order.
inline std::vector<std::filesystem::path> write_chapter_files(const std::vector<Chapter>& chapters,
                                                              const std::filesystem::path& out_dir) {
  io::ensure_directory(out_dir);
  std::vector<std::filesystem::path> paths;
  paths.reserve(chapters.size());
  for (const auto& ch : chapters) {
    auto path = out_dir / chapter_file_name(ch.index);
    io::write_file(path, ch.heading + ch.body);
    paths.push_back(std::move(path));
  }
  return paths;
}

// Inverse of write_chapter_files for one file: the first line is the heading.
inline Chapter read_chapter_file(const std::filesystem::path& path, int index) {
  std::string text = io::read_file(path);
  if (auto bad = utf8::find_invalid(text)) {
    throw Error("invalid encoding: malformed UTF-8 at byte offset " + std::to_string(*bad) +
                " in '" + path.string() + "'");
  }
  Chapter ch;
  ch.index = index;
  std::size_t nl = text.find('\n');
  std::size_t split = nl == std::string::npos ? text.size() : nl + 1;
  ch.heading = text.substr(0, split);
  ch.body = text.substr(split);
  ch.start_offset = 0;
  ch.end_offset = text.size();
  return ch;
}

}  // namespace vadarc
