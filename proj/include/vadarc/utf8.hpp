#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "vadarc/detail/unicode_tables.hpp"

namespace vadarc::utf8 {

struct Decoded {
  char32_t codepoint;
  std::size_t length;  // bytes consumed
};

// Decodes one scalar value at `pos`. Rejects overlongs, surrogates and values past U+10FFFF.
inline std::optional<Decoded> decode(std::string_view s, std::size_t pos) {
  if (pos >= s.size()) return std::nullopt;
  const auto b0 = static_cast<unsigned char>(s[pos]);
  if (b0 < 0x80) return Decoded{b0, 1};

  std::size_t len = 0;
  char32_t cp = 0;
  char32_t min = 0;
  if ((b0 & 0xE0) == 0xC0) {
    len = 2; cp = b0 & 0x1F; min = 0x80;
  } else if ((b0 & 0xF0) == 0xE0) {
    len = 3; cp = b0 & 0x0F; min = 0x800;
  } else if ((b0 & 0xF8) == 0xF0) {
    len = 4; cp = b0 & 0x07; min = 0x10000;
  } else {
    return std::nullopt;
  }
  if (pos + len > s.size()) return std::nullopt;
  for (std::size_t i = 1; i < len; ++i) {
    const auto b = static_cast<unsigned char>(s[pos + i]);
    if ((b & 0xC0) != 0x80) return std::nullopt;
    cp = (cp << 6) | (b & 0x3F);
  }
  if (cp < min || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) return std::nullopt;
  return Decoded{cp, len};
}

// Byte offset of the first invalid sequence, or nullopt when `s` is valid UTF-8.
inline std::optional<std::size_t> find_invalid(std::string_view s) {
  std::size_t pos = 0;
  while (pos < s.size()) {
    auto d = decode(s, pos);
    if (!d) return pos;
    pos += d->length;
  }
  return std::nullopt;
}

inline void append(std::string& out, char32_t cp) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

// Calls fn(codepoint, byte_offset, byte_length) for every scalar. Invalid bytes are
// reported as U+FFFD with length 1 so callers over validated text never see them.
template <typename Fn>
void for_each(std::string_view s, Fn&& fn) {
  std::size_t pos = 0;
  while (pos < s.size()) {
    auto d = decode(s, pos);
    if (d) {
      fn(d->codepoint, pos, d->length);
      pos += d->length;
    } else {
      fn(char32_t{0xFFFD}, pos, std::size_t{1});
      pos += 1;
    }
  }
}

inline std::size_t length(std::string_view s) {
  std::size_t n = 0;
  for_each(s, [&](char32_t, std::size_t, std::size_t) { ++n; });
  return n;
}

namespace detail {

inline bool in_ranges(std::span<const vadarc::detail::CodepointRange> ranges, char32_t cp) {
  auto it = std::upper_bound(ranges.begin(), ranges.end(), cp,
                             [](char32_t c, const auto& r) { return c < r.first; });
  if (it == ranges.begin()) return false;
  --it;
  return cp <= it->last;
}

}  // namespace detail

// Letters, combining marks and numbers.
inline bool is_word_char(char32_t cp) {
  if (cp < 0x80) {
    return (cp >= 'a' && cp <= 'z') || (cp >= 'A' && cp <= 'Z') || (cp >= '0' && cp <= '9');
  }
  return detail::in_ranges(vadarc::detail::kWordRanges, cp);
}

inline bool is_space(char32_t cp) {
  if (cp < 0x80) return cp == ' ' || (cp >= 0x09 && cp <= 0x0D);
  return detail::in_ranges(vadarc::detail::kSpaceRanges, cp);
}

// Straight and typographic apostrophes.
inline bool is_apostrophe(char32_t cp) { return cp == U'\'' || cp == U'’'; }

// Unicode simple (1:1) case folding.
inline char32_t fold_case(char32_t cp) {
  if (cp < 0x80) return (cp >= 'A' && cp <= 'Z') ? cp + 32 : cp;
  const auto& table = vadarc::detail::kSimpleCaseFold;
  auto it = std::lower_bound(std::begin(table), std::end(table), cp,
                             [](const auto& p, char32_t c) { return p.from < c; });
  if (it != std::end(table) && it->from == cp) return it->to;
  return cp;
}

inline std::string fold_case(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for_each(s, [&](char32_t cp, std::size_t, std::size_t) { append(out, fold_case(cp)); });
  return out;
}

}  // namespace vadarc::utf8
