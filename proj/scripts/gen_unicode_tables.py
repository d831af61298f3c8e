#!/usr/bin/env python3
"""Generate include/vadarc/detail/unicode_tables.hpp from Python's unicodedata.

Word characters are code points in the L*, M*, Nd, Nl and No categories.
Whitespace is Zs plus the ASCII/Unicode line and tab separators.
Case folding is the 1:1 (simple) mapping: str.casefold() when it yields a single
code point, else str.lower() when that does, else identity.
"""
import sys
import unicodedata

WORD_CATS = {"Lu", "Ll", "Lt", "Lm", "Lo", "Mn", "Mc", "Me", "Nd", "Nl", "No"}
EXTRA_SPACE = {0x09, 0x0A, 0x0B, 0x0C, 0x0D, 0x85, 0x2028, 0x2029}


def ranges(pred):
    out = []
    start = None
    for cp in range(0x110000):
        if 0xD800 <= cp <= 0xDFFF:
            ok = False
        else:
            ok = pred(cp)
        if ok and start is None:
            start = cp
        elif not ok and start is not None:
            out.append((start, cp - 1))
            start = None
    if start is not None:
        out.append((start, 0x10FFFF))
    return out


def fold(cp):
    c = chr(cp)
    f = c.casefold()
    if len(f) == 1:
        return ord(f)
    lo = c.lower()
    if len(lo) == 1:
        return ord(lo)
    return cp


def main(path):
    word = ranges(lambda cp: unicodedata.category(chr(cp)) in WORD_CATS)
    space = ranges(lambda cp: cp in EXTRA_SPACE or unicodedata.category(chr(cp)) == "Zs")
    folds = [(cp, fold(cp)) for cp in range(0x110000)
             if not 0xD800 <= cp <= 0xDFFF and fold(cp) != cp]

    def emit_ranges(name, rs):
        lines = [f"inline constexpr CodepointRange {name}[] = {{"]
        for a, b in rs:
            lines.append(f"    {{0x{a:X}, 0x{b:X}}},")
        lines.append("};")
        return "\n".join(lines)

    fold_lines = ["inline constexpr CaseFoldPair kSimpleCaseFold[] = {"]
    for a, b in folds:
        fold_lines.append(f"    {{0x{a:X}, 0x{b:X}}},")
    fold_lines.append("};")

    body = f"""// Generated by scripts/gen_unicode_tables.py from Unicode {unicodedata.unidata_version}. Do not edit.
#pragma once

#include <cstdint>

namespace vadarc::detail {{

struct CodepointRange {{
  char32_t first;
  char32_t last;
}};

struct CaseFoldPair {{
  char32_t from;
  char32_t to;
}};

{emit_ranges("kWordRanges", word)}

{emit_ranges("kSpaceRanges", space)}

{chr(10).join(fold_lines)}

}}  // namespace vadarc::detail
"""
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(body)


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "include/vadarc/detail/unicode_tables.hpp")
