#!/usr/bin/env python3
"""Regenerates src/text/unicode_tables.cpp from Python's unicodedata.

The fold table maps each code point to the fixpoint of
NFKC-normalize + lowercase, expanded so that every code point in a
replacement string maps to itself.  Category tables are stored as
sorted inclusive ranges.
"""

import sys
import unicodedata

MAX_CP = 0x10FFFF


def fold_one(cp: int) -> str:
    s = chr(cp)
    for _ in range(8):
        t = unicodedata.normalize("NFKC", s).lower()
        if t == s:
            return s
        s = t
    return s


def build_fold_table():
    raw = {}
    for cp in range(MAX_CP + 1):
        if 0xD800 <= cp <= 0xDFFF:
            continue
        f = fold_one(cp)
        if f != chr(cp):
            raw[cp] = f

    # expand until every output code point is itself a fixpoint
    def expand(s: str) -> str:
        out = []
        for ch in s:
            r = raw.get(ord(ch))
            if r is None or r == ch:
                out.append(ch)
            else:
                out.append(expand(r))
        return "".join(out)

    return {cp: expand(s) for cp, s in raw.items()}


def ranges_for(pred):
    ranges = []
    lo = None
    for cp in range(MAX_CP + 1):
        if 0xD800 <= cp <= 0xDFFF:
            ok = False
        else:
            ok = pred(cp)
        if ok and lo is None:
            lo = cp
        elif not ok and lo is not None:
            ranges.append((lo, cp - 1))
            lo = None
    if lo is not None:
        ranges.append((lo, MAX_CP))
    return ranges


def escape_utf8(s: str) -> str:
    out = []
    for b in s.encode("utf-8"):
        if 0x20 <= b < 0x7F and chr(b) not in '"\\':
            out.append(chr(b))
        else:
            out.append("\\%03o" % b)
    return "".join(out)


def main():
    fold = build_fold_table()
    cat = lambda cp: unicodedata.category(chr(cp))
    punct_sym = ranges_for(lambda cp: cat(cp)[0] in "PS")
    space = ranges_for(lambda cp: chr(cp).isspace() or cat(cp)[0] == "Z")
    letter = ranges_for(lambda cp: cat(cp)[0] == "L")
    digit = ranges_for(lambda cp: cat(cp) == "Nd")

    w = sys.stdout.write
    w("// Generated by tools/gen_unicode_tables.py (Unicode data from Python %s).\n" % ".".join(map(str, sys.version_info[:3])))
    w("// Do not edit by hand.\n")
    w('#include "caudit/text/unicode_tables.hpp"\n\n')
    w("namespace caudit::uni {\n\n")

    w("const FoldEntry kFoldTable[] = {\n")
    for cp in sorted(fold):
        w('    {0x%X, "%s"},\n' % (cp, escape_utf8(fold[cp])))
    w("};\n")
    w("const std::size_t kFoldTableSize = sizeof(kFoldTable) / sizeof(kFoldTable[0]);\n\n")

    for name, ranges in (
        ("kPunctSymbolRanges", punct_sym),
        ("kSpaceRanges", space),
        ("kLetterRanges", letter),
        ("kDigitRanges", digit),
    ):
        w("const CpRange %s[] = {\n" % name)
        for lo, hi in ranges:
            w("    {0x%X, 0x%X},\n" % (lo, hi))
        w("};\n")
        w("const std::size_t %sSize = sizeof(%s) / sizeof(%s[0]);\n\n" % (name, name, name))

    w("}  // namespace caudit::uni\n")


if __name__ == "__main__":
    main()
