#!/usr/bin/env python3
"""Regenerates include/bitext/unicode_tables.hpp from Python's unicodedata.

The header carries sorted, inclusive codepoint ranges for the character
classes the library needs, plus the single-codepoint compatibility fold
and simple lowercase maps. Run from the repository root:

    python3 scripts/gen_unicode_tables.py > include/bitext/unicode_tables.hpp
"""

import sys
import unicodedata

MAX_CP = 0x110000

# White_Space has a fixed, short membership list; unicodedata does not
# expose the property directly.
WHITESPACE = [
    (0x0009, 0x000D), (0x0020, 0x0020), (0x0085, 0x0085), (0x00A0, 0x00A0),
    (0x1680, 0x1680), (0x2000, 0x200A), (0x2028, 0x2029), (0x202F, 0x202F),
    (0x205F, 0x205F), (0x3000, 0x3000),
]


def ranges(pred):
    out = []
    start = None
    for cp in range(MAX_CP):
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
        out.append((start, MAX_CP - 1))
    return out


def cat(cp):
    return unicodedata.category(chr(cp))


def emit_ranges(name, rs):
    print(f"inline constexpr CpRange {name}[] = {{")
    for i in range(0, len(rs), 4):
        row = ", ".join(f"{{0x{lo:X}, 0x{hi:X}}}" for lo, hi in rs[i:i + 4])
        print(f"    {row},")
    print("};")
    print()


def main():
    upper = ranges(lambda cp: cat(cp) == "Lu")
    digit = ranges(lambda cp: cat(cp) == "Nd")
    punct = ranges(lambda cp: cat(cp).startswith("P"))
    alnum = ranges(lambda cp: cat(cp)[0] in "LN")

    lower_map = []
    for cp in range(MAX_CP):
        if 0xD800 <= cp <= 0xDFFF:
            continue
        low = chr(cp).lower()
        if len(low) == 1 and low != chr(cp):
            lower_map.append((cp, ord(low)))

    fold_map = []
    for cp in range(MAX_CP):
        if 0xD800 <= cp <= 0xDFFF:
            continue
        folded = unicodedata.normalize("NFKC", chr(cp))
        if folded != chr(cp):
            fold_map.append((cp, folded))

    print("// Generated by scripts/gen_unicode_tables.py from Python")
    print(f"// unicodedata {unicodedata.unidata_version}. Do not edit by hand.")
    print("#ifndef BITEXT_UNICODE_TABLES_HPP")
    print("#define BITEXT_UNICODE_TABLES_HPP")
    print()
    print("#include <cstdint>")
    print()
    print("namespace bitext::tables {")
    print()
    print("struct CpRange {")
    print("  char32_t lo;")
    print("  char32_t hi;")
    print("};")
    print()
    emit_ranges("kUppercase", upper)
    emit_ranges("kDecimalDigit", digit)
    emit_ranges("kPunctuation", punct)
    emit_ranges("kAlphanumeric", alnum)
    emit_ranges("kWhitespace", WHITESPACE)

    print("struct CpPair {")
    print("  char32_t from;")
    print("  char32_t to;")
    print("};")
    print()
    print("inline constexpr CpPair kSimpleLower[] = {")
    for i in range(0, len(lower_map), 6):
        row = ", ".join(f"{{0x{a:X}, 0x{b:X}}}" for a, b in lower_map[i:i + 6])
        print(f"    {row},")
    print("};")
    print()
    print("struct CompatFold {")
    print("  char32_t from;")
    print("  const char* to;  // UTF-8")
    print("};")
    print()
    print("inline constexpr CompatFold kCompatFold[] = {")
    for cp, folded in fold_map:
        utf8 = folded.encode("utf-8")
        lit = "".join(f"\\x{b:02x}" for b in utf8)
        print(f'    {{0x{cp:X}, "{lit}"}},')
    print("};")
    print()
    print("}  // namespace bitext::tables")
    print()
    print("#endif  // BITEXT_UNICODE_TABLES_HPP")


if __name__ == "__main__":
    sys.exit(main())
