#!/usr/bin/env python3
"""Regenerates src/translit_data.cpp.

The file holds two sorted tables:

  kExplicit -- hand-curated replacements (typographic punctuation, Greek
               letters spelled out, common symbols). This is the built-in
               TranslitTable.
  kFold     -- code points whose NFKD decomposition, after dropping combining
               marks and substituting kExplicit entries, comes out as pure
               non-empty ASCII.

Run from the repository root:  python3 tools/gen_translit_data.py
"""

import sys
import unicodedata

GREEK = {
    0x03B1: "alpha", 0x03B2: "beta", 0x03B3: "gamma", 0x03B4: "delta",
    0x03B5: "epsilon", 0x03B6: "zeta", 0x03B7: "eta", 0x03B8: "theta",
    0x03B9: "iota", 0x03BA: "kappa", 0x03BB: "lambda", 0x03BC: "mu",
    0x03BD: "nu", 0x03BE: "xi", 0x03BF: "omicron", 0x03C0: "pi",
    0x03C1: "rho", 0x03C2: "sigma", 0x03C3: "sigma", 0x03C4: "tau",
    0x03C5: "upsilon", 0x03C6: "phi", 0x03C7: "chi", 0x03C8: "psi",
    0x03C9: "omega",
    # uppercase letters get the same spelled-out lowercase names
    0x0391: "alpha", 0x0392: "beta", 0x0393: "gamma", 0x0394: "delta",
    0x0395: "epsilon", 0x0396: "zeta", 0x0397: "eta", 0x0398: "theta",
    0x0399: "iota", 0x039A: "kappa", 0x039B: "lambda", 0x039C: "mu",
    0x039D: "nu", 0x039E: "xi", 0x039F: "omicron", 0x03A0: "pi",
    0x03A1: "rho", 0x03A3: "sigma", 0x03A4: "tau", 0x03A5: "upsilon",
    0x03A6: "phi", 0x03A7: "chi", 0x03A8: "psi", 0x03A9: "omega",
}

PUNCT_AND_SYMBOLS = {
    0x00A0: " ",      # no-break space
    0x00A9: "(c)",    # copyright
    0x00AE: "(R)",    # registered
    0x00B0: " degrees",
    0x00B1: "+/-",
    0x00D7: "x",      # multiplication sign
    0x00F7: "/",      # division sign
    0x2010: "-", 0x2011: "-", 0x2012: "-", 0x2013: "-", 0x2014: "-", 0x2015: "-",
    0x2018: "'", 0x2019: "'", 0x201A: "'", 0x201B: "'",
    0x201C: '"', 0x201D: '"', 0x201E: '"', 0x201F: '"',
    0x2022: "*",      # bullet
    0x2026: "...",    # ellipsis
    0x2032: "'",      # prime
    0x2033: '"',      # double prime
    0x2044: "/",      # fraction slash
    0x2190: "<-", 0x2192: "->",
    0x2212: "-",      # minus sign
    0x2248: "~",
    0x2260: "!=",
    0x2264: "<=", 0x2265: ">=",
}

EXPLICIT = {**GREEK, **PUNCT_AND_SYMBOLS}


def fold(cp: int) -> str | None:
    decomposed = unicodedata.normalize("NFKD", chr(cp))
    out = []
    for ch in decomposed:
        o = ord(ch)
        if o < 0x80:
            out.append(ch)
        elif o in EXPLICIT:
            out.append(EXPLICIT[o])
        elif unicodedata.category(ch) in ("Mn", "Mc", "Me"):
            continue
        else:
            return None  # a non-foldable remnant; fall through to "?"
    result = "".join(out)
    if not result or any(ord(c) >= 0x80 for c in result):
        return None
    return result


def cpp_escape(s: str) -> str:
    out = []
    for ch in s:
        if ch == "\\":
            out.append("\\\\")
        elif ch == '"':
            out.append('\\"')
        else:
            out.append(ch)
    return "".join(out)


def main() -> int:
    folds = []
    for cp in range(0x80, 0x110000):
        if 0xD800 <= cp <= 0xDFFF or cp in EXPLICIT:
            continue
        replacement = fold(cp)
        if replacement is not None:
            folds.append((cp, replacement))

    with open("src/translit_data.cpp", "w", encoding="utf-8") as f:
        f.write("// Generated by tools/gen_translit_data.py -- do not edit by hand.\n")
        f.write("// Unicode data from Python unicodedata (UCD %s).\n\n"
                % unicodedata.unidata_version)
        f.write("#include \"translit_data.hpp\"\n\n")
        f.write("namespace bioc::translit::detail {\n\n")

        f.write("const FoldEntry kExplicit[] = {\n")
        for cp in sorted(EXPLICIT):
            f.write('    {0x%05X, "%s"},\n' % (cp, cpp_escape(EXPLICIT[cp])))
        f.write("};\n")
        f.write("const std::size_t kExplicitCount = sizeof(kExplicit) / sizeof(kExplicit[0]);\n\n")

        f.write("const FoldEntry kFold[] = {\n")
        for cp, replacement in folds:
            f.write('    {0x%05X, "%s"},\n' % (cp, cpp_escape(replacement)))
        f.write("};\n")
        f.write("const std::size_t kFoldCount = sizeof(kFold) / sizeof(kFold[0]);\n\n")
        f.write("} // namespace bioc::translit::detail\n")

    print("explicit entries: %d, fold entries: %d" % (len(EXPLICIT), len(folds)))
    return 0


if __name__ == "__main__":
    sys.exit(main())
