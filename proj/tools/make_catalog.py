#!/usr/bin/env python3
"""Regenerates data/catalog.json from the compact table transcription below.

Generators are written in block notation: d(A, B, ...) is the block-diagonal
matrix with the listed blocks. Block names: 1, -1, I, I~ (= diag(-1, 1)),
J, J~ (= [[0, 1], [-1, 0]]), T, T^t, K, each optionally negated.
Translations use e1..e4, e.g. "e1/4 + (e2+e4)/2".
"""

import json
import re
import sys
from fractions import Fraction
from pathlib import Path

BLOCKS = {
    "1": [[1]],
    "I": [[1, 0], [0, 1]],
    "I~": [[-1, 0], [0, 1]],
    "J": [[0, 1], [1, 0]],
    "J~": [[0, 1], [-1, 0]],
    "T": [[0, 1, 0], [0, 0, 1], [1, 0, 0]],
    "T^t": [[0, 0, 1], [1, 0, 0], [0, 1, 0]],
    "K": [[0, 0, 1], [0, 1, 0], [1, 0, 0]],
}


def block_matrix(text):
    m = re.fullmatch(r"\s*(?:d|diag)\((.*)\)\s*", text)
    if not m:
        raise ValueError(f"bad block notation: {text}")
    blocks = []
    for tok in m.group(1).split(","):
        tok = tok.strip()
        sign = 1
        if tok.startswith("-"):
            sign, tok = -1, tok[1:]
        blocks.append([[sign * v for v in row] for row in BLOCKS[tok]])
    n = sum(len(b) for b in blocks)
    out = [[0] * n for _ in range(n)]
    off = 0
    for b in blocks:
        for i, row in enumerate(b):
            for j, v in enumerate(row):
                out[off + i][off + j] = v
        off += len(b)
    return out


def translation(text):
    v = [Fraction(0)] * 4
    for term in re.split(r"\s+\+\s+", text.strip()):
        m = re.fullmatch(r"\(?([^)/]*)\)?/(\d+)", term.strip())
        if not m:
            raise ValueError(f"bad translation term: {term}")
        den = int(m.group(2))
        for sgn, k, idx in re.findall(r"([+-]?)(\d*)e(\d)", m.group(1)):
            coef = int(k) if k else 1
            v[int(idx) - 1] += Fraction(-coef if sgn == "-" else coef, den)
    return [str(x) for x in v]


# (table, holonomy, generator blocks, beta, orientable, diagonal, [(id, [b per generator], sunada)])
TABLES = [
    ("2.1", "Z2", ["d(I,1,-1)"], (3, 3), False, True, [
        ("2", ["e3/2"], "000100"), ("2'", ["(e2+e3)/2"], "000010"), ("2''", ["(e1+e2+e3)/2"], "000001")]),
    ("2.1", "Z2", ["d(I,J)"], (3, 3), False, False, [
        ("3", ["e1/2"], None), ("3'", ["(e1+e2)/2"], None), ("3''", ["(e1+e3+e4)/2"], None),
        ("3'''", ["(e1+e2+e3+e4)/2"], None)]),
    ("2.1", "Z2", ["d(-I,-1,1)"], (1, 3), False, True, [("4", ["e4/2"], "100000")]),
    ("2.1", "Z2", ["d(-I,I)"], (2, 2), True, True, [
        ("5", ["e4/2"], "010000"), ("5'", ["(e3+e4)/2"], "001000")]),
    ("2.1", "Z2", ["d(1,J,-1)"], (2, 2), True, False, [
        ("6", ["e1/2"], None), ("6'", ["(e1+e2+e3)/2"], None)]),
    ("2.2", "Z3", ["d(1,T)"], (2, 1), True, False, [
        ("47", ["e1/3"], None), ("47'", ["(e1+e2+e3+e4)/3"], None)]),
    ("2.3", "Z2^2", ["d(I,1,-1)", "d(I,-1,1)"], (2, 1), False, True, [
        ("7", ["e3/2", "e2/2"], "010200"), ("7'", ["e3/2", "(e1+e2)/2"], "001110"),
        ("8", ["e3/2", "(e2+e4)/2"], "010110"), ("8'", ["e3/2", "(e1+e2+e4)/2"], "001101"),
        ("9", ["e2/2", "e1/2"], "001200"), ("9'", ["e2/2", "(e1+e2)/2"], "010110"),
        ("10", ["e2/2", "(e1+e4)/2"], "001110"), ("10'", ["e2/2", "(e1+e2+e4)/2"], "010101"),
        ("10''", ["(e1+e2)/2", "(e1+e4)/2"], "010020"), ("11", ["(e2+e3)/2", "(e1+e4)/2"], "001020"),
        ("11'", ["(e2+e3)/2", "(e1+e2+e4)/2"], "010011")]),
    ("2.4", "Z2^2", ["d(I,J)", "d(I,-J)"], (2, 1), False, False, [
        ("12", ["e2/2", "e1/2"], None), ("12'", ["(e1+e2)/2", "e1/2"], None)]),
    ("2.5", "Z2^2", ["d(1,I,-1)", "d(1,J,1)"], (1, 0), False, False, [
        ("13", ["e1/2", "e4/2"], None), ("13'", ["(e1+e2+e3)/2", "e4/2"], None),
        ("14", ["(e2+e3)/2", "e1/2"], None), ("14'", ["(e2+e3)/2", "(e1+e2+e3)/2"], None),
        ("15", ["(e2+e3)/2", "(e1+e4)/2"], None), ("15'", ["(e2+e3)/2", "(e1+e2+e3+e4)/2"], None)]),
    ("2.6", "Z2^2", ["d(I,-1,1)", "d(-I,-1,1)"], (1, 1), False, True, [
        ("18", ["e4/2", "(e3+e4)/2"], "110100"), ("19", ["e2/2", "e4/2"], "110100"),
        ("19'", ["(e1+e2)/2", "e4/2"], "110010"), ("20", ["e2/2", "(e3+e4)/2"], "101100"),
        ("20'", ["(e1+e2)/2", "(e3+e4)/2"], "101010"), ("21", ["(e2+e4)/2", "(e3+e4)/2"], "110010"),
        ("21'", ["(e1+e2+e4)/2", "(e3+e4)/2"], "110001")]),
    ("2.7", "Z2^2", ["d(1,J,1)", "d(-1,-I,1)"], (1, 0), False, False, [
        ("22", ["e1/2", "e4/2"], None), ("22'", ["(e1+e2+e3)/2", "e4/2"], None)]),
    ("2.8", "Z2^2", ["d(-I,1,-1)", "d(-I,-1,1)"], (0, 1), False, True, [
        ("23", ["e3/2", "(e2+e4)/2"], "210000"), ("23'", ["e3/2", "(e1+e2+e4)/2"], "201000")]),
    ("2.9", "Z2^2", ["d(-1,-1,1,1)", "d(1,-1,-1,1)"], (1, 0), True, True, [
        ("24", ["e4/2", "(e2+e4)/2"], "030000"), ("25", ["e4/2", "(e1+e2)/2"], "021000"),
        ("26", ["e3/2", "(e1+e2)/2"], "030000"), ("27", ["e3/2", "(e1+e2+e4)/2"], "012000")]),
    ("2.10", "Z2^2", ["d(1,-J,-1)", "d(1,J,-1)"], (1, 0), True, False, [
        ("28", ["e1/2", "(e1+e4)/2"], None)]),
    ("2.11", "Z2^2", ["d(-1,J,1)", "d(1,J,-1)"], (1, 0), True, False, [
        ("29", ["(-e2+e3+e4)/2", "e1/2"], None), ("29'", ["(e3+e4)/2", "e1/2"], None)]),
    ("2.12", "Z4", ["d(I,-J~)"], (2, 1), True, False, [
        ("45", ["e2/4"], None), ("45'", ["(e1+e2)/4"], None)]),
    ("2.13", "Z4", ["d(-1,1,-J~)"], (1, 0), False, False, [("50", ["e2/4"], None)]),
    ("2.14", "Z4", ["d(J,-J~)"], (0, 1), False, False, [("51", ["e2/2"], None)]),
    ("2.15", "Z6", ["d(1,-T)"], (1, 0), False, False, [("64", ["e1/6"], None)]),
    ("2.16", "D3", ["d(1,T)", "d(-1,J,1)"], (0, 0), True, False, [
        ("67", ["e1/3 + (e3+e4)/2", "e4/2"], None)]),
    ("2.17", "Z2^3", ["d(-1,1,1,1)", "d(1,1,-1,1)", "d(-1,-1,1,1)"], (1, 0), False, True, [
        ("33", ["e4/2", "e2/2", "(e1+e4)/2"], "121300"),
        ("34", ["e4/2", "e2/2", "(e1+e3+e4)/2"], "112210"),
        ("35", ["e4/2", "(e2+e4)/2", "(e1+e3)/2"], "130111"),
        ("36", ["e3/2", "e2/2", "e4/2"], "130210"),
        ("37", ["e3/2", "e2/2", "(e1+e4)/2"], "121201"),
        ("38", ["e3/2", "e2/2", "(e1+e3+e4)/2"], "112210"),
        ("39", ["e3/2", "(e1+e2)/2", "e4/2"], "121120"),
        ("40", ["e3/2", "(e1+e2)/2", "(e1+e4)/2"], "130111"),
        ("41", ["e3/2", "(e1+e2)/2", "(e1+e3+e4)/2"], "121120"),
        ("42", ["(e3+e4)/2", "(e2+e4)/2", "(e1+e3)/2"], "130030")]),
    ("2.18", "Z2^3", ["d(1,1,1,-1)", "d(-1,1,-1,-1)", "d(-1,-1,1,1)"], (0, 0), False, True, [
        ("43", ["e3/2", "e2/2", "(e1+e4)/2"], "321100"),
        ("44", ["(e2+e3)/2", "(e2+e4)/2", "(e1+e4)/2"], "330010")]),
    ("2.19", "Z2xZ4", ["d(I~,-J~)", "d(I~,I)"], (1, 1), False, False, [
        ("57", ["e2/4", "(e3+e4)/2"], None), ("58", ["e2/4", "(-e1+e3+e4)/2"], None)]),
    ("2.20", "D4", ["d(J,J~)", "d(J,-1,1)"], (0, 0), False, False, [
        ("54", ["(e1+e4)/2", "e4/2"], None)]),
    ("2.21", "D4", ["d(I~,J~)", "d(-I~,-J)"], (0, 0), False, False, [
        ("56", ["e2/4 + e3/2", "e1/2"], None)]),
    ("2.22", "D4", ["d(I,J~)", "d(I~,J)"], (1, 0), True, False, [
        ("60", ["e1/4", "e2/2"], None), ("61", ["e1/4 + e4/2", "e2/2"], None),
        ("62", ["e1/4 + (e2+e4)/2", "e2/2"], None)]),
]

# Printed header values that contradict the printed trace rows of the same table.
CHI = "the printed header value contradicts the tr_p rows of the same table"
ERRATA = {
    "13": ((2, 1), CHI), "13'": ((2, 1), CHI), "14": ((2, 1), CHI), "14'": ((2, 1), CHI),
    "15": ((2, 1), CHI), "15'": ((2, 1), CHI), "22": ((1, 1), CHI), "22'": ((1, 1), CHI),
    "45": ((2, 2), CHI), "45'": ((2, 2), CHI), "47": ((2, 2), CHI), "47'": ((2, 2), CHI),
    "50": ((1, 1), CHI), "51": ((1, 1), CHI), "64": ((1, 1), CHI), "67": ((1, 0), CHI),
    "54": ((1, 0), CHI),
}
SUNADA_NOTE = {
    "40": "Sunada numbers stored as computed (1,3,0,1,1,1); the printed row 1 3 3 1 1 1 sums to more than |F|-1.",
}
# Printed rows that do not define a group with translation lattice Z^4.
EXCLUDED = {
    "29'": "gamma_1^2 is translation by (e2+e3)/2, so the printed data does not close on the lattice Z^4",
}


def main():
    entries = [{
        "id": "1", "source_table": "torus", "holonomy": "1", "generators": [],
        "expected": {"betti": [4, 6], "orientable": True, "diagonal": True, "sunada": [0, 0, 0, 0, 0, 0]},
    }]
    excluded = []
    for table, hol, blocks, beta, orient, diag, rows in TABLES:
        for gid, bs, sun in rows:
            gens = [{"block": blk, "B": block_matrix(blk), "b": translation(b)} for blk, b in zip(blocks, bs)]
            if gid in EXCLUDED:
                excluded.append({"id": gid, "source_table": table, "reason": EXCLUDED[gid], "generators": gens})
                continue
            notes = []
            row_beta = beta
            if gid in ERRATA:
                row_beta, why = ERRATA[gid]
                notes.append(f"Betti numbers stored as computed {row_beta[0]},{row_beta[1]}; "
                             f"printed {beta[0]},{beta[1]}: {why}.")
            if gid in SUNADA_NOTE:
                notes.append(SUNADA_NOTE[gid])
            exp = {"betti": list(row_beta), "orientable": orient, "diagonal": diag}
            if sun is not None:
                exp["sunada"] = [int(c) for c in sun]
            e = {"id": gid, "source_table": table, "holonomy": hol, "generators": gens, "expected": exp}
            if notes:
                e["note"] = " ".join(notes)
            entries.append(e)
    doc = {
        "schema_version": 1,
        "entry_count": len(entries),
        "count_note": "torus plus every distinct transcribed b-row that defines a group on Z^4; "
                      "groups 72 and 74 have no table data",
        "entries": entries,
        "excluded": excluded,
    }
    out = Path(sys.argv[1]) if len(sys.argv) > 1 else Path(__file__).resolve().parent.parent / "data" / "catalog.json"
    text = json.dumps(doc, indent=1)
    # Flat lists (matrix rows, translations, expected values) on one line.
    text = re.sub(r"\[([^\[\]{}]*)\]", lambda m: "[" + ", ".join(x.strip() for x in m.group(1).split(",")) + "]"
                  if m.group(1).strip() else "[]", text)
    out.write_text(text + "\n")
    print(f"wrote {len(entries)} entries to {out}")


if __name__ == "__main__":
    main()
