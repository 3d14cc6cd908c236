#!/usr/bin/env python3
"""Rebuild the packaged golden sets from their seeds and display them.

Covers the size-4 set of length 14 (from the length-10 and length-4
pairs), the size-8 set of length 13 (from the length-8 pair and the
size-4 length-5 set), and the quaternary size-4 set of length 29
(length-3 seed plus doubled length-13 seed), printing verification and
per-row PAPR for each.
"""

import sys
from pathlib import Path

REPO = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(REPO / "src"))

from cskit.construct import Coeffs4, Coeffs8, cs4_from_pairs, cs8_from_pair_and_set, golay_double  # noqa: E402
from cskit.io import read_set_file, serialize_set  # noqa: E402
from cskit.papr import papr  # noqa: E402
from cskit.seeds import seed_pair  # noqa: E402
from cskit.verify import ensure_verified, verify  # noqa: E402

GOLDEN = REPO / "src" / "cskit" / "data" / "golden"


def show(title, cs, packaged=None):
    print(f"== {title}")
    report = verify(cs)
    print(f"   q={cs.q} rows={cs.size} len={cs.length} "
          f"is_cs={report.is_cs} peak={report.peak.to_complex().real:g}")
    for i, row in enumerate(cs.rows):
        bound = cs.size
        p = papr(row, 16).papr
        glyphs = row.render(pretty=True) if cs.q in (2, 4) else row.render()
        print(f"   row {i}: {glyphs}  papr={p:.4f} (bound {bound})")
    if packaged is not None:
        match = serialize_set(cs) == packaged.read_text(encoding="utf-8")
        print(f"   byte-identical to {packaged.name}: {match}")
    print()


def main():
    pair10 = ensure_verified(read_set_file(GOLDEN / "pair_q2_len10.txt")[0])
    pair4 = ensure_verified(read_set_file(GOLDEN / "pair_q2_len4.txt")[0])
    cs14 = cs4_from_pairs(pair10, pair4, Coeffs4(0, 0, 0, 1))
    show("size-4, length 14 (10 + 4)", cs14, GOLDEN / "cs4_q2_len14.txt")

    pair8 = ensure_verified(read_set_file(GOLDEN / "pair_q2_len8.txt")[0])
    set5 = ensure_verified(read_set_file(GOLDEN / "cs4_q2_len5.txt")[0])
    cs13 = cs8_from_pair_and_set(pair8, set5, Coeffs8(0, 1, 1, 0, 0, 0))
    show("size-8, length 13 (8 + 5)", cs13, GOLDEN / "cs8_q2_len13.txt")

    pair3 = seed_pair(4, 3).pair
    pair26 = golay_double(seed_pair(4, 13).pair)
    cs29 = cs4_from_pairs(pair3, pair26, Coeffs4(0, 0, 0, 2))
    show("quaternary size-4, length 29 (3 + 26)", cs29)


if __name__ == "__main__":
    main()
