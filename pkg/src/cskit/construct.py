"""Complementary-set constructors.

Two concatenation rules produce sets of size 4 (from two Golay pairs of
lengths M and N) and size 8 (from a pair of length M and a size-4 set of
length P), at lengths M+N and M+P. Together with vertical stacking this
reaches set sizes 4n and 8n. The classical Golay doubling and Turyn
product supply composite-length pairs from primitive seeds.

Every constructor re-verifies its output before returning it; a returned
set always has verified=True.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence as Seq

from .algebra import Sequence
from .errors import InputError
from .verify import ComplementarySet, ensure_verified, verify


def _require_pair(pair: ComplementarySet, name: str) -> ComplementarySet:
    if pair.size != 2:
        raise InputError(f"{name} must have exactly 2 rows, got {pair.size}")
    if not pair.verified:
        raise InputError(f"{name} is not verified; run ensure_verified first")
    return pair


def _require_verified(cs: ComplementarySet, name: str) -> ComplementarySet:
    if not cs.verified:
        raise InputError(f"{name} is not verified; run ensure_verified first")
    return cs


def _recheck(rows: tuple[Sequence, ...], what: str) -> ComplementarySet:
    built = ComplementarySet(rows)
    report = verify(built)
    if not report.is_cs:
        raise RuntimeError(
            f"internal error: {what} failed verification "
            f"(first defect at shift {report.first_defect_shift})"
        )
    return ensure_verified(built)


@dataclass(frozen=True)
class Coeffs4:
    """Unimodular constants (as U_q exponents) steering the size-4 rule.

    Admissible when x0*conj(y0) + x1*conj(y1) = 0, i.e. when
    (x0 - y0) == (x1 - y1) + q/2 (mod q). That needs an even q.
    Exponents are reduced mod q on use.
    """

    x0: int
    x1: int
    y0: int
    y1: int

    def reduced(self, q: int) -> "Coeffs4":
        return Coeffs4(self.x0 % q, self.x1 % q, self.y0 % q, self.y1 % q)

    def violations(self, q: int) -> list[str]:
        if q % 2:
            return [f"q={q} is odd, but x0*conj(y0) + x1*conj(y1) = 0 needs -1 in U_q"]
        c = self.reduced(q)
        lhs = (c.x0 - c.y0) % q
        rhs = (c.x1 - c.y1 + q // 2) % q
        if lhs != rhs:
            return [
                "x0*conj(y0) + x1*conj(y1) != 0: "
                f"(x0-y0) mod {q} = {lhs} but (x1-y1) + {q // 2} mod {q} = {rhs}"
            ]
        return []

    def is_admissible(self, q: int) -> bool:
        return not self.violations(q)


@dataclass(frozen=True)
class Coeffs8:
    """Unimodular constants (as U_q exponents) steering the size-8 rule.

    Admissible when x0*conj(y0) + x2*conj(y1) = 0 and
    x1*conj(y0) + x3*conj(y1) = 0.
    """

    x0: int
    x1: int
    x2: int
    x3: int
    y0: int
    y1: int

    def reduced(self, q: int) -> "Coeffs8":
        return Coeffs8(*(v % q for v in (self.x0, self.x1, self.x2, self.x3, self.y0, self.y1)))

    def violations(self, q: int) -> list[str]:
        if q % 2:
            return [f"q={q} is odd, but the defining identities need -1 in U_q"]
        c = self.reduced(q)
        out = []
        if (c.x0 - c.y0) % q != (c.x2 - c.y1 + q // 2) % q:
            out.append(
                "x0*conj(y0) + x2*conj(y1) != 0: "
                f"(x0-y0) mod {q} = {(c.x0 - c.y0) % q} but "
                f"(x2-y1) + {q // 2} mod {q} = {(c.x2 - c.y1 + q // 2) % q}"
            )
        if (c.x1 - c.y0) % q != (c.x3 - c.y1 + q // 2) % q:
            out.append(
                "x1*conj(y0) + x3*conj(y1) != 0: "
                f"(x1-y0) mod {q} = {(c.x1 - c.y0) % q} but "
                f"(x3-y1) + {q // 2} mod {q} = {(c.x3 - c.y1 + q // 2) % q}"
            )
        return out

    def is_admissible(self, q: int) -> bool:
        return not self.violations(q)


def cs4_from_pairs(
    pair_a: ComplementarySet, pair_b: ComplementarySet, coeffs: Coeffs4
) -> ComplementarySet:
    """Size-4 set of length M+N from Golay pairs of lengths M and N.

    Rows are x0*a||y0*c, x0*b||y0*d, x1*a||y1*c, x1*b||y1*d.
    """
    _require_pair(pair_a, "pair_a")
    _require_pair(pair_b, "pair_b")
    if pair_a.alphabet != pair_b.alphabet:
        raise InputError("both pairs must share one alphabet")
    q = pair_a.q
    bad = coeffs.violations(q)
    if bad:
        raise InputError("inadmissible coefficients: " + "; ".join(bad))
    c4 = coeffs.reduced(q)
    a, b = pair_a.rows
    c, d = pair_b.rows
    rows = (
        a.scale(c4.x0).concat(c.scale(c4.y0)),
        b.scale(c4.x0).concat(d.scale(c4.y0)),
        a.scale(c4.x1).concat(c.scale(c4.y1)),
        b.scale(c4.x1).concat(d.scale(c4.y1)),
    )
    return _recheck(rows, "size-4 construction")


def cs8_from_pair_and_set(
    pair: ComplementarySet, set4: ComplementarySet, coeffs: Coeffs8
) -> ComplementarySet:
    """Size-8 set of length M+P from a Golay pair and a size-4 set."""
    _require_pair(pair, "pair")
    _require_verified(set4, "set4")
    if set4.size != 4:
        raise InputError(f"set4 must have exactly 4 rows, got {set4.size}")
    if pair.alphabet != set4.alphabet:
        raise InputError("pair and set4 must share one alphabet")
    q = pair.q
    bad = coeffs.violations(q)
    if bad:
        raise InputError("inadmissible coefficients: " + "; ".join(bad))
    c8 = coeffs.reduced(q)
    a, b = pair.rows
    e, f, g, h = set4.rows
    rows = (
        a.scale(c8.x0).concat(e.scale(c8.y0)),
        b.scale(c8.x0).concat(f.scale(c8.y0)),
        a.scale(c8.x1).concat(g.scale(c8.y0)),
        b.scale(c8.x1).concat(h.scale(c8.y0)),
        a.scale(c8.x2).concat(e.scale(c8.y1)),
        b.scale(c8.x2).concat(f.scale(c8.y1)),
        a.scale(c8.x3).concat(g.scale(c8.y1)),
        b.scale(c8.x3).concat(h.scale(c8.y1)),
    )
    return _recheck(rows, "size-8 construction")


def stack(sets: Seq[ComplementarySet]) -> ComplementarySet:
    """Vertical concatenation: sizes add, length is unchanged."""
    if not sets:
        raise InputError("stack needs at least one set")
    first = sets[0]
    rows: list[Sequence] = []
    for i, cs in enumerate(sets):
        _require_verified(cs, f"sets[{i}]")
        if cs.alphabet != first.alphabet:
            raise InputError("stacked sets must share one alphabet")
        if cs.length != first.length:
            raise InputError("stacked sets must share one length")
        rows.extend(cs.rows)
    return _recheck(tuple(rows), "stack")


def golay_double(pair: ComplementarySet) -> ComplementarySet:
    """Length-doubling concatenation: (a||b, a||-b)."""
    _require_pair(pair, "pair")
    a, b = pair.rows
    rows = (a.concat(b), a.concat(b.negate()))
    return _recheck(rows, "doubling")


def _binary_bits(seq: Sequence) -> list[int]:
    """Entries of a (+1/-1)-valued sequence as 0/1 bits, or raise."""
    q = seq.q
    bits = []
    for e in seq.exponents:
        if e == 0:
            bits.append(0)
        elif q % 2 == 0 and e == q // 2:
            bits.append(1)
        else:
            raise InputError("turyn_product needs a (+1/-1)-valued first pair")
    return bits


def turyn_product(pair_bin: ComplementarySet, pair_q: ComplementarySet) -> ComplementarySet:
    """Golay pair of length M*N from a binary pair (length M) and any pair (length N).

    Writes the binary pair (A, B) as half-sum and half-difference parts,
    which have disjoint support, and interleaves the second pair (C, D)
    against them:

        out1[i*M + j] = C_i * A_j          where A_j == B_j
                      = conj(D_{N-1-i}) * A_j   elsewhere
        out2[i*M + j] = D_i * A_j          where A_j == B_j
                      = -conj(C_{N-1-i}) * A_j  elsewhere

    The first pair may live over q=2 (it is embedded into the second
    pair's alphabet) or already over the target alphabet with all entries
    in {+1, -1}.
    """
    _require_pair(pair_bin, "pair_bin")
    _require_pair(pair_q, "pair_q")
    q = pair_q.q
    if q % 2:
        raise InputError("turyn_product needs an even target alphabet")
    a_bits = _binary_bits(pair_bin.rows[0])
    b_bits = _binary_bits(pair_bin.rows[1])
    half = q // 2
    ec, ed = pair_q.rows[0].exponents, pair_q.rows[1].exponents
    m, n = len(a_bits), len(ec)
    out1: list[int] = []
    out2: list[int] = []
    for i in range(n):
        for j in range(m):
            base = half * a_bits[j]
            if a_bits[j] == b_bits[j]:
                out1.append((ec[i] + base) % q)
                out2.append((ed[i] + base) % q)
            else:
                out1.append((-ed[n - 1 - i] + base) % q)
                out2.append((half - ec[n - 1 - i] + base) % q)
    rows = (Sequence.from_exponents(q, out1), Sequence.from_exponents(q, out2))
    return _recheck(rows, "turyn product")
