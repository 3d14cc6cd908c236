"""Enumerate the sequence lengths the constructions can reach.

Golay pairs are known to exist at lengths 2^a * 10^b * 26^c for the
binary alphabet, and at 2^(a+u) * 3^b * 5^c * 11^e * 13^z with
b+c+e+z <= a+2u+1 and u <= c+z for the quaternary one. Size-4 sets then
live at every sum M+N of two pair lengths, and size-8 sets at every sum
M+P of a pair length and a size-4 length (or by stacking two size-4 sets
of equal length).

Existence of a pattern length does not imply this toolkit can emit a
pair: the shipped compositions only multiply a binary-pattern length
into a single primitive seed. Each enumerated length is therefore
labeled constructive or existence-only by checking for a composition
plan, independently of the abstract pattern.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .errors import InputError

QUATERNARY_SEED_KERNELS = (13, 11, 5, 3, 2, 1)


@dataclass(frozen=True)
class LengthFactorization:
    """Pattern witness: (a, b, c) for q=2, (a, b, c, e, z, u) for q=4."""

    q: int
    exponents: tuple[int, ...]

    @property
    def length(self) -> int:
        if self.q == 2:
            a, b, c = self.exponents
            return 2**a * 10**b * 26**c
        a, b, c, e, z, u = self.exponents
        return 2 ** (a + u) * 3**b * 5**c * 11**e * 13**z

    def describe(self) -> str:
        if self.q == 2:
            a, b, c = self.exponents
            return f"2^{a} * 10^{b} * 26^{c}"
        a, b, c, e, z, u = self.exponents
        return f"2^({a}+{u}) * 3^{b} * 5^{c} * 11^{e} * 13^{z}"


def _binary_factorizations(max_len: int) -> dict[int, LengthFactorization]:
    out: dict[int, LengthFactorization] = {}
    c = 0
    while 26**c <= max_len:
        b = 0
        while 26**c * 10**b <= max_len:
            a = 0
            while (length := 2**a * 10**b * 26**c) <= max_len:
                out.setdefault(length, LengthFactorization(2, (a, b, c)))
                a += 1
            b += 1
        c += 1
    return out


def _quaternary_factorizations(max_len: int) -> dict[int, LengthFactorization]:
    out: dict[int, LengthFactorization] = {}
    z = 0
    while 13**z <= max_len:
        e = 0
        while 13**z * 11**e <= max_len:
            c = 0
            while 13**z * 11**e * 5**c <= max_len:
                b = 0
                while (odd := 3**b * 5**c * 11**e * 13**z) <= max_len:
                    u = 0
                    while u <= c + z and odd * 2**u <= max_len:
                        a = 0
                        while (length := odd * 2 ** (a + u)) <= max_len:
                            if b + c + e + z <= a + 2 * u + 1:
                                out.setdefault(
                                    length, LengthFactorization(4, (a, b, c, e, z, u))
                                )
                            a += 1
                        u += 1
                    b += 1
                c += 1
            e += 1
        z += 1
    return out


def gcp_pattern_factorizations(q: int, max_len: int) -> dict[int, LengthFactorization]:
    if max_len < 1:
        raise InputError("max length must be >= 1")
    if q == 2:
        return _binary_factorizations(max_len)
    if q == 4:
        return _quaternary_factorizations(max_len)
    raise InputError(f"no pattern data for q={q} (supported: 2, 4)")


def gcp_lengths(q: int, max_len: int) -> list[int]:
    """All pattern lengths <= max_len, sorted."""
    return sorted(gcp_pattern_factorizations(q, max_len))


def in_gcp_pattern(q: int, length: int) -> Optional[LengthFactorization]:
    if length < 1:
        return None
    return gcp_pattern_factorizations(q, length).get(length)


def binary_composition_plan(length: int) -> Optional[tuple[int, int, int]]:
    """(doublings, factors of 10, factors of 26) realizing a binary length."""
    if length < 1:
        return None
    rest, t5, t13 = length, 0, 0
    while rest % 5 == 0:
        rest //= 5
        t5 += 1
    while rest % 13 == 0:
        rest //= 13
        t13 += 1
    a = 0
    while rest % 2 == 0:
        rest //= 2
        a += 1
    if rest != 1 or a < t5 + t13:
        return None
    return (a - t5 - t13, t5, t13)


def quaternary_composition_plan(length: int) -> Optional[tuple[int, tuple[int, int, int]]]:
    """(seed kernel K, binary plan for length/K) realizing a quaternary length.

    The shipped compositions reach exactly the lengths (binary pattern) * K
    for a primitive quaternary seed K; larger odd parts (9, 33, ...) stay
    out of reach even when the existence pattern admits them.
    """
    if length < 1:
        return None
    for kernel in QUATERNARY_SEED_KERNELS:
        if length % kernel == 0:
            plan = binary_composition_plan(length // kernel)
            if plan is not None:
                return kernel, plan
    return None


def has_composition_plan(q: int, length: int) -> bool:
    if q == 2:
        return binary_composition_plan(length) is not None
    if q == 4:
        return quaternary_composition_plan(length) is not None
    raise InputError(f"no composition data for q={q} (supported: 2, 4)")


# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Derivation:
    """How a set length arises: kind and operand lengths."""

    kind: str  # "pair-sum" (M+N), "pair-plus-set4" (M+P), or "stack"
    operands: tuple[int, ...]

    def describe(self) -> str:
        if self.kind == "pair-sum":
            return f"M+N = {self.operands[0]}+{self.operands[1]}"
        if self.kind == "pair-plus-set4":
            return f"M+P = {self.operands[0]}+{self.operands[1]}"
        return f"stack of two size-4 sets of length {self.operands[0]}"


@dataclass(frozen=True)
class LengthEntry:
    length: int
    witness: Derivation
    constructive: bool


@dataclass(frozen=True)
class ReachabilitySet:
    q: int
    set_size: int
    max_length: int
    entries: tuple[LengthEntry, ...]

    def lengths(self) -> list[int]:
        return [e.length for e in self.entries]

    def entry(self, length: int) -> Optional[LengthEntry]:
        for e in self.entries:
            if e.length == length:
                return e
        return None


def _pick(
    candidates: list[tuple[tuple[int, ...], bool, str]]
) -> tuple[Derivation, bool]:
    """Prefer a constructive witness; ties break on smallest operands."""
    constructive = [c for c in candidates if c[1]]
    pool = constructive or candidates
    operands, is_con, kind = min(pool)
    return Derivation(kind, operands), is_con


def cs4_lengths(q: int, max_len: int) -> ReachabilitySet:
    """Reachable size-4 lengths: all sums of two pattern lengths."""
    pattern = gcp_lengths(q, max_len)
    feasible = {m: has_composition_plan(q, m) for m in pattern}
    by_length: dict[int, list[tuple[tuple[int, ...], bool, str]]] = {}
    for i, m in enumerate(pattern):
        for n in pattern[i:]:
            total = m + n
            if total > max_len:
                break
            by_length.setdefault(total, []).append(
                ((m, n), feasible[m] and feasible[n], "pair-sum")
            )
    entries = []
    for length in sorted(by_length):
        witness, constructive = _pick(by_length[length])
        entries.append(LengthEntry(length, witness, constructive))
    return ReachabilitySet(q, 4, max_len, tuple(entries))


def cs8_lengths(q: int, max_len: int) -> ReachabilitySet:
    """Reachable size-8 lengths: pair length + size-4 length, or a stack."""
    pattern = gcp_lengths(q, max_len)
    feasible = {m: has_composition_plan(q, m) for m in pattern}
    cs4 = cs4_lengths(q, max_len)
    by_length: dict[int, list[tuple[tuple[int, ...], bool, str]]] = {}
    for entry in cs4.entries:
        by_length.setdefault(entry.length, []).append(
            ((entry.length,), entry.constructive, "stack")
        )
        for m in pattern:
            total = m + entry.length
            if total > max_len:
                break
            by_length.setdefault(total, []).append(
                ((m, entry.length), feasible[m] and entry.constructive, "pair-plus-set4")
            )
    entries = []
    for length in sorted(by_length):
        witness, constructive = _pick(by_length[length])
        entries.append(LengthEntry(length, witness, constructive))
    return ReachabilitySet(q, 8, max_len, tuple(entries))


def reachable_lengths(q: int, set_size: int, max_len: int) -> ReachabilitySet:
    if set_size == 4:
        return cs4_lengths(q, max_len)
    if set_size == 8:
        return cs8_lengths(q, max_len)
    raise InputError(f"enumeration covers set sizes 4 and 8, got {set_size}")


def derivations_for(q: int, set_size: int, length: int) -> list[Derivation]:
    """Every admissible derivation of one length, not just the picked witness."""
    pattern = set(gcp_lengths(q, length))
    out = []
    if set_size == 4:
        for m in sorted(pattern):
            n = length - m
            if m <= n and n in pattern:
                out.append(Derivation("pair-sum", (m, n)))
        return out
    if set_size != 8:
        raise InputError(f"enumeration covers set sizes 4 and 8, got {set_size}")
    cs4 = set(cs4_lengths(q, length).lengths())
    if length in cs4:
        out.append(Derivation("stack", (length,)))
    for m in sorted(pattern):
        p = length - m
        if p in cs4:
            out.append(Derivation("pair-plus-set4", (m, p)))
    return out


# ---------------------------------------------------------------------------
# Reference rows (lengths up to 34) used by the `enumerate --table1` check.

PUBLISHED_ROWS: dict[tuple[int, int], frozenset[int]] = {
    (2, 4): frozenset(
        {3, 4, 5, 6, 8, 9, 10, 11, 12, 14, 16, 17, 18, 20, 21, 22, 24, 26, 27, 28, 30, 33, 34}
    ),
    (4, 4): frozenset(range(3, 35)),
    (2, 8): frozenset(range(3, 35)),
    (4, 8): frozenset(range(3, 35)),
}

PUBLISHED_MAX_LENGTH = 34


def published_row_diff(q: int, set_size: int, max_len: int) -> tuple[set[int], set[int]]:
    """(extras, missing) of the computed set against the reference row.

    The comparison window is capped at the reference row's own maximum
    length. Known extras: the computed sets legitimately contain lengths
    the reference rows omit (2 everywhere, and 32 for the binary size-4
    row), since those are sums of admissible pair lengths too.
    """
    key = (q, set_size)
    if key not in PUBLISHED_ROWS:
        raise InputError(f"no reference row for q={q}, size={set_size}")
    cap = min(max_len, PUBLISHED_MAX_LENGTH)
    computed = {length for length in reachable_lengths(q, set_size, cap).lengths()}
    published = {length for length in PUBLISHED_ROWS[key] if length <= cap}
    return computed - published, published - computed
