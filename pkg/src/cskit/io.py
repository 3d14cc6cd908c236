"""Sequence-set file formats.

Text format: a header line `q=<int> rows=<int> len=<int>`, optional `#`
note lines, then one line per row of exactly `len` digit characters (the
exponent of each entry; q <= 10). For q=2 that makes `0` mean +1 and `1`
mean -1. The JSON variant carries the same fields as one record.
"""

from __future__ import annotations

import json
import re
from pathlib import Path
from typing import Optional, Union

from .algebra import Sequence
from .errors import InputError, ParseError
from .verify import ComplementarySet

_HEADER = re.compile(r"^q=(\d+) rows=(\d+) len=(\d+)$")


def serialize_set(cs: ComplementarySet, note: Optional[str] = None) -> str:
    if cs.q > 10:
        raise InputError("the text format supports q <= 10 only")
    lines = [f"q={cs.q} rows={cs.size} len={cs.length}"]
    if note:
        lines.extend(f"# {part}" for part in note.splitlines())
    lines.extend(row.render() for row in cs.rows)
    return "\n".join(lines) + "\n"


def parse_set(text: str) -> tuple[ComplementarySet, Optional[str]]:
    lines = text.splitlines()
    if not lines:
        raise ParseError("empty input", 1, 1)
    m = _HEADER.match(lines[0])
    if not m:
        raise ParseError("header must be 'q=<int> rows=<int> len=<int>'", 1, 1)
    q, rows, length = (int(g) for g in m.groups())
    if q < 1 or q > 10:
        raise ParseError(f"q={q} outside [1, 10]", 1, 3)
    if rows < 1 or length < 1:
        raise ParseError("rows and len must be >= 1", 1, 1)

    note_parts: list[str] = []
    data: list[tuple[int, ...]] = []
    for lineno, raw in enumerate(lines[1:], start=2):
        if raw.startswith("#"):
            if data:
                raise ParseError("note lines must precede the data rows", lineno, 1)
            note_parts.append(raw[1:].lstrip())
            continue
        if len(raw) != length:
            raise ParseError(
                f"row must have exactly {length} characters, got {len(raw)}",
                lineno,
                min(len(raw) + 1, length + 1),
            )
        exps = []
        for col, ch in enumerate(raw, start=1):
            if not ch.isdigit():
                raise ParseError(f"bad character {ch!r}", lineno, col)
            e = int(ch)
            if e >= q:
                raise ParseError(f"exponent {e} outside [0, {q})", lineno, col)
            exps.append(e)
        data.append(tuple(exps))
    if len(data) != rows:
        raise ParseError(f"expected {rows} rows, found {len(data)}", len(lines), 1)

    cs = ComplementarySet(tuple(Sequence.from_exponents(q, r) for r in data))
    note = "\n".join(note_parts) if note_parts else None
    return cs, note


def read_set_file(path: Union[str, Path]) -> tuple[ComplementarySet, Optional[str]]:
    return parse_set(Path(path).read_text(encoding="utf-8"))


def write_set_file(
    path: Union[str, Path], cs: ComplementarySet, note: Optional[str] = None
) -> None:
    Path(path).write_text(serialize_set(cs, note), encoding="utf-8")


def to_json_record(cs: ComplementarySet, note: Optional[str] = None) -> dict:
    record: dict = {"q": cs.q, "rows": [list(row.exponents) for row in cs.rows]}
    if note:
        record["note"] = note
    return record


def from_json_record(record: dict) -> tuple[ComplementarySet, Optional[str]]:
    try:
        q = int(record["q"])
        rows = record["rows"]
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"bad JSON record: {exc}") from None
    if not isinstance(rows, list) or not rows:
        raise InputError("bad JSON record: 'rows' must be a nonempty list")
    seqs = []
    for r in rows:
        exps = tuple(int(e) for e in r)
        if any(not 0 <= e < q for e in exps):
            raise InputError(f"bad JSON record: exponent outside [0, {q})")
        seqs.append(Sequence.from_exponents(q, exps))
    return ComplementarySet(tuple(seqs)), record.get("note")


def dumps_json(cs: ComplementarySet, note: Optional[str] = None) -> str:
    return json.dumps(to_json_record(cs, note), separators=(", ", ": "))


def loads_json(text: str) -> tuple[ComplementarySet, Optional[str]]:
    try:
        record = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"bad JSON: {exc}") from None
    return from_json_record(record)
