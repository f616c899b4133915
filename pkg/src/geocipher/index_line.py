"""Consecutive-line scheme: one record per plaintext symbol.

Symbol k becomes the point (k, y_k), 1-based.  Record i is the line (or
cubic, in the elliptic variant) through points i and i+1, and the final
record wraps around through points N and 1.  Decoding intersects each
record with its predecessor; when a collinear run makes two adjacent
records coincide, the decoder falls back to evaluating the record at the
known index, so every plaintext stays decodable.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .alphabet import PlainSequence
from .errors import (
    CoincidentCurves,
    CoincidentLines,
    FormatError,
    IntegrityError,
    NonIntegerRecovery,
    ParallelCurves,
    ParallelLines,
)
from .geometry import (
    Point,
    _positive_integer_sqrt,
    cubic_rhs,
    cubic_through,
    intersect_cubic,
    intersect_si,
    line_si_eval,
    line_si_through,
    round_to_code,
)


@dataclass(frozen=True)
class IndexLineCipher:
    """N slope-intercept records over the index points of a plaintext."""

    records: tuple  # of LineSI
    alphabet_id: str
    n: int

    def __post_init__(self):
        object.__setattr__(self, "records", tuple(self.records))
        if self.n < 2 or len(self.records) != self.n:
            raise FormatError(f"need n >= 2 records, got n={self.n} with {len(self.records)} records")


@dataclass(frozen=True)
class IndexCubicCipher:
    """N cubic-curve records with the same adjacency structure."""

    records: tuple  # of CubicCurve
    alphabet_id: str
    n: int

    def __post_init__(self):
        object.__setattr__(self, "records", tuple(self.records))
        if self.n < 2 or len(self.records) != self.n:
            raise FormatError(f"need n >= 2 records, got n={self.n} with {len(self.records)} records")


def _index_points(seq: PlainSequence):
    return [Point(i, y) for i, y in enumerate(seq.codes, start=1)]


def encode_il(seq: PlainSequence) -> IndexLineCipher:
    """Fit a line through every adjacent pair of index points, wrap included."""
    if seq.n < 2:
        raise FormatError("consecutive-line scheme needs at least 2 symbols")
    pts = _index_points(seq)
    records = [line_si_through(pts[i], pts[(i + 1) % seq.n]) for i in range(seq.n)]
    return IndexLineCipher(tuple(records), seq.alphabet_id, seq.n)


def encode_ile(seq: PlainSequence) -> IndexCubicCipher:
    """Elliptic variant: fit y^2 = x^3 + ax + b through each adjacent pair."""
    if seq.n < 2:
        raise FormatError("consecutive-curve scheme needs at least 2 symbols")
    pts = _index_points(seq)
    records = [cubic_through(pts[i], pts[(i + 1) % seq.n]) for i in range(seq.n)]
    return IndexCubicCipher(tuple(records), seq.alphabet_id, seq.n)


def _recover_si(records, i: int) -> Fraction:
    """Exact ordinate of point i (1-based) from adjacent line records."""
    prev, cur = records[(i - 2) % len(records)], records[i - 1]
    try:
        return intersect_si(prev, cur).y
    except CoincidentLines:
        # Collinear triple in the plaintext; the index is known, so evaluate.
        return line_si_eval(cur, Fraction(i))
    except ParallelLines as exc:
        raise NonIntegerRecovery(f"record {i}: adjacent lines are parallel, stream corrupt") from exc


def _recover_cubic(records, i: int) -> Fraction:
    prev, cur = records[(i - 2) % len(records)], records[i - 1]
    try:
        return intersect_cubic(prev, cur).y
    except CoincidentCurves:
        return Fraction(_positive_integer_sqrt(cubic_rhs(cur, Fraction(i))))
    except ParallelCurves as exc:
        raise NonIntegerRecovery(f"record {i}: adjacent curves do not intersect, stream corrupt") from exc


def _codes_from_ordinates(ys) -> tuple:
    return tuple(round_to_code(y) for y in ys)


def _check_integrity(records, ys, refit) -> None:
    """Strict cross-check: records refit from the recovered points must match."""
    n = len(ys)
    pts = [Point(i, y) for i, y in enumerate(ys, start=1)]
    for i in range(n):
        if refit(pts[i], pts[(i + 1) % n]) != records[i]:
            raise IntegrityError(f"record {i + 1} does not pass through its recovered points")
    for i, y in enumerate(ys, start=1):
        if y.denominator != 1:
            raise NonIntegerRecovery(f"position {i}: recovered ordinate {y} is not an integer")


def decode_il(cipher: IndexLineCipher, strict: bool = False) -> PlainSequence:
    """Recover the plaintext codes from a consecutive-line cipher.

    strict additionally requires that every record reproduces exactly from
    the recovered points (IntegrityError otherwise) and that every ordinate
    is an exact integer before rounding.
    """
    ys = [_recover_si(cipher.records, i) for i in range(1, cipher.n + 1)]
    if strict:
        _check_integrity(cipher.records, ys, line_si_through)
    return PlainSequence(_codes_from_ordinates(ys), cipher.alphabet_id)


def decode_ile(cipher: IndexCubicCipher, strict: bool = False) -> PlainSequence:
    """Recover the plaintext codes from the elliptic variant."""
    ys = [_recover_cubic(cipher.records, i) for i in range(1, cipher.n + 1)]
    if strict:
        _check_integrity(cipher.records, ys, cubic_through)
    return PlainSequence(_codes_from_ordinates(ys), cipher.alphabet_id)
