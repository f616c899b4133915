"""Paired-line scheme: two symbols per point, general-form records.

Codes are read off two at a time as 2-D points (y1,y2),(y3,y4),...; an odd
plaintext is padded at the end with the interval symbol.  Consecutive
points (wrap included) are joined by general-form lines Ax + By + C = 0,
which handle vertical pairs the slope-intercept form cannot.  The record
count is ceil(N/2), half as many as the consecutive-line scheme, at three
coefficients each.

The scheme is genuinely lossy on degenerate plaintexts: equal consecutive
points leave no unique line, and a collinear run of three consecutive
points makes adjacent records coincide, so intersections cannot separate
them.  encode_pl refuses such inputs; validate_pl reports every offending
index without encoding.
"""

from __future__ import annotations

from dataclasses import dataclass

from .alphabet import PlainSequence
from .errors import (
    CoincidentLines,
    CollinearAmbiguity,
    DuplicatePoint,
    FormatError,
    IntegrityError,
    NonIntegerRecovery,
    ParallelLines,
)
from .geometry import Point, intersect_gf, line_gf_through, round_to_code

DEFAULT_PAD_CODE = 27  # the built-in alphabet's interval symbol "_"


@dataclass(frozen=True)
class PairLineCipher:
    """ceil(N/2) general-form records over the paired points."""

    records: tuple  # of LineGF
    alphabet_id: str
    n: int
    pad_count: int

    def __post_init__(self):
        object.__setattr__(self, "records", tuple(self.records))
        if self.pad_count not in (0, 1) or self.pad_count != self.n % 2:
            raise FormatError(f"pad count {self.pad_count} inconsistent with n={self.n}")
        p = (self.n + self.pad_count) // 2
        if p < 3:
            raise FormatError(f"need at least 3 points (n >= 5), got {p}")
        if len(self.records) != p:
            raise FormatError(f"expected {p} records, got {len(self.records)}")


def paired_points(seq: PlainSequence, pad_code: int = DEFAULT_PAD_CODE):
    """Split codes into 2-D points, padding an odd tail with pad_code.

    Returns (points, pad_count).
    """
    codes = list(seq.codes)
    pad_count = len(codes) % 2
    if pad_count:
        codes.append(pad_code)
    points = [Point(codes[i], codes[i + 1]) for i in range(0, len(codes), 2)]
    return points, pad_count


@dataclass(frozen=True)
class PairIssue:
    """One reason a plaintext cannot round-trip through this scheme."""

    kind: str  # "too-short" | "duplicate-point" | "collinear"
    index: int  # 1-based point index the issue is anchored to
    detail: str

    def __str__(self) -> str:
        return f"{self.kind} at point {self.index}: {self.detail}"


@dataclass(frozen=True)
class PairValidationReport:
    issues: tuple  # of PairIssue

    @property
    def ok(self) -> bool:
        return not self.issues

    def __str__(self) -> str:
        return "OK" if self.ok else "\n".join(str(i) for i in self.issues)


def _collinear(p1: Point, p2: Point, p3: Point) -> bool:
    return (p2.x - p1.x) * (p3.y - p1.y) == (p3.x - p1.x) * (p2.y - p1.y)


def validate_pl(seq: PlainSequence, pad_code: int = DEFAULT_PAD_CODE) -> PairValidationReport:
    """List every degeneracy that would make encode_pl refuse this input.

    Issues come out in the order encode_pl would raise them: consecutive
    duplicates, then the minimum-size requirement, then collinear triples.
    """
    points, _ = paired_points(seq, pad_code)
    p = len(points)
    issues = []
    if p >= 2:
        for i in range(p if p > 2 else 1):
            j = (i + 1) % p
            if points[i] == points[j]:
                issues.append(
                    PairIssue("duplicate-point", i + 1, f"point {i + 1} equals point {j + 1}")
                )
    if p < 3:
        issues.append(PairIssue("too-short", p, f"{p} point(s) after pairing; need at least 3"))
    if p >= 3:
        for i in range(p):
            a, b, c = points[(i - 1) % p], points[i], points[(i + 1) % p]
            if a != b and b != c and _collinear(a, b, c):
                issues.append(
                    PairIssue(
                        "collinear",
                        i + 1,
                        f"points {(i - 1) % p + 1}, {i + 1}, {(i + 1) % p + 1} lie on one line",
                    )
                )
    return PairValidationReport(tuple(issues))


def encode_pl(seq: PlainSequence, pad_code: int = DEFAULT_PAD_CODE) -> PairLineCipher:
    """Fit a general-form line through every adjacent point pair, wrap included."""
    points, pad_count = paired_points(seq, pad_code)
    p = len(points)
    if p >= 2:
        for i in range(p if p > 2 else 1):
            if points[i] == points[(i + 1) % p]:
                raise DuplicatePoint(f"points {i + 1} and {(i + 1) % p + 1} are both {points[i]}")
    if p < 3:
        raise FormatError(f"paired-line scheme needs at least 3 points (n >= 5), got {p}")
    for i in range(p):
        a, b, c = points[(i - 1) % p], points[i], points[(i + 1) % p]
        if _collinear(a, b, c):
            raise CollinearAmbiguity(
                f"points {(i - 1) % p + 1}, {i + 1}, {(i + 1) % p + 1} are collinear; "
                "adjacent records would coincide"
            )
    records = [line_gf_through(points[i], points[(i + 1) % p]) for i in range(p)]
    return PairLineCipher(tuple(records), seq.alphabet_id, seq.n, pad_count)


def decode_pl(cipher: PairLineCipher, strict: bool = False) -> PlainSequence:
    """Recover the plaintext by intersecting adjacent records.

    Coordinates are rounded to codes and the pad, if any, is stripped.
    strict requires the records to reproduce exactly from the recovered
    points and the coordinates to be exact integers.
    """
    p = len(cipher.records)
    points = []
    for i in range(p):
        prev, cur = cipher.records[(i - 1) % p], cipher.records[i]
        try:
            points.append(intersect_gf(prev, cur))
        except CoincidentLines as exc:
            raise CollinearAmbiguity(f"records {(i - 1) % p + 1} and {i + 1} coincide") from exc
        except ParallelLines as exc:
            raise NonIntegerRecovery(f"records {(i - 1) % p + 1} and {i + 1} are parallel, stream corrupt") from exc
    if strict:
        for i in range(p):
            try:
                refit = line_gf_through(points[i], points[(i + 1) % p])
            except DuplicatePoint as exc:
                raise IntegrityError(f"records {i + 1} and {(i + 1) % p + 1} recover the same point") from exc
            if refit != cipher.records[i]:
                raise IntegrityError(f"record {i + 1} does not pass through its recovered points")
        for i, pt in enumerate(points, start=1):
            if pt.x.denominator != 1 or pt.y.denominator != 1:
                raise NonIntegerRecovery(f"point {i} has non-integer coordinates")
    codes = []
    for pt in points:
        codes.append(round_to_code(pt.x))
        codes.append(round_to_code(pt.y))
    if cipher.pad_count:
        codes = codes[: -cipher.pad_count]
    return PlainSequence(tuple(codes), cipher.alphabet_id)
