"""Exact plane geometry over arbitrary-precision rationals.

All coordinates and coefficients are `fractions.Fraction` values, which are
always kept in lowest terms with a positive denominator.  Every operation
here is exact: constructing a line through two integer points and
intersecting it with a neighbour reproduces the original point with zero
error, which is what makes the codec lossless.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    CoincidentCurves,
    CoincidentLines,
    DuplicateAbscissa,
    DuplicatePoint,
    FormatError,
    NonIntegerRecovery,
    ParallelCurves,
    ParallelLines,
    VerticalLine,
    VerticalPair,
)

# The one number type used throughout the codec.
Rational = Fraction

_CANONICAL_RATIONAL = re.compile(r"-?(?:0|[1-9][0-9]*)(?:/[1-9][0-9]*)?\Z")


def parse_rational(token: str) -> Fraction:
    """Parse the canonical text form of a rational, strictly.

    Accepted forms are "num" and "num/den" with den > 1, num possibly
    negative, no leading zeros, no "+", no whitespace.  Non-canonical
    spellings such as "2/4", "3/1", "-0" or "007" are rejected.
    """
    if not _CANONICAL_RATIONAL.match(token):
        raise FormatError(f"not a canonical rational: {token!r}")
    if token.startswith("-0") and (len(token) == 2 or token[2] == "/"):
        raise FormatError(f"not a canonical rational: {token!r}")
    if "/" in token:
        num_s, den_s = token.split("/")
        num, den = int(num_s), int(den_s)
        if den == 1:
            raise FormatError(f"not canonical (denominator 1 spelled out): {token!r}")
        if num == 0 or math.gcd(abs(num), den) != 1:
            raise FormatError(f"not canonical (not in lowest terms): {token!r}")
        return Fraction(num, den)
    return Fraction(int(token))


def format_rational(value: Fraction) -> str:
    """Canonical text form: "num/den" when den > 1, bare "num" otherwise."""
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def _rat(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise FormatError(f"expected an exact rational, got {type(value).__name__}")


@dataclass(frozen=True)
class Point:
    """A point in the plane with exact rational coordinates."""

    x: Fraction
    y: Fraction

    def __post_init__(self):
        object.__setattr__(self, "x", _rat(self.x))
        object.__setattr__(self, "y", _rat(self.y))

    def __str__(self):
        return f"({format_rational(self.x)}, {format_rational(self.y)})"


@dataclass(frozen=True)
class LineSI:
    """A non-vertical line y = a*x + b."""

    a: Fraction
    b: Fraction

    def __post_init__(self):
        object.__setattr__(self, "a", _rat(self.a))
        object.__setattr__(self, "b", _rat(self.b))


@dataclass(frozen=True)
class LineGF:
    """A line A*x + B*y + C = 0 with (A, B) != (0, 0).

    Coefficients are stored exactly as produced by the two-point formulas,
    without reduction to a canonical proportional representative; use
    gf_proportional() to test whether two triples describe the same line.
    """

    A: Fraction
    B: Fraction
    C: Fraction

    def __post_init__(self):
        object.__setattr__(self, "A", _rat(self.A))
        object.__setattr__(self, "B", _rat(self.B))
        object.__setattr__(self, "C", _rat(self.C))
        if self.A == 0 and self.B == 0:
            raise FormatError("degenerate line: A and B are both zero")


@dataclass(frozen=True)
class CubicCurve:
    """The locus y^2 = x^3 + a*x + b."""

    a: Fraction
    b: Fraction

    def __post_init__(self):
        object.__setattr__(self, "a", _rat(self.a))
        object.__setattr__(self, "b", _rat(self.b))


@dataclass(frozen=True)
class Poly:
    """Dense polynomial, coefficients in ascending degree.

    Trailing zero coefficients are kept: a block codec needs fixed-width
    records, so the width is the block size, not the true degree.
    """

    coeffs: tuple

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(_rat(c) for c in self.coeffs))
        if not self.coeffs:
            raise FormatError("polynomial needs at least one coefficient")

    @property
    def width(self) -> int:
        return len(self.coeffs)


def line_si_through(p1: Point, p2: Point) -> LineSI:
    """Slope-intercept line through two points with distinct abscissae."""
    if p1 == p2:
        raise DuplicatePoint(f"both points are {p1}")
    if p1.x == p2.x:
        raise VerticalLine(f"x = {format_rational(p1.x)} has no slope-intercept form")
    a = (p2.y - p1.y) / (p2.x - p1.x)
    return LineSI(a, p1.y - a * p1.x)


def line_si_eval(line: LineSI, x: Fraction) -> Fraction:
    return line.a * _rat(x) + line.b


def intersect_si(l1: LineSI, l2: LineSI) -> Point:
    """Intersection of two slope-intercept lines."""
    if l1.a == l2.a:
        if l1.b == l2.b:
            raise CoincidentLines(f"both lines are y = {format_rational(l1.a)}x + {format_rational(l1.b)}")
        raise ParallelLines(f"equal slope {format_rational(l1.a)}, different intercepts")
    x = (l2.b - l1.b) / (l1.a - l2.a)
    return Point(x, l1.a * x + l1.b)


def line_gf_through(p1: Point, p2: Point) -> LineGF:
    """General-form line through two distinct points.

    The coefficients are exactly A = y2-y1, B = x1-x2,
    C = y1*(x2-x1) - x1*(y2-y1); vertical pairs are representable (B = 0).
    """
    if p1 == p2:
        raise DuplicatePoint(f"both points are {p1}")
    A = p2.y - p1.y
    B = p1.x - p2.x
    C = p1.y * (p2.x - p1.x) - p1.x * (p2.y - p1.y)
    return LineGF(A, B, C)


def gf_proportional(l1: LineGF, l2: LineGF) -> bool:
    """True when the two coefficient triples describe the same line."""
    return (
        l1.A * l2.B == l2.A * l1.B
        and l1.A * l2.C == l2.A * l1.C
        and l1.B * l2.C == l2.B * l1.C
    )


def intersect_gf(l1: LineGF, l2: LineGF) -> Point:
    """Intersection of two general-form lines (Cramer's rule)."""
    det = l1.A * l2.B - l2.A * l1.B
    if det == 0:
        if gf_proportional(l1, l2):
            raise CoincidentLines("proportional coefficient triples")
        raise ParallelLines("zero determinant, non-proportional triples")
    x = (l1.B * l2.C - l2.B * l1.C) / det
    y = (l2.A * l1.C - l1.A * l2.C) / det
    return Point(x, y)


def cubic_through(p1: Point, p2: Point) -> CubicCurve:
    """Curve y^2 = x^3 + a*x + b through two points with distinct abscissae."""
    if p1.x == p2.x:
        raise VerticalPair(f"equal abscissae x = {format_rational(p1.x)}")
    r1 = p1.y * p1.y - p1.x**3
    r2 = p2.y * p2.y - p2.x**3
    a = (r1 - r2) / (p1.x - p2.x)
    return CubicCurve(a, r1 - a * p1.x)


def cubic_rhs(curve: CubicCurve, x: Fraction) -> Fraction:
    """The value of x^3 + a*x + b, i.e. y^2 on the curve."""
    x = _rat(x)
    return x**3 + curve.a * x + curve.b


def _positive_integer_sqrt(value: Fraction) -> int:
    """The positive integer y with y^2 == value, else NonIntegerRecovery."""
    if value.denominator != 1 or value <= 0:
        raise NonIntegerRecovery(f"y^2 = {format_rational(value)} is not a positive integer")
    root = math.isqrt(value.numerator)
    if root * root != value.numerator:
        raise NonIntegerRecovery(f"y^2 = {value.numerator} is not a perfect square")
    return root


def intersect_cubic(c1: CubicCurve, c2: CubicCurve) -> Point:
    """Intersection of two cubic records, taking the positive branch.

    Symbol codes are always >= 1, so the recovered ordinate is the positive
    root; y^2 must come out as a perfect square of a positive integer.
    """
    if c1.a == c2.a:
        if c1.b == c2.b:
            raise CoincidentCurves("equal coefficient pairs")
        raise ParallelCurves(f"equal a = {format_rational(c1.a)}, different b")
    x = (c2.b - c1.b) / (c1.a - c2.a)
    return Point(x, _positive_integer_sqrt(cubic_rhs(c1, x)))


def lagrange_fit(points) -> Poly:
    """Interpolating polynomial through the given points, exactly.

    Uses Newton divided differences; the returned coefficient vector has
    one entry per node (trailing zeros kept) so records stay fixed-width.
    """
    pts = [(p.x, p.y) for p in points]
    if len(pts) < 2:
        raise FormatError("interpolation needs at least two points")
    seen = set()
    for x, _ in pts:
        if x in seen:
            raise DuplicateAbscissa(f"repeated abscissa x = {format_rational(x)}")
        seen.add(x)

    n = len(pts)
    xs = [x for x, _ in pts]
    # Divided-difference table, kept in place: diffs[i] = f[x_i..x_{i+j}].
    diffs = [y for _, y in pts]
    newton = [diffs[0]]
    for j in range(1, n):
        for i in range(n - j):
            diffs[i] = (diffs[i + 1] - diffs[i]) / (xs[i + j] - xs[i])
        newton.append(diffs[0])

    # Expand sum_j newton[j] * prod_{k<j} (x - x_k) into dense form.
    coeffs = [Fraction(0)] * n
    basis = [Fraction(1)]
    for j, c in enumerate(newton):
        for d, bd in enumerate(basis):
            coeffs[d] += c * bd
        if j < n - 1:
            basis = [Fraction(0)] + basis
            for d in range(len(basis) - 1):
                basis[d] -= xs[j] * basis[d + 1]
    return Poly(tuple(coeffs))


def poly_eval(poly: Poly, x: Fraction) -> Fraction:
    """Exact Horner evaluation."""
    x = _rat(x)
    acc = Fraction(0)
    for c in reversed(poly.coeffs):
        acc = acc * x + c
    return acc


def round_to_code(value: Fraction) -> int:
    """Round to the nearest integer, halves away from zero; must land >= 1."""
    value = _rat(value)
    n, d = abs(value.numerator), value.denominator
    magnitude = (2 * n + d) // (2 * d)
    code = magnitude if value >= 0 else -magnitude
    if code < 1:
        raise NonIntegerRecovery(f"{format_rational(value)} rounds to {code}, below the code floor 1")
    return code
