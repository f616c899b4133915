"""Typed errors raised by the codec.

Every error the library raises deliberately derives from GeocipherError,
so callers (and the CLI) can map "invalid input / undecodable stream" to
a single failure class while still matching on the precise condition.
"""


class GeocipherError(Exception):
    """Base class for all codec errors."""


class FormatError(GeocipherError):
    """Malformed input: bad alphabet file, bad container bytes, bad sizes."""


class UnknownSymbol(GeocipherError):
    """A character or code with no mapping in the alphabet."""

    def __init__(self, position: int, symbol):
        self.position = position
        self.symbol = symbol
        super().__init__(f"no mapping for {symbol!r} at position {position}")


class DuplicatePoint(GeocipherError):
    """Two construction points coincide; no unique line through them."""


class VerticalLine(GeocipherError):
    """Slope-intercept form cannot represent a vertical line."""


class VerticalPair(GeocipherError):
    """Equal abscissae; the curve fit y^2 = x^3 + ax + b is underdetermined."""


class ParallelLines(GeocipherError):
    """Distinct parallel lines; no intersection."""


class CoincidentLines(GeocipherError):
    """The two lines are the same line; intersection is ambiguous."""


class ParallelCurves(GeocipherError):
    """Curves with equal leading coefficient but different constant; no intersection."""


class CoincidentCurves(GeocipherError):
    """The two curves are the same curve; intersection is ambiguous."""


class DuplicateAbscissa(GeocipherError):
    """Interpolation nodes share an x value."""


class NonIntegerRecovery(GeocipherError):
    """A decoded coordinate is not a valid symbol code (corrupt stream)."""


class CollinearAmbiguity(GeocipherError):
    """Consecutive points are collinear, so adjacent fitted lines coincide
    and intersection-based decoding cannot separate them."""


class IntegrityError(GeocipherError):
    """Strict-mode cross-check failed: the stream is internally inconsistent."""
