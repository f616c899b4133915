"""Scheme bookkeeping: dimension bound and redundancy measurements."""

from __future__ import annotations

from fractions import Fraction

from .errors import FormatError


def max_dimension(n: int) -> int:
    """Largest usable space dimension, ceil(n/3), for a length-n plaintext.

    Any grouping scheme must transmit at least three points for
    intersection decoding to pin them down, hence the bound; n < 3 has no
    admissible dimension at all.
    """
    if n < 3:
        raise FormatError(f"need at least 3 symbols, got {n}")
    return -(-n // 3)


def expansion_ratio(scheme: str, n: int, g: int | None = None) -> Fraction:
    """Transmitted rational values per plaintext symbol, exactly.

    IL/ILE send two coefficient arrays of length n; PL sends three
    coefficients for each of ceil(n/2) lines; LG sends g coefficients for
    each of ceil(n/g) blocks.
    """
    if scheme in ("IL", "ILE"):
        if n < 2:
            raise FormatError(f"scheme {scheme} needs n >= 2, got {n}")
        return Fraction(2)
    if scheme == "PL":
        if n < 5:
            raise FormatError(f"scheme PL needs n >= 5, got {n}")
        return Fraction(3 * -(-n // 2), n)
    if scheme == "LG":
        if n < 1:
            raise FormatError(f"scheme LG needs n >= 1, got {n}")
        if g is None or g < 2:
            raise FormatError(f"scheme LG needs a block size >= 2, got {g}")
        return Fraction(g * -(-n // g), n)
    raise FormatError(f"unknown scheme {scheme!r}")
