"""Block-polynomial scheme: g symbols per interpolating polynomial.

The code sequence is padded at the end with the interval symbol to a
multiple of g and split into blocks of g consecutive index points.  The
abscissae are the global 1-based indices 1..N (they run on continuously
across blocks), so block j covers x = (j-1)*g+1 .. j*g.  Each block is
fitted exactly; the ciphertext is the concatenated width-g coefficient
vectors.  With exact rational coefficients, decoding is evaluation plus an
identity rounding step, so the round trip is lossless; the rounding exists
to define behaviour on corrupted streams.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .alphabet import PlainSequence
from .errors import FormatError, NonIntegerRecovery
from .geometry import Point, lagrange_fit, poly_eval, round_to_code

DEFAULT_BLOCK_SIZE = 4
DEFAULT_PAD_CODE = 27  # the built-in alphabet's interval symbol "_"


@dataclass(frozen=True)
class LagrangeCipher:
    """ceil(N/g) fixed-width polynomial records over global abscissae."""

    block_size: int
    records: tuple  # of Poly, each of width block_size
    alphabet_id: str
    n: int
    pad_count: int

    def __post_init__(self):
        object.__setattr__(self, "records", tuple(self.records))
        g = self.block_size
        if g < 2:
            raise FormatError(f"block size must be >= 2, got {g}")
        if self.n < 1:
            raise FormatError(f"need n >= 1, got {self.n}")
        blocks = -(-self.n // g)
        if len(self.records) != blocks:
            raise FormatError(f"expected {blocks} records for n={self.n}, g={g}")
        if self.pad_count != blocks * g - self.n:
            raise FormatError(f"pad count {self.pad_count} inconsistent with n={self.n}, g={g}")
        for j, rec in enumerate(self.records, start=1):
            if rec.width != g:
                raise FormatError(f"record {j} has width {rec.width}, expected {g}")


def encode_lg(seq: PlainSequence, block_size: int = DEFAULT_BLOCK_SIZE,
              pad_code: int = DEFAULT_PAD_CODE) -> LagrangeCipher:
    """Fit one exact polynomial per block of g padded codes."""
    g = block_size
    if g < 2:
        raise FormatError(f"block size must be >= 2, got {g}")
    padded = list(seq.codes)
    pad_count = (-len(padded)) % g
    padded.extend([pad_code] * pad_count)
    records = []
    for start in range(0, len(padded), g):
        nodes = [Point(start + k + 1, padded[start + k]) for k in range(g)]
        records.append(lagrange_fit(nodes))
    return LagrangeCipher(g, tuple(records), seq.alphabet_id, seq.n, pad_count)


def decode_lg(cipher: LagrangeCipher, strict: bool = False) -> PlainSequence:
    """Evaluate each block at its own indices, round, and strip the pad.

    strict refuses values that are not exact integers before rounding.
    """
    g = cipher.block_size
    codes = []
    for i in range(1, cipher.n + cipher.pad_count + 1):
        value = poly_eval(cipher.records[(i - 1) // g], Fraction(i))
        if strict and value.denominator != 1:
            raise NonIntegerRecovery(f"position {i}: value {value} is not an integer")
        codes.append(round_to_code(value))
    if cipher.pad_count:
        codes = codes[: -cipher.pad_count]
    return PlainSequence(tuple(codes), cipher.alphabet_id)
