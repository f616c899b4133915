"""Bit-exact text container for ciphertext streams.

Format (UTF-8, LF line endings, single spaces, newline after every line):

    GEOC 1 <SCHEME> <ALPHABET-ID> <N> <PAD>[ <G>]
    <record>
    ...

SCHEME is IL, ILE, PL or LG; G is present exactly for LG.  Records are
space-separated canonical rationals: two per line for IL/ILE (a b), three
for PL (A B C), and G per line for LG (coefficients in ascending degree).
Serialization is deterministic, so equal streams produce identical bytes
and deserialize(serialize(s)) == s.  Parsing is strict: wrong counts,
non-canonical rationals ("2/4", "007", "-0") and stray whitespace are all
FormatErrors with a line diagnostic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import FormatError
from .geometry import CubicCurve, LineGF, LineSI, Poly, format_rational, parse_rational
from .index_line import IndexCubicCipher, IndexLineCipher
from .lagrange import LagrangeCipher
from .pair_line import PairLineCipher

MAGIC = "GEOC"
VERSION = 1

_RECORD_WIDTH = {"IL": 2, "ILE": 2, "PL": 3}


def _record_count(scheme: str, n: int, g) -> int:
    if scheme in ("IL", "ILE"):
        return n
    if scheme == "PL":
        return -(-n // 2)
    return -(-n // g)


@dataclass(frozen=True)
class CipherStream:
    """Scheme-tagged coefficient records plus the header bookkeeping."""

    version: int
    scheme: str
    alphabet_id: str
    n: int
    pad_count: int
    g: int | None
    records: tuple  # of tuples of Fraction

    def __post_init__(self):
        object.__setattr__(
            self, "records", tuple(tuple(Fraction(v) for v in rec) for rec in self.records)
        )
        if self.version != VERSION:
            raise FormatError(f"unsupported version {self.version}")
        if self.scheme not in ("IL", "ILE", "PL", "LG"):
            raise FormatError(f"unknown scheme {self.scheme!r}")
        if not self.alphabet_id or any(ch.isspace() for ch in self.alphabet_id):
            raise FormatError(f"alphabet id must be a whitespace-free token: {self.alphabet_id!r}")
        if self.scheme == "LG":
            if self.g is None or self.g < 2:
                raise FormatError(f"scheme LG needs a block size >= 2, got {self.g}")
        elif self.g is not None:
            raise FormatError(f"scheme {self.scheme} takes no block size")

        if self.scheme in ("IL", "ILE"):
            if self.n < 2:
                raise FormatError(f"scheme {self.scheme} needs n >= 2, got {self.n}")
            if self.pad_count != 0:
                raise FormatError(f"scheme {self.scheme} is never padded, got pad {self.pad_count}")
        elif self.scheme == "PL":
            if self.n < 5:
                raise FormatError(f"scheme PL needs n >= 5, got {self.n}")
            if self.pad_count != self.n % 2:
                raise FormatError(f"pad {self.pad_count} inconsistent with n={self.n}")
        else:
            if self.n < 1:
                raise FormatError(f"scheme LG needs n >= 1, got {self.n}")
            if self.pad_count != -(-self.n // self.g) * self.g - self.n:
                raise FormatError(f"pad {self.pad_count} inconsistent with n={self.n}, g={self.g}")

        count = _record_count(self.scheme, self.n, self.g)
        if len(self.records) != count:
            raise FormatError(f"expected {count} records, got {len(self.records)}")
        width = _RECORD_WIDTH.get(self.scheme, self.g)
        for lineno, rec in enumerate(self.records, start=2):
            if len(rec) != width:
                raise FormatError(f"line {lineno}: expected {width} fields, got {len(rec)}")


def serialize(stream: CipherStream) -> bytes:
    """Render the stream in its canonical byte form."""
    head = f"{MAGIC} {stream.version} {stream.scheme} {stream.alphabet_id} {stream.n} {stream.pad_count}"
    if stream.scheme == "LG":
        head += f" {stream.g}"
    lines = [head]
    lines.extend(" ".join(format_rational(v) for v in rec) for rec in stream.records)
    return ("\n".join(lines) + "\n").encode("utf-8")


def _parse_count(token: str, what: str, lineno: int) -> int:
    if not token.isdigit() or (token != "0" and token[0] == "0"):
        raise FormatError(f"line {lineno}: {what} must be a canonical non-negative integer, got {token!r}")
    return int(token)


def deserialize(data: bytes) -> CipherStream:
    """Parse and validate container bytes; exact inverse of serialize."""
    try:
        text = data.decode("utf-8")
    except UnicodeDecodeError as exc:
        raise FormatError(f"not UTF-8: {exc}") from None
    if not text.endswith("\n"):
        raise FormatError("missing trailing newline")
    lines = text[:-1].split("\n")

    fields = lines[0].split(" ")
    if fields[0] != MAGIC:
        raise FormatError(f"line 1: bad magic {fields[0]!r}, expected {MAGIC!r}")
    if len(fields) not in (6, 7) or "" in fields:
        raise FormatError(f"line 1: malformed header {lines[0]!r}")
    version = _parse_count(fields[1], "version", 1)
    scheme = fields[2]
    alphabet_id = fields[3]
    n = _parse_count(fields[4], "length", 1)
    pad = _parse_count(fields[5], "pad count", 1)
    g = None
    if len(fields) == 7:
        g = _parse_count(fields[6], "block size", 1)

    records = []
    for lineno, line in enumerate(lines[1:], start=2):
        tokens = line.split(" ")
        if "" in tokens:
            raise FormatError(f"line {lineno}: empty field (stray or doubled space)")
        rec = []
        for col, token in enumerate(tokens, start=1):
            try:
                rec.append(parse_rational(token))
            except FormatError as exc:
                raise FormatError(f"line {lineno}, field {col}: {exc}") from None
        records.append(tuple(rec))

    try:
        return CipherStream(version, scheme, alphabet_id, n, pad, g, tuple(records))
    except FormatError as exc:
        raise FormatError(f"invalid stream: {exc}") from None


def stream_from_cipher(cipher) -> CipherStream:
    """Wrap a scheme cipher object as a container stream."""
    if isinstance(cipher, IndexLineCipher):
        recs = tuple((r.a, r.b) for r in cipher.records)
        return CipherStream(VERSION, "IL", cipher.alphabet_id, cipher.n, 0, None, recs)
    if isinstance(cipher, IndexCubicCipher):
        recs = tuple((r.a, r.b) for r in cipher.records)
        return CipherStream(VERSION, "ILE", cipher.alphabet_id, cipher.n, 0, None, recs)
    if isinstance(cipher, PairLineCipher):
        recs = tuple((r.A, r.B, r.C) for r in cipher.records)
        return CipherStream(VERSION, "PL", cipher.alphabet_id, cipher.n, cipher.pad_count, None, recs)
    if isinstance(cipher, LagrangeCipher):
        recs = tuple(r.coeffs for r in cipher.records)
        return CipherStream(
            VERSION, "LG", cipher.alphabet_id, cipher.n, cipher.pad_count, cipher.block_size, recs
        )
    raise FormatError(f"not a cipher object: {type(cipher).__name__}")


def cipher_from_stream(stream: CipherStream):
    """Materialize the scheme cipher object a stream describes."""
    if stream.scheme == "IL":
        return IndexLineCipher(
            tuple(LineSI(a, b) for a, b in stream.records), stream.alphabet_id, stream.n
        )
    if stream.scheme == "ILE":
        return IndexCubicCipher(
            tuple(CubicCurve(a, b) for a, b in stream.records), stream.alphabet_id, stream.n
        )
    if stream.scheme == "PL":
        return PairLineCipher(
            tuple(LineGF(a, b, c) for a, b, c in stream.records),
            stream.alphabet_id,
            stream.n,
            stream.pad_count,
        )
    return LagrangeCipher(
        stream.g,
        tuple(Poly(rec) for rec in stream.records),
        stream.alphabet_id,
        stream.n,
        stream.pad_count,
    )
