"""Bijective symbol <-> positive-integer-code mapping.

The built-in alphabet is A..Z -> 1..26 and "_" -> 27.  Codes never include
zero: downstream geometry relies on every ordinate being >= 1.  Custom
alphabets are loaded from tab-separated text files and matched verbatim;
only the built-in alphabet upper-cases its input and folds spaces to
underscores before lookup.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import FormatError, UnknownSymbol

BUILTIN_ID = "builtin"


@dataclass(frozen=True)
class Alphabet:
    """An ordered set of (symbol, code) pairs, both sides unique."""

    id: str
    entries: tuple  # of (symbol, code)
    _by_symbol: dict = field(init=False, repr=False, compare=False)
    _by_code: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if not self.id or any(ch.isspace() for ch in self.id):
            raise FormatError(f"alphabet id must be a non-empty token without whitespace: {self.id!r}")
        entries = tuple((str(sym), int(code)) for sym, code in self.entries)
        if not entries:
            raise FormatError("alphabet has no entries")
        by_symbol, by_code = {}, {}
        for sym, code in entries:
            if len(sym) != 1:
                raise FormatError(f"symbol must be a single character: {sym!r}")
            if code < 1:
                raise FormatError(f"code for {sym!r} is {code}; codes start at 1")
            if sym in by_symbol:
                raise FormatError(f"duplicate symbol {sym!r}")
            if code in by_code:
                raise FormatError(f"duplicate code {code}")
            by_symbol[sym] = code
            by_code[code] = sym
        object.__setattr__(self, "entries", entries)
        object.__setattr__(self, "_by_symbol", by_symbol)
        object.__setattr__(self, "_by_code", by_code)

    def __len__(self) -> int:
        return len(self.entries)

    def code_of(self, symbol: str):
        return self._by_symbol.get(symbol)

    def symbol_of(self, code: int):
        return self._by_code.get(code)


BUILTIN = Alphabet(
    BUILTIN_ID,
    tuple((ch, i + 1) for i, ch in enumerate("ABCDEFGHIJKLMNOPQRSTUVWXYZ_")),
)


@dataclass(frozen=True)
class PlainSequence:
    """The numeric form of a plaintext: positive symbol codes, in order."""

    codes: tuple
    alphabet_id: str = BUILTIN_ID

    def __post_init__(self):
        codes = tuple(int(c) for c in self.codes)
        if not codes:
            raise FormatError("empty plaintext (need at least one symbol)")
        for i, c in enumerate(codes, start=1):
            if c < 1:
                raise FormatError(f"code {c} at position {i}; codes start at 1")
        object.__setattr__(self, "codes", codes)

    @property
    def n(self) -> int:
        return len(self.codes)


def _normalize(text: str, alphabet: Alphabet) -> str:
    if alphabet.id == BUILTIN_ID:
        return text.upper().replace(" ", "_")
    return text


def to_numbers(text: str, alphabet: Alphabet = BUILTIN) -> PlainSequence:
    """Map text to its code sequence.  Empty input is a FormatError."""
    if not text:
        raise FormatError("empty plaintext (need at least one symbol)")
    codes = []
    for i, ch in enumerate(_normalize(text, alphabet), start=1):
        code = alphabet.code_of(ch)
        if code is None:
            raise UnknownSymbol(i, ch)
        codes.append(code)
    return PlainSequence(tuple(codes), alphabet.id)


def to_text(seq, alphabet: Alphabet = BUILTIN) -> str:
    """Map a PlainSequence (or bare code iterable) back to text.

    No output normalization: symbols come back exactly as the alphabet
    stores them.
    """
    codes = seq.codes if isinstance(seq, PlainSequence) else tuple(seq)
    out = []
    for i, code in enumerate(codes, start=1):
        sym = alphabet.symbol_of(code)
        if sym is None:
            raise UnknownSymbol(i, code)
        out.append(sym)
    return "".join(out)


def interval_code(alphabet: Alphabet) -> int:
    """The padding code: the underscore's code if mapped, else the largest code."""
    code = alphabet.code_of("_")
    if code is not None:
        return code
    return max(c for _, c in alphabet.entries)


def load_alphabet(text: str, alphabet_id: str) -> Alphabet:
    """Parse an alphabet document: one "symbol<TAB>code" per line.

    Lines starting with "#" are comments and blank lines are skipped, so
    "#" itself cannot be an alphabet symbol.  The id "builtin" is reserved
    for the built-in table.
    """
    if alphabet_id == BUILTIN_ID:
        raise FormatError(f"alphabet id {BUILTIN_ID!r} is reserved")
    entries = []
    for lineno, line in enumerate(text.split("\n"), start=1):
        if not line or line.startswith("#"):
            continue
        sym, sep, code_s = line.partition("\t")
        if not sep:
            raise FormatError(f"line {lineno}: expected symbol<TAB>code, got {line!r}")
        try:
            code = int(code_s)
        except ValueError:
            raise FormatError(f"line {lineno}: not an integer code: {code_s!r}") from None
        entries.append((sym, code))
    try:
        return Alphabet(alphabet_id, tuple(entries))
    except FormatError as exc:
        raise FormatError(f"invalid alphabet document: {exc}") from None


def load_alphabet_file(path, alphabet_id: str | None = None) -> Alphabet:
    """Load an alphabet file; the id defaults to the file's stem."""
    from pathlib import Path

    p = Path(path)
    if alphabet_id is None:
        alphabet_id = p.stem
    return load_alphabet(p.read_text(encoding="utf-8"), alphabet_id)
