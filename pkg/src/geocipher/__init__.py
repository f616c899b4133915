"""geocipher: a deterministic geometric text codec over exact rationals.

Three schemes turn a symbol-code sequence into coefficient records:
consecutive lines through index points (IL, and ILE with cubic curves),
general-form lines through paired points (PL), and block-wise interpolating
polynomials (LG).  All arithmetic is exact, so decoding is lossless.
"""

from .alphabet import (
    BUILTIN,
    BUILTIN_ID,
    Alphabet,
    PlainSequence,
    interval_code,
    load_alphabet,
    load_alphabet_file,
    to_numbers,
    to_text,
)
from .container import CipherStream, cipher_from_stream, deserialize, serialize, stream_from_cipher
from .errors import (
    CoincidentCurves,
    CoincidentLines,
    CollinearAmbiguity,
    DuplicateAbscissa,
    DuplicatePoint,
    FormatError,
    GeocipherError,
    IntegrityError,
    NonIntegerRecovery,
    ParallelCurves,
    ParallelLines,
    UnknownSymbol,
    VerticalLine,
    VerticalPair,
)
from .geometry import (
    CubicCurve,
    LineGF,
    LineSI,
    Point,
    Poly,
    Rational,
    cubic_through,
    format_rational,
    gf_proportional,
    intersect_cubic,
    intersect_gf,
    intersect_si,
    lagrange_fit,
    line_gf_through,
    line_si_eval,
    line_si_through,
    parse_rational,
    poly_eval,
    round_to_code,
)
from .index_line import IndexCubicCipher, IndexLineCipher, decode_il, decode_ile, encode_il, encode_ile
from .lagrange import LagrangeCipher, decode_lg, encode_lg
from .pair_line import PairLineCipher, PairValidationReport, decode_pl, encode_pl, validate_pl
from .stats import expansion_ratio, max_dimension

__version__ = "0.1.0"
