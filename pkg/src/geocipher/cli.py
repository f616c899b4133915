"""geocipher command line: encode, decode, validate, stats, maxdim, repro, plot.

Exit codes: 0 success, 1 validation or decode failure (the typed error
name is printed to stderr), 2 usage error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .alphabet import BUILTIN, BUILTIN_ID, interval_code, load_alphabet_file, to_numbers, to_text
from .container import cipher_from_stream, deserialize, serialize, stream_from_cipher
from .errors import FormatError, GeocipherError, IntegrityError
from .geometry import format_rational
from .index_line import decode_il, decode_ile, encode_il, encode_ile
from .lagrange import decode_lg, encode_lg
from .pair_line import decode_pl, encode_pl, validate_pl
from .stats import expansion_ratio, max_dimension

SCHEME_TAGS = {
    "index-line": "IL",
    "index-elliptic": "ILE",
    "pair-line": "PL",
    "lagrange": "LG",
}


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="geocipher", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add_io(p, inp=True, out=True):
        if inp:
            p.add_argument("-i", "--input", required=True, help="input file")
        if out:
            p.add_argument("-o", "--output", required=True, help="output file")

    p = sub.add_parser("encode", help="encode plaintext into a ciphertext container")
    p.add_argument("--scheme", required=True, choices=sorted(SCHEME_TAGS))
    p.add_argument("--block-size", type=int, default=4, help="symbols per block (lagrange only)")
    p.add_argument("--alphabet", help="custom alphabet file (tab-separated)")
    p.add_argument("--alphabet-id", help="id recorded in the container (default: file stem)")
    p.add_argument("--strict", action="store_true", help="verify the round trip before writing")
    add_io(p)

    p = sub.add_parser("decode", help="decode a ciphertext container back to text")
    p.add_argument("--alphabet", help="custom alphabet file matching the stream's id")
    p.add_argument("--strict", action="store_true", help="cross-check stream integrity")
    add_io(p)

    p = sub.add_parser("validate", help="report degeneracies that prevent encoding")
    p.add_argument("--scheme", required=True, choices=sorted(SCHEME_TAGS))
    p.add_argument("--alphabet", help="custom alphabet file")
    p.add_argument("--alphabet-id")
    add_io(p, out=False)

    p = sub.add_parser("stats", help="print the expansion ratio of a scheme")
    p.add_argument("--scheme", required=True, choices=sorted(SCHEME_TAGS))
    p.add_argument("-n", type=int, required=True, help="plaintext length")
    p.add_argument("--block-size", type=int, default=4)

    p = sub.add_parser("maxdim", help="print the dimension bound for a plaintext length")
    p.add_argument("-n", type=int, required=True, help="plaintext length")

    p = sub.add_parser("repro", help="regenerate the worked-example tables and figures")
    p.add_argument("--out", required=True, help="output directory")

    p = sub.add_parser("plot", help="render an SVG constellation of a container or plaintext")
    add_io(p)
    return parser


def _load_alphabet(args):
    if getattr(args, "alphabet", None):
        return load_alphabet_file(args.alphabet, getattr(args, "alphabet_id", None))
    return BUILTIN


def _read_plaintext(path) -> str:
    return Path(path).read_text(encoding="utf-8").rstrip("\r\n")


def _cmd_encode(args) -> int:
    alphabet = _load_alphabet(args)
    seq = to_numbers(_read_plaintext(args.input), alphabet)
    tag = SCHEME_TAGS[args.scheme]
    pad = interval_code(alphabet)
    if tag == "IL":
        cipher = encode_il(seq)
    elif tag == "ILE":
        cipher = encode_ile(seq)
    elif tag == "PL":
        cipher = encode_pl(seq, pad_code=pad)
    else:
        cipher = encode_lg(seq, args.block_size, pad_code=pad)
    if args.strict:
        decoded = {
            "IL": decode_il,
            "ILE": decode_ile,
            "PL": decode_pl,
            "LG": decode_lg,
        }[tag](cipher, strict=True)
        if decoded.codes != seq.codes:
            raise IntegrityError("round-trip self-check failed")
    Path(args.output).write_bytes(serialize(stream_from_cipher(cipher)))
    return 0


def _cmd_decode(args) -> int:
    stream = deserialize(Path(args.input).read_bytes())
    if stream.alphabet_id == BUILTIN_ID:
        alphabet = BUILTIN
    elif args.alphabet:
        alphabet = load_alphabet_file(args.alphabet, stream.alphabet_id)
    else:
        raise FormatError(
            f"stream uses alphabet {stream.alphabet_id!r}; pass --alphabet FILE"
        )
    cipher = cipher_from_stream(stream)
    decode = {"IL": decode_il, "ILE": decode_ile, "PL": decode_pl, "LG": decode_lg}[stream.scheme]
    text = to_text(decode(cipher, strict=args.strict), alphabet)
    Path(args.output).write_text(text + "\n", encoding="utf-8")
    return 0


def _cmd_validate(args) -> int:
    alphabet = _load_alphabet(args)
    seq = to_numbers(_read_plaintext(args.input), alphabet)
    tag = SCHEME_TAGS[args.scheme]
    if tag == "PL":
        report = validate_pl(seq, pad_code=interval_code(alphabet))
        print(report)
        return 0 if report.ok else 1
    if tag in ("IL", "ILE") and seq.n < 2:
        print(f"too-short: need at least 2 symbols, got {seq.n}")
        return 1
    print("OK")
    return 0


def _cmd_stats(args) -> int:
    tag = SCHEME_TAGS[args.scheme]
    g = args.block_size if tag == "LG" else None
    print(format_rational(expansion_ratio(tag, args.n, g)))
    return 0


def _cmd_maxdim(args) -> int:
    print(max_dimension(args.n))
    return 0


def _cmd_repro(args) -> int:
    from .report import repro_report

    for path in repro_report(args.out):
        print(f"wrote {path}")
    return 0


def _cmd_plot(args) -> int:
    from .svgplot import render_svg

    data = Path(args.input).read_bytes()
    if data.startswith(b"GEOC "):
        obj = deserialize(data)
    else:
        obj = to_numbers(data.decode("utf-8").rstrip("\r\n"), BUILTIN)
    render_svg(obj, args.output)
    return 0


_COMMANDS = {
    "encode": _cmd_encode,
    "decode": _cmd_decode,
    "validate": _cmd_validate,
    "stats": _cmd_stats,
    "maxdim": _cmd_maxdim,
    "repro": _cmd_repro,
    "plot": _cmd_plot,
}


def cli_main(argv) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse exits 2 on usage errors, 0 on --help
        return int(exc.code or 0)
    try:
        return _COMMANDS[args.command](args)
    except GeocipherError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"IOError: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(cli_main(sys.argv[1:]))


if __name__ == "__main__":
    main()
