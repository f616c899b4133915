"""Regenerate the published worked-example tables and flag their defects.

The codec's reference material works one phrase through all three schemes.
This module recomputes every table exactly, writes them as TSV alongside
matplotlib figures of the constellations, and emits a discrepancy report:
the published material contradicts itself in four places (a prose line
that disagrees with its own table, a typo in a table cell, a mislabelled
worked example, and three block polynomials that fail to interpolate their
own nodes).  The exact recomputation is authoritative; the published
values are quoted for comparison only.
"""

from __future__ import annotations

from fractions import Fraction
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt

from .alphabet import BUILTIN, to_numbers
from .geometry import format_rational, poly_eval
from .index_line import encode_il
from .lagrange import encode_lg
from .pair_line import encode_pl, paired_points

WORKED_PHRASE = "I_LOVE_MY_MOTHER"        # 16 symbols: line schemes
BLOCK_PHRASE = "I_LOVE_MOTHER"            # 13 symbols: block-polynomial scheme

# Published values quoted by the discrepancy report.
PUBLISHED_PROSE_LINE = "y=18x-10 (a=1, b=29)"
PUBLISHED_WRAP_CELL = "8.40)"
PUBLISHED_BLOCK_POLYS = {
    2: ("184.2", "-207.72", "48.7", "-3.18"),
    3: ("-55.67", "82.91", "-12.77", "0.52"),
    4: ("15.92", "2.22", "-0.15", "0.003"),
}


def _tsv(rows) -> str:
    return "\n".join("\t".join(str(c) for c in row) for row in rows) + "\n"


def _slope_table():
    seq = to_numbers(WORKED_PHRASE, BUILTIN)
    cipher = encode_il(seq)
    rows = [("index", "x1", "y1", "x2", "y2", "a", "b")]
    n = seq.n
    for i, rec in enumerate(cipher.records):
        x1, y1 = i + 1, seq.codes[i]
        x2, y2 = (i + 1) % n + 1, seq.codes[(i + 1) % n]
        rows.append((i + 1, x1, y1, x2, y2, format_rational(rec.a), format_rational(rec.b)))
    return rows, cipher


def _general_form_table():
    seq = to_numbers(WORKED_PHRASE, BUILTIN)
    cipher = encode_pl(seq)
    points, _ = paired_points(seq)
    rows = [("index", "x1", "y1", "x2", "y2", "A", "B", "C")]
    p = len(points)
    for i, rec in enumerate(cipher.records):
        p1, p2 = points[i], points[(i + 1) % p]
        rows.append(
            (
                i + 1,
                format_rational(p1.x), format_rational(p1.y),
                format_rational(p2.x), format_rational(p2.y),
                format_rational(rec.A), format_rational(rec.B), format_rational(rec.C),
            )
        )
    return rows, cipher, points


def _block_tables():
    seq = to_numbers(BLOCK_PHRASE, BUILTIN)
    cipher = encode_lg(seq, 4)
    padded = list(seq.codes) + [27] * cipher.pad_count
    node_rows = [("block", "i", "x", "y")]
    for x, y in enumerate(padded, start=1):
        node_rows.append(((x - 1) // 4 + 1, (x - 1) % 4, x, y))
    poly_rows = [("block", "c0", "c1", "c2", "c3")]
    for j, rec in enumerate(cipher.records, start=1):
        poly_rows.append((j,) + tuple(format_rational(c) for c in rec.coeffs))
    return node_rows, poly_rows, cipher, padded


def _poly_eval_misses(coeffs, nodes):
    """Worst |P(x) - y| of a published coefficient vector over its nodes."""
    worst = Fraction(0)
    for x, y in nodes:
        value = sum(c * Fraction(x) ** k for k, c in enumerate(coeffs))
        worst = max(worst, abs(value - y))
    return worst


def _discrepancies(slope_cipher, block_cipher, padded) -> str:
    rec1 = slope_cipher.records[0]
    wrap = slope_cipher.records[-1]
    lines = [
        "# Discrepancies between the published worked example and exact recomputation",
        "",
        "The published reference material for this codec contradicts itself in the",
        "four places below.  Everything this tool emits is recomputed exactly; the",
        "published values are quoted only to document the differences.",
        "",
        "1. prose-vs-table (consecutive-line scheme): for the line through (1,9) and",
        f"   (2,27) the published prose states {PUBLISHED_PROSE_LINE}.  The two-point",
        "   formula and the published coefficient table itself both give",
        f"   a={format_rational(rec1.a)}, b={format_rational(rec1.b)}.  The table is authoritative.",
        "",
        "2. table-typo (consecutive-line scheme): the intercept of the wrap line",
        f"   through (16,18) and (1,9) is printed as \"{PUBLISHED_WRAP_CELL}\" with a stray closing",
        f"   parenthesis.  The value itself is correct: b={format_rational(wrap.b)} (= 8.40).",
        "",
        "3. label-vs-points (paired-line scheme): the published general-form table is",
        "   introduced for the 13-symbol phrase I_LOVE_MOTHER, but its eight point",
        "   pairs spell the 16-symbol phrase I_LOVE_MY_MOTHER.  The points are",
        "   authoritative.",
        "",
        "4. published-polynomials (block-polynomial scheme): the published rounded",
        "   coefficients for blocks 2-4 do not interpolate their own nodes (block 1",
        "   is exact).  Worst absolute miss per block, published vs exact:",
        "",
        "   block\tpublished coefficients\texact coefficients\tworst miss",
    ]
    for j in (2, 3, 4):
        nodes = [(x, padded[x - 1]) for x in range(4 * j - 3, 4 * j + 1)]
        coeffs = tuple(Fraction(c) for c in PUBLISHED_BLOCK_POLYS[j])
        miss = _poly_eval_misses(coeffs, nodes)
        published = ", ".join(PUBLISHED_BLOCK_POLYS[j])
        exact = ", ".join(format_rational(c) for c in block_cipher.records[j - 1].coeffs)
        lines.append(f"   {j}\t{published}\t{exact}\t{format_rational(miss)} (~{float(miss):.3f})")
    lines.append("")
    return "\n".join(lines)


def _figure_index_line(path, codes):
    n = len(codes)
    fig, ax = plt.subplots(figsize=(8, 5), dpi=100)
    for i in range(n):
        x = (i + 1, (i + 1) % n + 1)
        y = (codes[i], codes[(i + 1) % n])
        ax.plot(x, y, color="#4477aa", linewidth=1.2, zorder=1)
    ax.scatter(range(1, n + 1), codes, color="#cc3311", zorder=2)
    ax.set_xlabel("symbol index")
    ax.set_ylabel("symbol code")
    ax.set_title("Consecutive-line scheme: index points and fitted lines")
    fig.savefig(path)
    plt.close(fig)


def _figure_pair_line(path, points):
    p = len(points)
    xs = [float(pt.x) for pt in points]
    ys = [float(pt.y) for pt in points]
    fig, ax = plt.subplots(figsize=(8, 5), dpi=100)
    for i in range(p):
        j = (i + 1) % p
        ax.plot((xs[i], xs[j]), (ys[i], ys[j]), color="#4477aa", linewidth=1.2, zorder=1)
    ax.scatter(xs, ys, color="#cc3311", zorder=2)
    for i, (x, y) in enumerate(zip(xs, ys), start=1):
        ax.annotate(str(i), (x, y), textcoords="offset points", xytext=(6, 6))
    ax.set_xlabel("first code of pair")
    ax.set_ylabel("second code of pair")
    ax.set_title("Paired-line scheme: 2-D points and fitted lines")
    fig.savefig(path)
    plt.close(fig)


def _figure_blocks(path, cipher, padded):
    g = cipher.block_size
    fig, ax = plt.subplots(figsize=(8, 5), dpi=100)
    for j, rec in enumerate(cipher.records):
        lo, hi = j * g + 1, (j + 1) * g
        xs = [lo + k * (hi - lo) / 80.0 for k in range(81)]
        ys = [float(poly_eval(rec, Fraction(x).limit_denominator(10**6))) for x in xs]
        ax.plot(xs, ys, linewidth=1.2, label=f"block {j + 1}")
    ax.scatter(range(1, len(padded) + 1), padded, color="#cc3311", zorder=2)
    ax.set_xlabel("symbol index")
    ax.set_ylabel("symbol code")
    ax.set_title("Block-polynomial scheme: nodes and fitted blocks")
    ax.legend()
    fig.savefig(path)
    plt.close(fig)


def repro_report(out_dir) -> list:
    """Write all report files into out_dir; returns the written paths."""
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)

    slope_rows, slope_cipher = _slope_table()
    gf_rows, _, pair_points_list = _general_form_table()
    node_rows, poly_rows, block_cipher, padded = _block_tables()

    written = []

    def write(name, text):
        path = out / name
        path.write_text(text, encoding="utf-8")
        written.append(path)

    write("slope_intercept_table.tsv", _tsv(slope_rows))
    write("general_form_table.tsv", _tsv(gf_rows))
    write("lagrange_nodes.tsv", _tsv(node_rows))
    write("lagrange_polynomials.tsv", _tsv(poly_rows))
    write("discrepancies.md", _discrepancies(slope_cipher, block_cipher, padded))

    codes16 = to_numbers(WORKED_PHRASE, BUILTIN).codes
    for name, fn, arg in (
        ("index_line_points.png", _figure_index_line, codes16),
        ("pair_line_points.png", _figure_pair_line, pair_points_list),
    ):
        path = out / name
        fn(path, arg)
        written.append(path)
    path = out / "lagrange_blocks.png"
    _figure_blocks(path, block_cipher, padded)
    written.append(path)
    return written
