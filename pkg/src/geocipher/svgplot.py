"""Deterministic SVG constellation plots.

Renders the points a stream (or plaintext) encodes and, for the two line
schemes, the fitted segments between consecutive points (wrap included).
Output is plain string assembly with fixed-precision coordinates, so
identical input yields byte-identical SVG.
"""

from __future__ import annotations

from fractions import Fraction

from .alphabet import PlainSequence
from .container import CipherStream, cipher_from_stream
from .errors import FormatError
from .geometry import intersect_gf
from .index_line import decode_il, decode_ile
from .lagrange import decode_lg

WIDTH, HEIGHT, MARGIN = 640.0, 480.0, 48.0


def _index_scene(codes, with_segments: bool):
    points = [(Fraction(i), Fraction(y)) for i, y in enumerate(codes, start=1)]
    if not with_segments:
        return points, []
    n = len(points)
    return points, [(points[i], points[(i + 1) % n]) for i in range(n)]


def _scene(obj):
    """The points and segments to draw, as exact rationals."""
    if isinstance(obj, PlainSequence):
        return _index_scene(obj.codes, with_segments=False)
    if not isinstance(obj, CipherStream):
        raise FormatError(f"cannot plot a {type(obj).__name__}")
    cipher = cipher_from_stream(obj)
    if obj.scheme == "IL":
        return _index_scene(decode_il(cipher).codes, with_segments=True)
    if obj.scheme == "ILE":
        return _index_scene(decode_ile(cipher).codes, with_segments=False)
    if obj.scheme == "PL":
        p = len(cipher.records)
        pts = [intersect_gf(cipher.records[(i - 1) % p], cipher.records[i]) for i in range(p)]
        points = [(pt.x, pt.y) for pt in pts]
        return points, [(points[i], points[(i + 1) % p]) for i in range(p)]
    return _index_scene(decode_lg(cipher).codes, with_segments=False)


def _fmt(v: float) -> str:
    return f"{v:.2f}"


def render_svg(obj, out_path) -> str:
    """Write the plot for a CipherStream or PlainSequence; returns the SVG text."""
    points, segments = _scene(obj)
    if len(points) < 2:
        raise FormatError("nothing to plot: need at least 2 points")

    xs = [float(x) for x, _ in points]
    ys = [float(y) for _, y in points]
    span_x = max(max(xs) - min(xs), 1.0)
    span_y = max(max(ys) - min(ys), 1.0)
    sx = (WIDTH - 2 * MARGIN) / span_x
    sy = (HEIGHT - 2 * MARGIN) / span_y

    def at(pt):
        px = MARGIN + (float(pt[0]) - min(xs)) * sx
        py = HEIGHT - MARGIN - (float(pt[1]) - min(ys)) * sy  # y grows upward
        return px, py

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH:.0f}" height="{HEIGHT:.0f}" '
        f'viewBox="0 0 {WIDTH:.0f} {HEIGHT:.0f}">',
        f'<rect x="0" y="0" width="{WIDTH:.0f}" height="{HEIGHT:.0f}" fill="#ffffff"/>',
    ]
    for a, b in segments:
        (x1, y1), (x2, y2) = at(a), at(b)
        out.append(
            f'<line x1="{_fmt(x1)}" y1="{_fmt(y1)}" x2="{_fmt(x2)}" y2="{_fmt(y2)}" '
            'stroke="#4477aa" stroke-width="1.5"/>'
        )
    for pt in points:
        px, py = at(pt)
        out.append(f'<circle cx="{_fmt(px)}" cy="{_fmt(py)}" r="4" fill="#cc3311"/>')
    out.append("</svg>")
    text = "\n".join(out) + "\n"

    from pathlib import Path

    Path(out_path).write_text(text, encoding="utf-8")
    return text
