import pytest

from geocipher.alphabet import PlainSequence, to_numbers
from geocipher.container import stream_from_cipher
from geocipher.errors import FormatError
from geocipher.index_line import encode_il, encode_ile
from geocipher.lagrange import encode_lg
from geocipher.pair_line import encode_pl
from geocipher.svgplot import render_svg

PHRASE = "I_LOVE_MY_MOTHER"


def test_index_line_plot_counts(tmp_path):
    stream = stream_from_cipher(encode_il(to_numbers(PHRASE)))
    text = render_svg(stream, tmp_path / "il.svg")
    assert text.count("<circle") == 16
    assert text.count("<line") == 16
    assert (tmp_path / "il.svg").read_text(encoding="utf-8") == text


def test_pair_line_plot_counts(tmp_path):
    stream = stream_from_cipher(encode_pl(to_numbers(PHRASE)))
    text = render_svg(stream, tmp_path / "pl.svg")
    assert text.count("<circle") == 8
    assert text.count("<line") == 8


def test_curve_and_block_schemes_plot_points_only(tmp_path):
    seq = to_numbers(PHRASE)
    ile = render_svg(stream_from_cipher(encode_ile(seq)), tmp_path / "ile.svg")
    lg = render_svg(stream_from_cipher(encode_lg(seq, 4)), tmp_path / "lg.svg")
    for text in (ile, lg):
        assert text.count("<circle") == 16
        assert text.count("<line") == 0


def test_plain_sequence_plot(tmp_path):
    text = render_svg(PlainSequence((1, 9, 4)), tmp_path / "seq.svg")
    assert text.count("<circle") == 3
    assert text.count("<line") == 0


def test_single_point_rejected(tmp_path):
    with pytest.raises(FormatError):
        render_svg(PlainSequence((5,)), tmp_path / "one.svg")


def test_determinism(tmp_path):
    stream = stream_from_cipher(encode_il(to_numbers(PHRASE)))
    a = render_svg(stream, tmp_path / "a.svg")
    b = render_svg(stream, tmp_path / "b.svg")
    assert a == b
    assert (tmp_path / "a.svg").read_bytes() == (tmp_path / "b.svg").read_bytes()
