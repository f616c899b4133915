import pytest
from hypothesis import given
from hypothesis import strategies as st

from geocipher.alphabet import (
    BUILTIN,
    Alphabet,
    PlainSequence,
    interval_code,
    load_alphabet,
    load_alphabet_file,
    to_numbers,
    to_text,
)
from geocipher.errors import FormatError, UnknownSymbol

PHRASE_CODES = (9, 27, 12, 15, 22, 5, 27, 13, 25, 27, 13, 15, 20, 8, 5, 18)


def test_builtin_table():
    assert len(BUILTIN) == 27
    assert BUILTIN.id == "builtin"
    assert BUILTIN.code_of("A") == 1
    assert BUILTIN.code_of("Z") == 26
    assert BUILTIN.code_of("_") == 27
    assert [code for _, code in BUILTIN.entries] == list(range(1, 28))


def test_to_numbers_worked_phrase():
    assert to_numbers("I_LOVE_MY_MOTHER").codes == PHRASE_CODES


def test_to_numbers_single():
    assert to_numbers("A").codes == (1,)


def test_to_numbers_empty_is_format_error():
    with pytest.raises(FormatError):
        to_numbers("")


def test_to_numbers_unknown_symbol_position():
    with pytest.raises(UnknownSymbol) as exc:
        to_numbers("AB!C")
    assert exc.value.position == 3
    assert exc.value.symbol == "!"


def test_builtin_normalization():
    assert to_numbers("i love my mother").codes == PHRASE_CODES
    # already-normalized input maps identically (idempotent)
    assert to_numbers("I_LOVE_MY_MOTHER").codes == PHRASE_CODES


def test_to_text_examples():
    assert to_text(PlainSequence((9, 27))) == "I_"
    assert to_text(PlainSequence((1,))) == "A"
    with pytest.raises(UnknownSymbol):
        to_text((0,))


def test_to_text_no_output_normalization():
    # decoding always yields the stored symbols, upper case for the builtin
    assert to_text(to_numbers("hello")) == "HELLO"


def test_plain_sequence_invariants():
    with pytest.raises(FormatError):
        PlainSequence(())
    with pytest.raises(FormatError):
        PlainSequence((1, 0, 2))
    assert PlainSequence((3, 1)).n == 2


@given(st.text(alphabet="ABCDEFGHIJKLMNOPQRSTUVWXYZ_", min_size=1, max_size=60))
def test_round_trip_identity(text):
    assert to_text(to_numbers(text)) == text


@given(st.integers(1, 27))
def test_bijectivity_per_code(code):
    assert to_numbers(to_text(PlainSequence((code,)))).codes == (code,)


CUSTOM = "a\t1\nb\t2\nC\t3"


def test_load_alphabet_minimal():
    alpha = load_alphabet("A\t1\nB\t2", "two")
    assert len(alpha) == 2
    assert alpha.code_of("B") == 2


def test_load_alphabet_rejects_zero_code():
    with pytest.raises(FormatError):
        load_alphabet("A\t0", "bad")


def test_load_alphabet_rejects_duplicates():
    with pytest.raises(FormatError):
        load_alphabet("A\t1\nA\t2", "bad")
    with pytest.raises(FormatError):
        load_alphabet("A\t1\nB\t1", "bad")


def test_load_alphabet_rejects_malformed_line():
    with pytest.raises(FormatError):
        load_alphabet("A 1", "bad")
    with pytest.raises(FormatError):
        load_alphabet("A\tone", "bad")
    with pytest.raises(FormatError):
        load_alphabet("AB\t1", "bad")


def test_load_alphabet_comments_and_blanks():
    alpha = load_alphabet("# header\n\na\t5\n# mid\nb\t6\n", "small")
    assert [s for s, _ in alpha.entries] == ["a", "b"]


def test_load_alphabet_reserved_id():
    with pytest.raises(FormatError):
        load_alphabet("A\t1", "builtin")


def test_custom_alphabet_is_verbatim():
    alpha = load_alphabet(CUSTOM, "mixed")
    assert to_numbers("ab", alpha).codes == (1, 2)
    with pytest.raises(UnknownSymbol):
        to_numbers("AB", alpha)  # no case folding outside the builtin
    with pytest.raises(UnknownSymbol):
        to_numbers("a b", alpha)  # no space folding either


def test_load_alphabet_file_stem_id(tmp_path):
    path = tmp_path / "runic.alpha"
    path.write_text("x\t4\ny\t9\n", encoding="utf-8")
    alpha = load_alphabet_file(path)
    assert alpha.id == "runic"
    assert alpha.code_of("y") == 9


def test_interval_code():
    assert interval_code(BUILTIN) == 27
    assert interval_code(load_alphabet("_\t3\na\t9", "u")) == 3
    assert interval_code(load_alphabet("a\t9\nb\t4", "nounderscore")) == 9


def test_alphabet_invariants_direct():
    with pytest.raises(FormatError):
        Alphabet("", (("A", 1),))
    with pytest.raises(FormatError):
        Alphabet("has space", (("A", 1),))
    with pytest.raises(FormatError):
        Alphabet("empty", ())
