import pytest
from hypothesis import given, strategies as st

from telsyl.errors import TableFormatError, UnknownSymbol
from telsyl.wx_core import (
    DEFAULT_INVENTORY,
    DEFAULT_TABLE,
    Category,
    ConsonantClass,
    VowelClass,
    classify,
    load_table,
    parse_table,
    tokenize_wx,
)

INV = DEFAULT_INVENTORY
SYMBOLS = sorted(INV.phonemes)


def test_empty():
    assert tokenize_wx("").phonemes == ()


def test_golden_word():
    word = tokenize_wx("kaMpeVnIkaMteV")
    assert word.symbols == ["k", "a", "M", "p", "eV", "n", "I", "k", "a", "M", "t", "eV"]
    assert word.text == "kaMpeVnIkaMteV"


@pytest.mark.parametrize("text,expected", [
    ("lYa", ["lY", "a"]),
    ("rYoVlYa", ["rY", "oV", "lY", "a"]),
    ("LYL", ["LY", "L"]),
    ("eVe", ["eV", "e"]),
])
def test_longest_match(text, expected):
    assert tokenize_wx(text).symbols == expected


@pytest.mark.parametrize("text,pos", [("kaY", 2), ("V", 0), ("ka1", 2), ("ka ka", 2)])
def test_unknown_symbol(text, pos):
    with pytest.raises(UnknownSymbol) as info:
        tokenize_wx(text)
    assert info.value.position == pos


@pytest.mark.parametrize("symbol,expected", [
    ("i", (Category.VOWEL, VowelClass.CLOSED_FRONT)),
    ("I", (Category.VOWEL, VowelClass.CLOSED_FRONT)),
    ("eV", (Category.VOWEL, VowelClass.HALF_CLOSED_FRONT)),
    ("e", (Category.VOWEL, VowelClass.HALF_CLOSED_FRONT)),
    ("u", (Category.VOWEL, VowelClass.CLOSED_BACK)),
    ("U", (Category.VOWEL, VowelClass.CLOSED_BACK)),
    ("oV", (Category.VOWEL, VowelClass.HALF_CLOSED_BACK)),
    ("o", (Category.VOWEL, VowelClass.HALF_CLOSED_BACK)),
    ("a", (Category.VOWEL, VowelClass.OPEN)),
    ("A", (Category.VOWEL, VowelClass.OPEN)),
    ("E", (Category.VOWEL, VowelClass.OTHER)),
    ("O", (Category.VOWEL, VowelClass.OTHER)),
    ("q", (Category.VOWEL, VowelClass.OTHER)),
    ("M", (Category.MODIFIER, None)),
    ("h", (Category.CONSONANT, ConsonantClass.GLOTTAL)),
    ("lY", (Category.CONSONANT, ConsonantClass.RETROFLEX)),
    ("v", (Category.CONSONANT, ConsonantClass.BILABIAL)),
    ("c", (Category.CONSONANT, ConsonantClass.OTHER)),
])
def test_classify(symbol, expected):
    assert classify(INV[symbol]) == expected
    assert classify(symbol) == expected


def test_inventory_partition():
    v, m, c = INV.vowels, INV.modifiers, INV.consonants
    assert v | m | c == set(INV.phonemes)
    assert not (v & m) and not (v & c) and not (m & c)
    assert m == {"M", "H", "z"}
    assert len(c) == 35
    assert len(v) == 16
    assert INV.unconfirmed == {"Q", "L", "LY"}


def test_class_table_total():
    for s in INV.consonants:
        assert isinstance(INV.classes[s], ConsonantClass)
    for s in INV.vowels:
        assert isinstance(INV.classes[s], VowelClass)


def test_load_table_roundtrip(tmp_path):
    path = tmp_path / "table.tsv"
    path.write_text(DEFAULT_TABLE, encoding="utf-8")
    inv = load_table(path)
    assert inv.phonemes == INV.phonemes
    assert inv.classes == INV.classes


@pytest.mark.parametrize("text", [
    "k\tConsonant\tVelar\n",
    "# wx-table v1\nk\tConsonant\n",
    "# wx-table v1\nk\tConsonant\tVelar\nk\tConsonant\tVelar\n",
    "# wx-table v1\nk\tConsonant\tOpen\n",
    "# wx-table v1\nk\tGlide\tVelar\n",
    "# wx-table v1\n",
])
def test_bad_tables(text):
    with pytest.raises(TableFormatError):
        parse_table(text)


phoneme_lists = st.lists(st.sampled_from(SYMBOLS), max_size=12)


@given(phoneme_lists)
def test_round_trip_concatenation(symbols):
    text = "".join(symbols)
    assert tokenize_wx(text).text == text


@given(phoneme_lists)
def test_prefix_letters_never_stand_alone(symbols):
    # "V" and "Y" are not symbols, so any parse at all proves longest match held
    out = tokenize_wx("".join(symbols)).symbols
    assert "V" not in out and "Y" not in out
    assert out == symbols


def test_shipped_table_matches_builtin():
    from pathlib import Path

    shipped = Path(__file__).parent.parent / "tables" / "wx_telugu_v1.tsv"
    assert shipped.read_text(encoding="utf-8") == DEFAULT_TABLE
