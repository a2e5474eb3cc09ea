import random
import unicodedata

import pytest
from hypothesis import given, strategies as st

from telsyl.errors import DanglingSign, UnknownSymbol, Unrenderable
from telsyl.synth import random_wx_word
from telsyl.transliterator import (
    DEFAULT_MAPPING,
    CharKind,
    MappingTable,
    char_kind,
    has_telugu,
    telugu_to_wx,
    wx_to_telugu,
)

# Golden inputs rebuilt codepoint by codepoint from the WX column.
GOLDEN = [
    ("కంపెనీకంటె", "kaMpeVnIkaMteV"),
    ("ఖర్చుకంటె", "KarcukaMteV"),
    ("లాభాలకు", "lABAlaku"),
]


def test_empty():
    assert telugu_to_wx("") == ""
    assert wx_to_telugu("") == ""


@pytest.mark.parametrize("text,wx", [
    ("కం", "kaM"),
    ("కా", "kA"),
    ("క్క", "kka"),
    ("క్", "k"),
    ("అం", "aM"),
    ("క్రమ", "krama"),
    ("ళ", "lYa"),
    ("ఱు", "rYu"),
    ("కై", "kE"),
    ("\u0c15\u0c46\u0c56", "kE"),  # two-part AI sign, composed by NFC
    ("ఎత్తు", "eVwwu"),
])
def test_forward_examples(text, wx):
    assert telugu_to_wx(text) == wx


@pytest.mark.parametrize("text,wx", GOLDEN)
def test_golden_forward(text, wx):
    assert telugu_to_wx(text) == wx
    assert wx_to_telugu(wx) == text


@pytest.mark.parametrize("text,pos", [
    ("ా", 0),                # sign at start
    ("అా", 1),          # sign after an independent vowel
    ("కాి", 2),    # two signs in a row
    ("క ా", 2),          # state does not cross whitespace
    ("క,్", 2),          # nor punctuation
    ("క్్", 2),    # double virama
    ("క౅", 1),          # reserved slot inside the sign range
])
def test_dangling(text, pos):
    with pytest.raises(DanglingSign) as info:
        telugu_to_wx(text)
    assert info.value.position == pos


def test_kinds():
    assert char_kind("క") is CharKind.CONSONANT
    assert char_kind("హ") is CharKind.CONSONANT
    assert char_kind("ా") is CharKind.DEPENDENT_VOWEL_SIGN
    assert char_kind("్") is CharKind.VIRAMA
    assert char_kind("అ") is CharKind.INDEPENDENT_VOWEL
    assert char_kind("ం") is CharKind.MODIFIER
    assert char_kind("ౘ") is CharKind.OTHER
    assert char_kind("౦") is CharKind.OTHER
    assert char_kind("a") is CharKind.OTHER


def test_unassigned_and_out_of_range_pass_through():
    # U+0C58 and Telugu digits are outside every mapped range
    assert telugu_to_wx("ౘ౧") == "ౘ౧"
    assert telugu_to_wx("క౧") == "ka౧"


def test_mapping_invariants():
    assert all(v.endswith("a") for v in DEFAULT_MAPPING.consonant_map.values())
    with pytest.raises(ValueError):
        MappingTable({0x0C15: "k"}, {}, {}, {})
    with pytest.raises(ValueError):
        MappingTable({}, {0x0C3E: "A", 0x0C3F: "A"}, {}, {})


@pytest.mark.parametrize("wx,telugu", [
    ("ka", "క"),
    ("k", "క్"),
    ("kka", "క్క"),
    ("aka", "అక"),
    ("kaa", "కఅ"),
    ("kM", "క్ం"),
])
def test_inverse_examples(wx, telugu):
    assert wx_to_telugu(wx) == telugu


def test_inverse_errors():
    with pytest.raises(Unrenderable):
        wx_to_telugu("Ma")
    with pytest.raises(UnknownSymbol):
        wx_to_telugu("kaY")


def test_inverse_copies_non_wx():
    assert wx_to_telugu("ka, kA!") == "క, కా!"


@pytest.mark.parametrize("wx", ["kaMpeVnIkaMteV", "KarcukaMteV", "lABAlaku"])
def test_golden_round_trip(wx):
    assert telugu_to_wx(wx_to_telugu(wx)) == wx


valid_wx = st.builds(lambda seed: random_wx_word(random.Random(seed)), st.integers(0, 2**32))


@given(valid_wx)
def test_round_trip_property(w):
    assert telugu_to_wx(wx_to_telugu(w)) == w


@given(valid_wx)
def test_telugu_side_is_fixed_point(w):
    # For text produced by wx_to_telugu the composition runs the other way too.
    t = wx_to_telugu(w)
    assert wx_to_telugu(telugu_to_wx(t)) == t


plain = st.text(
    alphabet=st.characters(blacklist_categories=("Mn", "Mc", "Me", "Cs"), max_codepoint=0x2FFF)
    .filter(lambda c: not has_telugu(c)),
    max_size=6,
)


@given(st.lists(st.tuples(valid_wx, plain), max_size=5))
def test_pass_through(segments):
    text = "".join(wx_to_telugu(w) + p for w, p in segments)
    expected = "".join(w + unicodedata.normalize("NFC", p) for w, p in segments)
    assert telugu_to_wx(text) == expected


@given(st.lists(st.integers(0x0C15, 0x0C39).filter(lambda cp: cp in DEFAULT_MAPPING.consonant_map), min_size=1),
       st.sampled_from(sorted(DEFAULT_MAPPING.dependent_vowel_map)))
def test_no_inherent_vowel_leak(consonants, sign):
    # consonant + sign: WX must be the bare consonant followed by the sign's vowel
    text = "".join(chr(cp) + chr(sign) for cp in consonants)
    vowel = DEFAULT_MAPPING.dependent_vowel_map[sign]
    expected = "".join(DEFAULT_MAPPING.consonant_map[cp][:-1] + vowel for cp in consonants)
    assert telugu_to_wx(text) == expected


@given(st.text(max_size=30))
def test_deterministic(text):
    try:
        first = telugu_to_wx(text)
    except DanglingSign:
        with pytest.raises(DanglingSign):
            telugu_to_wx(text)
        return
    assert telugu_to_wx(text) == first
