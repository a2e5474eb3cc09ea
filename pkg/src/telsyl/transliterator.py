"""Telugu Unicode <-> WX conversion.

Forward conversion is a single pass over codepoints.  A consonant appends
its WX form with the inherent ``a``; a dependent vowel sign or virama drops
that trailing ``a`` again.  Anything outside the mapped Telugu ranges is
copied through, and it also ends the current word, so a sign can never
reach back across a space or punctuation mark.
"""

from __future__ import annotations

import enum
import re
import unicodedata
from dataclasses import dataclass

from .errors import DanglingSign, Unrenderable
from .wx_core import DEFAULT_INVENTORY, Category, tokenize_wx

VIRAMA = 0x0C4D
TELUGU_BLOCK = range(0x0C00, 0x0C80)


class CharKind(enum.Enum):
    CONSONANT = "Consonant"
    DEPENDENT_VOWEL_SIGN = "DependentVowelSign"
    VIRAMA = "Virama"
    INDEPENDENT_VOWEL = "IndependentVowel"
    MODIFIER = "Modifier"
    OTHER = "Other"


# Checked in order.  The vocalic RR/LL letters and the vocalic L/LL signs sit
# outside the main runs in the Unicode chart, hence the extra ranges.
_KIND_RANGES = [
    (range(0x0C15, 0x0C3A), CharKind.CONSONANT),
    (range(0x0C3E, 0x0C4D), CharKind.DEPENDENT_VOWEL_SIGN),
    (range(0x0C62, 0x0C64), CharKind.DEPENDENT_VOWEL_SIGN),
    (range(VIRAMA, VIRAMA + 1), CharKind.VIRAMA),
    (range(0x0C05, 0x0C15), CharKind.INDEPENDENT_VOWEL),
    (range(0x0C60, 0x0C62), CharKind.INDEPENDENT_VOWEL),
    (range(0x0C01, 0x0C04), CharKind.MODIFIER),
]


def char_kind(ch):
    cp = ord(ch)
    for rng, kind in _KIND_RANGES:
        if cp in rng:
            return kind
    return CharKind.OTHER


@dataclass(frozen=True)
class MappingTable:
    consonant_map: dict[int, str]
    dependent_vowel_map: dict[int, str]
    independent_vowel_map: dict[int, str]
    modifier_map: dict[int, str]

    def __post_init__(self):
        for cp, wx in self.consonant_map.items():
            if not wx.endswith("a"):
                raise ValueError(f"consonant U+{cp:04X} maps to {wx!r} without inherent vowel")
        for name in ("consonant_map", "dependent_vowel_map", "independent_vowel_map", "modifier_map"):
            values = list(getattr(self, name).values())
            if len(set(values)) != len(values):
                raise ValueError(f"{name} is not injective")


def _seq(start, symbols):
    """Map consecutive codepoints from ``start``; None marks a reserved slot."""
    return {start + i: s for i, s in enumerate(symbols) if s is not None}


DEFAULT_MAPPING = MappingTable(
    consonant_map={
        cp: wx + "a"
        for cp, wx in _seq(0x0C15, [
            "k", "K", "g", "G", "f",
            "c", "C", "j", "J", "F",
            "t", "T", "d", "D", "N",
            "w", "W", "x", "X", "n", None,
            "p", "P", "b", "B", "m",
            "y", "r", "rY", "l", "lY", None, "v", "S", "R", "s", "h",
        ]).items()
    },
    dependent_vowel_map={
        **_seq(0x0C3E, ["A", "i", "I", "u", "U", "q", "Q", None, "eV", "e", "E", None, "oV", "o", "O"]),
        **_seq(0x0C62, ["L", "LY"]),
    },
    independent_vowel_map={
        **_seq(0x0C05, ["a", "A", "i", "I", "u", "U", "q", "L", None, "eV", "e", "E", None, "oV", "o", "O"]),
        **_seq(0x0C60, ["Q", "LY"]),
    },
    modifier_map={0x0C01: "z", 0x0C02: "M", 0x0C03: "H"},
)


def telugu_to_wx(text, mapping=DEFAULT_MAPPING):
    """Convert Telugu text to WX, passing other characters through.

    >>> telugu_to_wx("\\u0c15\\u0c4d\\u0c15")
    'kka'
    """
    text = unicodedata.normalize("NFC", text)
    out = []
    # True while the last thing appended is a consonant's inherent "a".
    inherent = False
    for pos, ch in enumerate(text):
        cp = ord(ch)
        kind = char_kind(ch)
        if kind is CharKind.CONSONANT and cp in mapping.consonant_map:
            out.append(mapping.consonant_map[cp])
            inherent = True
        elif kind is CharKind.DEPENDENT_VOWEL_SIGN or kind is CharKind.VIRAMA:
            vowel = mapping.dependent_vowel_map.get(cp, "") if kind is CharKind.DEPENDENT_VOWEL_SIGN else ""
            if not inherent or (kind is CharKind.DEPENDENT_VOWEL_SIGN and not vowel):
                raise DanglingSign(text, pos)
            out[-1] = out[-1][:-1] + vowel
            inherent = False
        elif kind is CharKind.INDEPENDENT_VOWEL and cp in mapping.independent_vowel_map:
            out.append(mapping.independent_vowel_map[cp])
            inherent = False
        elif kind is CharKind.MODIFIER:
            out.append(mapping.modifier_map[cp])
            inherent = False
        else:
            out.append(ch)
            inherent = False
    return "".join(out)


_INVERSE_CACHE = {}


def _inverses(mapping):
    key = id(mapping)
    if key not in _INVERSE_CACHE:
        def inv(m):
            return {wx: chr(cp) for cp, wx in m.items()}
        _INVERSE_CACHE[key] = (
            mapping,  # pins the table so its id stays valid
            {wx[:-1]: ch for wx, ch in inv(mapping.consonant_map).items()},
            inv(mapping.dependent_vowel_map),
            inv(mapping.independent_vowel_map),
            inv(mapping.modifier_map),
        )
    return _INVERSE_CACHE[key][1:]


_WX_RUN = re.compile(r"[A-Za-z]+")


def wx_to_telugu(wx, mapping=DEFAULT_MAPPING, inventory=DEFAULT_INVENTORY):
    """Render WX as Telugu script.

    Runs of ASCII letters are treated as WX words; everything between them
    is copied unchanged.
    """
    out = []
    last = 0
    for m in _WX_RUN.finditer(wx):
        out.append(wx[last:m.start()])
        out.append(_render_word(m.group(), mapping, inventory))
        last = m.end()
    out.append(wx[last:])
    return "".join(out)


def _render_word(word, mapping, inventory):
    consonants, signs, indep, mods = _inverses(mapping)
    virama = chr(VIRAMA)

    out = []
    bare = False  # previous consonant still carries an unresolved inherent vowel
    for i, p in enumerate(tokenize_wx(word, inventory).phonemes):
        s = p.symbol
        if p.category is Category.CONSONANT:
            if s not in consonants:
                raise Unrenderable(s, i)
            if bare:
                out.append(virama)
            out.append(consonants[s])
            bare = True
        elif p.category is Category.VOWEL:
            if bare:
                if s != "a":
                    if s not in signs:
                        raise Unrenderable(s, i)
                    out.append(signs[s])
            else:
                if s not in indep:
                    raise Unrenderable(s, i)
                out.append(indep[s])
            bare = False
        else:
            if i == 0 or s not in mods:
                raise Unrenderable(s, i)
            if bare:
                out.append(virama)
            out.append(mods[s])
            bare = False
    if bare:
        out.append(virama)
    return "".join(out)


def has_telugu(text):
    return any(ord(ch) in TELUGU_BLOCK for ch in text)
