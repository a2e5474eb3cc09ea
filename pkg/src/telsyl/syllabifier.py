"""Consonant/vowel labelling and rule-based syllable splitting of WX words.

Labelling merges a few two-consonant clusters into a single C unit.  The
label string is then cut between every pair of neighbouring vowels:

    VV -> V-V,  VCV -> V-CV,  VCCV -> VC-CV,  VCCCV -> VC-CCV

and in general the first of two or more intervening C units closes the left
syllable while the rest open the right one.  Leading and trailing C units
stay with the nearest vowel.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NoVowel
from .wx_core import DEFAULT_INVENTORY, Phoneme, WxWord, tokenize_wx

# (second consonant, predicate on the first) in application order.
_CLUSTER_RULES = (
    ("y", lambda x: x not in {"y", "H", "M"}),
    ("r", lambda x: x not in {"y", "r", "l", "lY", "rY"}),
    ("l", lambda x: x in {"k", "c", "t", "w", "p", "g", "j", "d", "x", "b", "m", "R", "S", "s"}),
    ("v", lambda x: x in {"k", "c", "t", "w", "p", "g", "j", "d", "x", "b", "R", "S", "s", "r"}),
)


@dataclass(frozen=True)
class LabeledWord:
    word: WxWord
    labels: str
    units: tuple[tuple[Phoneme, ...], ...]


@dataclass(frozen=True)
class Syllable:
    phonemes: tuple[Phoneme, ...]

    @property
    def text(self):
        return "".join(p.symbol for p in self.phonemes)

    def __str__(self):
        return self.text


def _as_word(word, inventory):
    if isinstance(word, WxWord):
        return word
    return tokenize_wx(word, inventory)


def _merges(first, second):
    if not (first.is_consonant and second.is_consonant):
        return False
    for follower, allowed in _CLUSTER_RULES:
        if second.symbol == follower:
            return allowed(first.symbol)
    return False


def label(word, inventory=DEFAULT_INVENTORY):
    word = _as_word(word, inventory)
    ph = word.phonemes
    units, labels = [], []
    i = 0
    while i < len(ph):
        if i + 1 < len(ph) and _merges(ph[i], ph[i + 1]):
            units.append((ph[i], ph[i + 1]))
            labels.append("C")
            i += 2
            continue
        units.append((ph[i],))
        labels.append("V" if ph[i].is_vowel else "C")
        i += 1
    return LabeledWord(word, "".join(labels), tuple(units))


def split_points(labels):
    """Unit indices where a new syllable starts (the first syllable excluded)."""
    vowels = [i for i, c in enumerate(labels) if c == "V"]
    cuts = []
    for left, right in zip(vowels, vowels[1:]):
        gap = right - left - 1
        cuts.append(left + 1 if gap <= 1 else left + 2)
    return cuts


def syllabify(word, inventory=DEFAULT_INVENTORY):
    word = _as_word(word, inventory)
    lw = label(word, inventory)
    if "V" not in lw.labels:
        raise NoVowel(word.source)
    bounds = [0, *split_points(lw.labels), len(lw.units)]
    return [
        Syllable(tuple(p for unit in lw.units[a:b] for p in unit))
        for a, b in zip(bounds, bounds[1:])
    ]


def hyphenate(word, inventory=DEFAULT_INVENTORY, sep="-"):
    """``"lABAlaku"`` -> ``"lA-BA-la-ku"``."""
    return sep.join(s.text for s in syllabify(word, inventory))
