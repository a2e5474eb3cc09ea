"""WX phoneme inventory, articulatory classes and WX tokenization.

The inventory is kept as a small versioned text table so it can be audited
and overridden.  Each non-comment row is::

    symbol <TAB> category <TAB> class [<TAB> unconfirmed]

The first line must be the version header ``# wx-table v1``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from pathlib import Path

from .errors import TableFormatError, UnknownSymbol

TABLE_HEADER = "# wx-table v1"


class Category(enum.Enum):
    VOWEL = "Vowel"
    MODIFIER = "Modifier"
    CONSONANT = "Consonant"


class VowelClass(enum.Enum):
    CLOSED_FRONT = "ClosedFront"
    HALF_CLOSED_FRONT = "HalfClosedFront"
    CLOSED_BACK = "ClosedBack"
    HALF_CLOSED_BACK = "HalfClosedBack"
    OPEN = "Open"
    OTHER = "Other"


class ConsonantClass(enum.Enum):
    BILABIAL = "Bilabial"
    DENTAL_ALVEOLAR = "DentalAlveolar"
    RETROFLEX = "Retroflex"
    VELAR = "Velar"
    GLOTTAL = "Glottal"
    OTHER = "Other"


# Standard WX-for-Telugu table.  Q, L and LY fill the three vowel slots the
# printed inventory counts but never spells out; they are flagged unconfirmed.
DEFAULT_TABLE = f"""{TABLE_HEADER}
# vowels
a\tVowel\tOpen
A\tVowel\tOpen
i\tVowel\tClosedFront
I\tVowel\tClosedFront
u\tVowel\tClosedBack
U\tVowel\tClosedBack
q\tVowel\tOther
Q\tVowel\tOther\tunconfirmed
L\tVowel\tOther\tunconfirmed
LY\tVowel\tOther\tunconfirmed
eV\tVowel\tHalfClosedFront
e\tVowel\tHalfClosedFront
E\tVowel\tOther
oV\tVowel\tHalfClosedBack
o\tVowel\tHalfClosedBack
O\tVowel\tOther
# modifiers: anusvara, visarga, candrabindu
M\tModifier\t-
H\tModifier\t-
z\tModifier\t-
# consonants
k\tConsonant\tVelar
K\tConsonant\tVelar
g\tConsonant\tVelar
G\tConsonant\tVelar
f\tConsonant\tVelar
c\tConsonant\tOther
C\tConsonant\tOther
j\tConsonant\tOther
J\tConsonant\tOther
F\tConsonant\tOther
t\tConsonant\tRetroflex
T\tConsonant\tRetroflex
d\tConsonant\tRetroflex
D\tConsonant\tRetroflex
N\tConsonant\tRetroflex
w\tConsonant\tDentalAlveolar
W\tConsonant\tDentalAlveolar
x\tConsonant\tDentalAlveolar
X\tConsonant\tDentalAlveolar
n\tConsonant\tDentalAlveolar
p\tConsonant\tBilabial
P\tConsonant\tBilabial
b\tConsonant\tBilabial
B\tConsonant\tBilabial
m\tConsonant\tBilabial
y\tConsonant\tOther
r\tConsonant\tDentalAlveolar
l\tConsonant\tDentalAlveolar
v\tConsonant\tBilabial
S\tConsonant\tOther
R\tConsonant\tRetroflex
s\tConsonant\tDentalAlveolar
h\tConsonant\tGlottal
lY\tConsonant\tRetroflex
rY\tConsonant\tRetroflex
"""


@dataclass(frozen=True)
class Phoneme:
    symbol: str
    category: Category

    @property
    def is_vowel(self):
        return self.category is Category.VOWEL

    @property
    def is_consonant(self):
        return self.category is Category.CONSONANT

    @property
    def is_modifier(self):
        return self.category is Category.MODIFIER

    def __str__(self):
        return self.symbol


@dataclass(frozen=True)
class WxWord:
    source: str
    phonemes: tuple[Phoneme, ...]

    @property
    def text(self):
        return "".join(p.symbol for p in self.phonemes)

    @property
    def symbols(self):
        return [p.symbol for p in self.phonemes]

    def __len__(self):
        return len(self.phonemes)


@dataclass(frozen=True)
class Inventory:
    """Immutable symbol table; build with :func:`parse_table`."""

    phonemes: dict[str, Phoneme]
    classes: dict[str, VowelClass | ConsonantClass | None]
    unconfirmed: frozenset[str] = frozenset()
    version: str = "v1"
    _max_len: int = field(default=2, repr=False)

    def __contains__(self, symbol):
        return symbol in self.phonemes

    def __getitem__(self, symbol):
        return self.phonemes[symbol]

    def symbols(self, category=None):
        return [s for s, p in self.phonemes.items() if category is None or p.category is category]

    @property
    def vowels(self):
        return frozenset(self.symbols(Category.VOWEL))

    @property
    def modifiers(self):
        return frozenset(self.symbols(Category.MODIFIER))

    @property
    def consonants(self):
        return frozenset(self.symbols(Category.CONSONANT))


def parse_table(text):
    lines = text.splitlines()
    if not lines or lines[0].strip() != TABLE_HEADER:
        raise TableFormatError(f"table must start with {TABLE_HEADER!r}")
    phonemes, classes, unconfirmed = {}, {}, set()
    for lineno, raw in enumerate(lines[1:], start=2):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        cols = line.split("\t")
        if len(cols) not in (3, 4):
            raise TableFormatError(f"line {lineno}: expected 3 or 4 tab-separated columns, got {len(cols)}")
        symbol, cat_name, cls_name = cols[:3]
        if symbol in phonemes:
            raise TableFormatError(f"line {lineno}: duplicate symbol {symbol!r}")
        try:
            category = Category(cat_name)
        except ValueError:
            raise TableFormatError(f"line {lineno}: unknown category {cat_name!r}") from None
        try:
            if category is Category.VOWEL:
                cls = VowelClass(cls_name)
            elif category is Category.CONSONANT:
                cls = ConsonantClass(cls_name)
            else:
                cls = None
        except ValueError:
            raise TableFormatError(f"line {lineno}: unknown class {cls_name!r} for {category.value}") from None
        if len(cols) == 4:
            if cols[3] != "unconfirmed":
                raise TableFormatError(f"line {lineno}: unknown flag {cols[3]!r}")
            unconfirmed.add(symbol)
        phonemes[symbol] = Phoneme(symbol, category)
        classes[symbol] = cls
    if not phonemes:
        raise TableFormatError("table has no rows")
    return Inventory(phonemes, classes, frozenset(unconfirmed), _max_len=max(map(len, phonemes)))


def load_table(path):
    return parse_table(Path(path).read_text(encoding="utf-8"))


DEFAULT_INVENTORY = parse_table(DEFAULT_TABLE)


def tokenize_wx(wx_text, inventory=DEFAULT_INVENTORY, source=None):
    """Split a WX string into phonemes by greedy longest match.

    >>> tokenize_wx("lYa").symbols
    ['lY', 'a']
    """
    out = []
    i, n = 0, len(wx_text)
    table = inventory.phonemes
    while i < n:
        for size in range(min(inventory._max_len, n - i), 0, -1):
            p = table.get(wx_text[i:i + size])
            if p is not None:
                out.append(p)
                i += size
                break
        else:
            raise UnknownSymbol(wx_text, i)
    return WxWord(wx_text if source is None else source, tuple(out))


def classify(p, inventory=DEFAULT_INVENTORY):
    """Return ``(category, articulatory class)``; modifiers have class None."""
    symbol = p.symbol if isinstance(p, Phoneme) else p
    return inventory.phonemes[symbol].category, inventory.classes[symbol]
