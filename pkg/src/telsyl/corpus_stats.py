"""Corpus cleaning, phoneme distributions and syllable frequency tables.

All statistics are computed over word types by default: each distinct word
counts once regardless of how often it occurs.  ``mode="tokens"`` weights
every type by its token count instead.
"""

from __future__ import annotations

import bisect
import unicodedata
from collections import Counter
from dataclasses import dataclass, field

from .errors import EmptyCorpus, TelsylError
from .syllabifier import syllabify
from .transliterator import DEFAULT_MAPPING, has_telugu, telugu_to_wx
from .wx_core import DEFAULT_INVENTORY, Category, ConsonantClass, VowelClass, WxWord, tokenize_wx

DEFAULT_EDGES = (100, 1000, 10000, 100000)
MODES = ("types", "tokens")


@dataclass
class Corpus:
    type_counts: Counter = field(default_factory=Counter)
    replacements: int = 0

    @property
    def word_types(self):
        return sorted(self.type_counts)

    @property
    def total_tokens(self):
        return sum(self.type_counts.values())

    @property
    def total_types(self):
        return len(self.type_counts)

    def merge(self, other):
        return Corpus(self.type_counts + other.type_counts, self.replacements + other.replacements)

    def serialize(self):
        """One type per line, sorted; feeding this back to extract_words is a no-op on the type set."""
        return "".join(w + "\n" for w in self.word_types)

    def __len__(self):
        return len(self.type_counts)


def _is_edge_junk(ch):
    cat = unicodedata.category(ch)
    return cat[0] in "PS" or cat == "Nd"


def clean_token(token):
    token = "".join(ch for ch in token if unicodedata.category(ch) != "Cf")
    start, end = 0, len(token)
    while start < end and _is_edge_junk(token[start]):
        start += 1
    while end > start and _is_edge_junk(token[end - 1]):
        end -= 1
    return token[start:end]


def split_words(line):
    """Whitespace and dash punctuation delimit words; edges are then cleaned."""
    buf = []
    for ch in line:
        buf.append(" " if unicodedata.category(ch) == "Pd" else ch)
    words = (clean_token(t) for t in "".join(buf).split())
    return [w for w in words if w]


def extract_words(raw):
    """Build a :class:`Corpus` from text, bytes, or an iterable of lines."""
    replacements = 0
    if isinstance(raw, (bytes, bytearray)):
        text = raw.decode("utf-8", errors="replace")
        replacements = text.count("�") - raw.decode("utf-8", errors="ignore").count("�")
        lines = text.splitlines()
    elif isinstance(raw, str):
        lines = raw.splitlines()
    else:
        lines = raw
    counts = Counter()
    for line in lines:
        counts.update(split_words(unicodedata.normalize("NFC", line)))
    return Corpus(counts, replacements)


def to_wx(word, mapping=DEFAULT_MAPPING):
    return telugu_to_wx(word, mapping) if has_telugu(word) else word


@dataclass(frozen=True)
class AnalyzedWord:
    source: str
    wx: WxWord
    syllables: tuple[str, ...]
    tokens: int


@dataclass(frozen=True)
class Skipped:
    word: str
    code: str
    message: str


@dataclass
class AnalyzedCorpus:
    words: list[AnalyzedWord]
    skipped: list[Skipped]
    corpus: Corpus

    def weight(self, w, mode):
        if mode not in MODES:
            raise ValueError(f"mode must be one of {MODES}, got {mode!r}")
        return 1 if mode == "types" else w.tokens


def analyze(corpus, inventory=DEFAULT_INVENTORY, mapping=DEFAULT_MAPPING):
    """Transliterate, tokenize and syllabify every type; failures go to ``skipped``.

    Words are processed in sorted order so the result does not depend on the
    order lines arrived in.
    """
    if isinstance(corpus, AnalyzedCorpus):
        return corpus
    words, skipped = [], []
    for source in corpus.word_types:
        try:
            wx = tokenize_wx(to_wx(source, mapping), inventory, source=source)
            syls = tuple(s.text for s in syllabify(wx, inventory))
        except TelsylError as exc:
            skipped.append(Skipped(source, exc.code, str(exc)))
            continue
        words.append(AnalyzedWord(source, wx, syls, corpus.type_counts[source]))
    return AnalyzedCorpus(words, skipped, corpus)


def _shares(counter, keys):
    total = sum(counter.values())
    if total == 0:
        return {k: 0.0 for k in keys}
    return {k: counter.get(k, 0) * 100.0 / total for k in keys}


@dataclass
class DistributionReport:
    phoneme_counts: dict[str, int]
    phoneme_shares: dict[str, float]
    vowel_class_shares: dict[str, float]
    consonant_class_shares: dict[str, float]
    vowel_symbol_shares: dict[str, float]
    consonant_symbol_shares: dict[str, float]
    bucket_counts: dict[str, int] = field(default_factory=dict)
    mode: str = "types"
    words: int = 0
    skipped: int = 0

    def to_dict(self, ndigits=2):
        def rnd(d):
            return {k: round(v, ndigits) for k, v in d.items()}

        return {
            "mode": self.mode,
            "words": self.words,
            "skipped": self.skipped,
            "phoneme_counts": dict(self.phoneme_counts),
            "phoneme_shares": rnd(self.phoneme_shares),
            "vowel_class_shares": rnd(self.vowel_class_shares),
            "consonant_class_shares": rnd(self.consonant_class_shares),
            "vowel_symbol_shares": rnd(self.vowel_symbol_shares),
            "consonant_symbol_shares": rnd(self.consonant_symbol_shares),
            "bucket_counts": dict(self.bucket_counts),
        }


def phoneme_distribution(corpus, mode="types", inventory=DEFAULT_INVENTORY):
    ac = analyze(corpus, inventory)
    by_cat, by_vclass, by_cclass = Counter(), Counter(), Counter()
    vowels, consonants = Counter(), Counter()
    for w in ac.words:
        weight = ac.weight(w, mode)
        for p in w.wx.phonemes:
            by_cat[p.category.value] += weight
            cls = inventory.classes[p.symbol]
            if p.category is Category.VOWEL:
                by_vclass[cls.value] += weight
                vowels[p.symbol] += weight
            elif p.category is Category.CONSONANT:
                by_cclass[cls.value] += weight
                consonants[p.symbol] += weight
    if sum(by_cat.values()) == 0:
        raise EmptyCorpus()
    cats = [c.value for c in Category]
    return DistributionReport(
        phoneme_counts={c: by_cat.get(c, 0) for c in cats},
        phoneme_shares=_shares(by_cat, cats),
        vowel_class_shares=_shares(by_vclass, [c.value for c in VowelClass]),
        consonant_class_shares=_shares(by_cclass, [c.value for c in ConsonantClass]),
        vowel_symbol_shares=_shares(vowels, inventory.symbols(Category.VOWEL)),
        consonant_symbol_shares=_shares(consonants, inventory.symbols(Category.CONSONANT)),
        mode=mode,
        words=len(ac.words),
        skipped=len(ac.skipped),
    )


@dataclass
class SyllableFrequencyTable:
    counts: dict[str, int]
    skipped: tuple[str, ...] = ()

    def __post_init__(self):
        bad = [s for s, c in self.counts.items() if c < 1]
        if bad:
            raise ValueError(f"non-positive counts for {bad[:5]}")

    @property
    def total_distinct(self):
        return len(self.counts)

    def get(self, syllable):
        return self.counts.get(syllable, 0)

    def merge(self, other):
        merged = Counter(self.counts)
        merged.update(other.counts)
        return SyllableFrequencyTable(dict(merged), tuple(sorted(set(self.skipped) | set(other.skipped))))

    def rows(self):
        """(syllable, count) by descending count, then syllable."""
        return sorted(self.counts.items(), key=lambda kv: (-kv[1], kv[0]))


def syllable_frequency(corpus, mode="types", inventory=DEFAULT_INVENTORY):
    ac = analyze(corpus, inventory)
    if not ac.words:
        raise EmptyCorpus()
    counts = Counter()
    for w in ac.words:
        weight = ac.weight(w, mode)
        for s in w.syllables:
            counts[s] += weight
    return SyllableFrequencyTable(dict(counts), tuple(s.word for s in ac.skipped if s.code == "NoVowel"))


def _bucket_label(lo, hi):
    return f"[{lo},{'inf' if hi is None else hi})"


def frequency_buckets(table, edges=DEFAULT_EDGES):
    """Distinct-syllable counts per half-open frequency range ``[lo, hi)``."""
    edges = list(edges)
    if any(e < 1 for e in edges) or any(a >= b for a, b in zip(edges, edges[1:])):
        raise ValueError(f"edges must be strictly ascending and >= 1, got {edges}")
    # counts start at 1, so an edge of 1 adds no bucket
    bounds = edges if edges and edges[0] == 1 else [1, *edges]
    his = [*bounds[1:], None]
    out = {_bucket_label(lo, hi): 0 for lo, hi in zip(bounds, his)}
    labels = list(out)
    for c in table.counts.values():
        out[labels[bisect.bisect_right(bounds, c) - 1]] += 1
    return out


def range_histogram(table, lo, hi, step):
    """Buckets of width ``step`` over ``[lo, hi)``, as drawn in the frequency figures."""
    edges = list(range(lo, hi + 1, step))
    full = frequency_buckets(table, edges)
    return dict(list(full.items())[1:-1])


def distribution_report(corpus, mode="types", edges=DEFAULT_EDGES, inventory=DEFAULT_INVENTORY):
    ac = analyze(corpus, inventory)
    report = phoneme_distribution(ac, mode, inventory)
    report.bucket_counts = frequency_buckets(syllable_frequency(ac, mode, inventory), edges)
    return report
