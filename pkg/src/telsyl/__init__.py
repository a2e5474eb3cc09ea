"""Telugu text to WX, syllables, corpus statistics and training-word selection."""

from .corpus_stats import (
    Corpus,
    SyllableFrequencyTable,
    analyze,
    distribution_report,
    extract_words,
    frequency_buckets,
    phoneme_distribution,
    syllable_frequency,
)
from .errors import (
    DanglingSign,
    EmptyCorpus,
    EmptyTarget,
    NoVowel,
    TelsylError,
    UnknownSymbol,
    Unrenderable,
    UnreachableCoverage,
)
from .selector import count_words_by_index, greedy_cover, select_training_words, syllable_index
from .syllabifier import hyphenate, label, syllabify
from .transliterator import telugu_to_wx, wx_to_telugu
from .wx_core import DEFAULT_INVENTORY, classify, load_table, tokenize_wx

__version__ = "0.1.0"
