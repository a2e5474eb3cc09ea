"""Random WX words and corpora for property tests and experiments."""

import random

from .wx_core import DEFAULT_INVENTORY, Category


def random_wx_word(rng, max_len=8, inventory=DEFAULT_INVENTORY, min_len=1):
    """A phoneme sequence that renders in Telugu script (it never starts with a modifier)."""
    symbols = sorted(inventory.phonemes)
    starters = [s for s in symbols if inventory[s].category is not Category.MODIFIER]
    n = rng.randint(min_len, max_len)
    out = [rng.choice(starters)]
    out.extend(rng.choice(symbols) for _ in range(n - 1))
    return "".join(out)


def random_syllable_word(rng, max_syllables=4, onsets=("", "k", "g", "t", "n", "m", "p", "r", "l", "s", "kr", "py"),
                         nuclei=("a", "A", "i", "I", "u", "eV", "o"), codas=("", "", "", "M", "n")):
    """A pronounceable word built from CV(C) pieces; skews toward common syllables."""
    return "".join(
        rng.choice(onsets) + rng.choice(nuclei) + rng.choice(codas)
        for _ in range(rng.randint(1, max_syllables))
    )


def synthetic_corpus(rng, n_words, no_vowel_rate=0.02, inventory=DEFAULT_INVENTORY):
    """``n_words`` WX tokens; a fraction consists of consonants only."""
    consonants = sorted(inventory.consonants)
    words = []
    for _ in range(n_words):
        if rng.random() < no_vowel_rate:
            words.append("".join(rng.choice(consonants) for _ in range(rng.randint(1, 3))))
        elif rng.random() < 0.5:
            words.append(random_syllable_word(rng))
        else:
            words.append(random_wx_word(rng, 8, inventory))
    return words


def random_cover_instance(rng, n_words=15, n_syllables=12, max_size=5):
    words = {}
    for i in range(rng.randint(1, n_words)):
        k = rng.randint(1, min(max_size, n_syllables))
        words[f"w{i:02d}"] = [f"s{j:02d}" for j in rng.sample(range(n_syllables), k)]
    return words


def make_rng(seed):
    return random.Random(seed)
