"""Syllable-index word counts and greedy training-word selection."""

from __future__ import annotations

import heapq
from dataclasses import dataclass

from .corpus_stats import analyze, syllable_frequency
from .errors import EmptyCorpus, EmptyTarget, UnreachableCoverage
from .syllabifier import syllabify
from .wx_core import DEFAULT_INVENTORY

DEFAULT_THRESHOLDS = (0.5, 0.8, 1.0)


def _syllables(word, inventory):
    if isinstance(word, (tuple, list)):
        return list(word)
    return [s.text for s in syllabify(word, inventory)]


def syllable_index(word, table, cutoff, distinct=False, inventory=DEFAULT_INVENTORY):
    """Fraction of the word's syllables whose corpus frequency is at least ``cutoff``.

    ``word`` may be a WX string, a WxWord, or an already-split syllable list.
    Syllables missing from the table have frequency 0.  With ``distinct``
    each syllable is counted once per word instead of once per occurrence.
    """
    if cutoff < 1:
        raise ValueError("cutoff must be >= 1")
    syls = _syllables(word, inventory)
    if distinct:
        syls = list(dict.fromkeys(syls))
    ok = sum(1 for s in syls if table.get(s) >= cutoff)
    return ok / len(syls)


@dataclass
class IndexMatrix:
    cutoffs: list[int]
    thresholds: list[float]
    counts: dict[float, list[int]]  # threshold -> word count per cutoff

    def series(self, threshold):
        return list(zip(self.cutoffs, self.counts[threshold]))


def count_words_by_index(corpus, table, cutoffs, thresholds=DEFAULT_THRESHOLDS, distinct=False,
                         inventory=DEFAULT_INVENTORY):
    cutoffs = list(cutoffs)
    thresholds = list(thresholds)
    if any(not 0 < t <= 1 for t in thresholds):
        raise ValueError(f"thresholds must lie in (0, 1], got {thresholds}")
    if any(a > b for a, b in zip(cutoffs, cutoffs[1:])):
        raise ValueError(f"cutoffs must be ascending, got {cutoffs}")
    ac = analyze(corpus, inventory)
    if not ac.words:
        raise EmptyCorpus()
    counts = {t: [0] * len(cutoffs) for t in thresholds}
    for w in ac.words:
        for j, c in enumerate(cutoffs):
            idx = syllable_index(w.syllables, table, c, distinct)
            for t in thresholds:
                if idx >= t:
                    counts[t][j] += 1
    return IndexMatrix(cutoffs, thresholds, counts)


@dataclass
class SelectionResult:
    chosen: list[str]
    newly_covered: list[list[str]]
    coverage: list[float]
    target_size: int
    unreachable: list[str]

    @property
    def final_coverage(self):
        return self.coverage[-1] if self.coverage else 0.0

    def audit(self):
        return {
            "target_size": self.target_size,
            "unreachable": self.unreachable,
            "steps": [
                {"step": i + 1, "word": w, "new_syllables": new, "coverage": cov}
                for i, (w, new, cov) in enumerate(zip(self.chosen, self.newly_covered, self.coverage))
            ],
        }


def greedy_cover(candidates, target=None, coverage=1.0, max_words=None, weights=None):
    """Greedy maximum coverage over ``candidates`` (word -> syllable sequence).

    Each step takes the word adding the most uncovered target syllables (or
    the most uncovered weight when ``weights`` is given).  Ties go to the word
    with fewer syllables, then to the smaller string.  Gains only shrink as
    coverage grows, so stale heap entries are upper bounds and a popped entry
    whose recomputed key still sorts first is the true argmax.
    """
    universe = set()
    for syls in candidates.values():
        universe.update(syls)
    target = set(universe if target is None else target)
    if not target & universe:
        raise EmptyTarget()
    if not 0 < coverage <= 1:
        raise ValueError("coverage must lie in (0, 1]")
    # Coverage is measured against the whole target; syllables no candidate
    # contains are reported and cap the reachable coverage below 1.
    unreachable = sorted(target - universe)
    n = len(target)
    reachable = n - len(unreachable)

    def gain(syls, covered):
        new = syls - covered
        return sum(weights.get(s, 0) for s in new) if weights is not None else len(new)

    sets = {w: frozenset(syls) & target for w, syls in candidates.items()}
    sizes = {w: len(syls) for w, syls in candidates.items()}
    heap = [(-gain(s, frozenset()), sizes[w], w) for w, s in sets.items() if s]
    heapq.heapify(heap)

    covered = set()
    result = SelectionResult([], [], [], n, unreachable)
    while heap and len(covered) < reachable and len(covered) / n < coverage:
        if max_words is not None and len(result.chosen) >= max_words:
            break
        _, size, w = heapq.heappop(heap)
        key = (-gain(sets[w], covered), size, w)
        if heap and key > heap[0]:
            if key[0] < 0:
                heapq.heappush(heap, key)
            continue
        new = sets[w] - covered
        if not new:
            continue
        covered |= new
        result.chosen.append(w)
        result.newly_covered.append(sorted(new))
        result.coverage.append(len(covered) / n)
    budget_hit = max_words is not None and len(result.chosen) >= max_words
    if result.final_coverage < coverage and not budget_hit:
        raise UnreachableCoverage(result, coverage)
    return result


def select_training_words(corpus, target="all", coverage=1.0, max_words=None, weighted=False,
                          inventory=DEFAULT_INVENTORY):
    """Pick few word types whose syllables jointly cover ``target``.

    With ``weighted`` the gain of a word is the summed corpus frequency of
    the syllables it newly covers, so common syllables are secured first.
    """
    ac = analyze(corpus, inventory)
    if not ac.words:
        raise EmptyCorpus()
    candidates = {w.wx.text: w.syllables for w in ac.words}
    weights = syllable_frequency(ac, inventory=inventory).counts if weighted else None
    return greedy_cover(candidates, None if target == "all" else target, coverage, max_words, weights)
