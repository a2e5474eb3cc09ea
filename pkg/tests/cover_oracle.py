"""Exhaustive minimum set cover and a plain (non-lazy) greedy, for cross-checks."""

import itertools
import math


def min_cover_size(sets, target):
    target = frozenset(target)
    names = sorted(sets)
    for k in range(1, len(names) + 1):
        for combo in itertools.combinations(names, k):
            if frozenset().union(*(sets[n] for n in combo)) >= target:
                return k
    return None


def harmonic(k):
    return sum(1 / i for i in range(1, k + 1))


def greedy_bound(sets, target, optimum):
    k = max(len(frozenset(s) & frozenset(target)) for s in sets.values())
    return math.ceil(harmonic(k)) * optimum


def naive_greedy(candidates, weights=None):
    """Rescans every word at every step with the same tie-break."""
    target = set().union(*map(set, candidates.values()))
    covered, chosen = set(), []
    while covered != target:
        best = None
        for w, syls in candidates.items():
            new = set(syls) - covered
            if not new:
                continue
            g = sum(weights[s] for s in new) if weights else len(new)
            key = (-g, len(syls), w)
            if best is None or key < best:
                best = key
        if best is None:
            break
        chosen.append(best[2])
        covered |= set(candidates[best[2]])
    return chosen
