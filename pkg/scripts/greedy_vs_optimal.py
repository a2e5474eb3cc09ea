#!/usr/bin/env python3
"""Compare greedy cover size against the exhaustive optimum on small random instances."""

import argparse
import itertools
import math
import random
from collections import Counter
from dataclasses import dataclass

from telsyl.selector import greedy_cover
from telsyl.synth import random_cover_instance


@dataclass
class Config:
    trials: int = 200
    words: int = 15
    syllables: int = 12
    max_size: int = 5
    seed: int = 1


def optimum(sets):
    target = frozenset().union(*map(frozenset, sets.values()))
    names = sorted(sets)
    for k in range(1, len(names) + 1):
        for combo in itertools.combinations(names, k):
            if frozenset().union(*(frozenset(sets[n]) for n in combo)) >= target:
                return k


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    for name, default in vars(Config()).items():
        ap.add_argument(f"--{name}", type=int, default=default)
    cfg = Config(**vars(ap.parse_args()))
    rng = random.Random(cfg.seed)
    gaps = Counter()
    worst = 1.0
    for _ in range(cfg.trials):
        sets = random_cover_instance(rng, cfg.words, cfg.syllables, cfg.max_size)
        g, opt = len(greedy_cover(sets).chosen), optimum(sets)
        k = max(len(set(v)) for v in sets.values())
        bound = math.ceil(sum(1 / i for i in range(1, k + 1))) * opt
        assert g <= bound, (sets, g, opt)
        gaps[g - opt] += 1
        worst = max(worst, g / opt)
    print("greedy - optimal : instances")
    for gap in sorted(gaps):
        print(f"{gap:>16} : {gaps[gap]}")
    print(f"worst ratio {worst:.3f}")


if __name__ == "__main__":
    main()
