#!/usr/bin/env python3
"""Run the whole analysis on a synthetic WX corpus and dump every table.

The real measurement corpus is not redistributable, so this is the quickest
way to see what each output looks like end to end:

    python scripts/synthetic_corpus_report.py --words 50000 --out runs/synth
"""

import argparse
import random
from dataclasses import asdict, dataclass
from pathlib import Path

from telsyl import reports
from telsyl.corpus_stats import analyze, distribution_report, extract_words, syllable_frequency
from telsyl.selector import count_words_by_index, select_training_words
from telsyl.synth import synthetic_corpus


@dataclass
class Config:
    words: int = 20000
    seed: int = 0
    out: str = "runs/synthetic"
    mode: str = "types"
    coverage: float = 1.0


def run(cfg):
    out = Path(cfg.out)
    out.mkdir(parents=True, exist_ok=True)
    rng = random.Random(cfg.seed)
    tokens = synthetic_corpus(rng, cfg.words)
    ac = analyze(extract_words(" ".join(tokens)))
    table = syllable_frequency(ac, cfg.mode)
    report = distribution_report(ac, cfg.mode, edges=[2, 5, 10, 50, 100])

    (out / "config.json").write_text(reports.to_json(asdict(cfg)))
    (out / "report.json").write_text(reports.to_json(report.to_dict()), encoding="utf-8")
    (out / "syllable_freq.csv").write_text(reports.frequency_csv(table), encoding="utf-8")
    for name, series in reports.figure_series(report, table).items():
        (out / f"{name}.csv").write_text(reports.series_csv(series), encoding="utf-8")

    top = max(table.counts.values())
    cutoffs = sorted({max(1, round(top * f)) for f in (0.001, 0.01, 0.05, 0.1, 0.25, 0.5)})
    matrix = count_words_by_index(ac, table, cutoffs)
    (out / "index_counts.csv").write_text(reports.index_csv(matrix), encoding="utf-8")

    sel = select_training_words(ac, coverage=cfg.coverage)
    (out / "selection.txt").write_text(reports.wordlist(sel), encoding="utf-8")
    (out / "selection_audit.json").write_text(reports.to_json(sel.audit()), encoding="utf-8")

    print(f"types={ac.corpus.total_types} analyzed={len(ac.words)} skipped={len(ac.skipped)}")
    print(f"distinct syllables={table.total_distinct}")
    print("phoneme shares: " + ", ".join(f"{k} {v:.2f}%" for k, v in report.phoneme_shares.items()))
    print(f"selected {len(sel.chosen)} words for coverage {sel.final_coverage:.3f}")
    print(f"outputs in {out}/")


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    for name, default in asdict(Config()).items():
        ap.add_argument(f"--{name}", type=type(default), default=default)
    run(Config(**vars(ap.parse_args())))


if __name__ == "__main__":
    main()
