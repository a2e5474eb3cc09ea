"""Serialization of tables and reports to CSV, JSON and plain word lists.

Everything here returns ``str`` so callers decide where bytes go; output is
deterministic (sorted keys, fixed row order, ``\\n`` line endings).
"""

import csv
import io
import json

from .corpus_stats import range_histogram
from .errors import TelsylError
from .transliterator import wx_to_telugu


def to_csv(rows, header=None):
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n", quoting=csv.QUOTE_MINIMAL)
    if header:
        writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def to_json(obj):
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def frequency_csv(table):
    return to_csv(table.rows(), header=("syllable", "count"))


def buckets_csv(buckets):
    return to_csv(buckets.items(), header=("label", "value"))


def _fmt(x):
    return f"{x:.2f}" if isinstance(x, float) else str(x)


def figure_series(report, table):
    """Plot-ready ``(label, value)`` series for the phoneme and frequency charts."""
    return {
        "phoneme_shares": list(report.phoneme_shares.items()),
        "vowel_class_shares": list(report.vowel_class_shares.items()),
        "vowel_symbol_shares": list(report.vowel_symbol_shares.items()),
        "consonant_class_shares": list(report.consonant_class_shares.items()),
        "consonant_symbol_shares": list(report.consonant_symbol_shares.items()),
        "syllables_100_1k": list(range_histogram(table, 100, 1000, 100).items()),
        "syllables_1k_10k": list(range_histogram(table, 1000, 10000, 1000).items()),
        "syllables_10k_100k": list(range_histogram(table, 10000, 100000, 10000).items()),
    }


def series_csv(series):
    return to_csv(((label, _fmt(v)) for label, v in series), header=("label", "value"))


def index_csv(matrix):
    header = ["cutoff", *(f"{t:g}" for t in matrix.thresholds)]
    rows = [[c, *(matrix.counts[t][j] for t in matrix.thresholds)] for j, c in enumerate(matrix.cutoffs)]
    return to_csv(rows, header=header)


def wordlist(result, telugu=False):
    lines = []
    for w in result.chosen:
        if telugu:
            try:
                script = wx_to_telugu(w)
            except TelsylError:
                script = ""
            lines.append(f"{w}\t{script}")
        else:
            lines.append(w)
    return "".join(line + "\n" for line in lines)
