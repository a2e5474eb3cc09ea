"""Command-line front end.

``transliterate`` and ``syllabify`` stream line by line.  ``stats``,
``buckets``, ``index`` and ``select`` need whole-corpus tables and read all
input first.

Diagnostics go to stderr as ``telsyl: <kind> key=value ...`` lines.  Exit
status is 0 on success, 1 for usage or I/O problems, 2 for data errors.
"""

from __future__ import annotations

import argparse
import io
import re
import sys
from dataclasses import dataclass, field
from pathlib import Path

from . import corpus_stats, reports, selector
from .errors import TelsylError, UnreachableCoverage
from .syllabifier import hyphenate
from .transliterator import has_telugu, telugu_to_wx
from .wx_core import DEFAULT_INVENTORY, load_table

COMMANDS = ("transliterate", "syllabify", "stats", "buckets", "index", "select")
EXIT_OK, EXIT_USAGE, EXIT_DATA = 0, 1, 2


@dataclass
class RunConfig:
    command: str
    inputs: list[str] = field(default_factory=list)
    output: str | None = None
    mode: str = "types"
    edges: list[int] = field(default_factory=lambda: list(corpus_stats.DEFAULT_EDGES))
    cutoffs: list[int] = field(default_factory=lambda: list(range(100, 1001, 100)))
    thresholds: list[float] = field(default_factory=lambda: list(selector.DEFAULT_THRESHOLDS))
    distinct: bool = False
    coverage: float = 1.0
    max_words: int | None = None
    weighted: bool = False
    target: str | None = None
    telugu: bool = False
    audit: str | None = None
    freq_csv: str | None = None
    series_dir: str | None = None
    table_file: str | None = None

    def __post_init__(self):
        if self.command not in COMMANDS:
            raise ValueError(f"unknown command {self.command!r}")
        if self.mode not in corpus_stats.MODES:
            raise ValueError(f"mode must be one of {corpus_stats.MODES}")


def _kv(**items):
    parts = []
    for k, v in items.items():
        v = str(v)
        parts.append(f"{k}={v}" if re.fullmatch(r"[\w.:/+-]+", v) else f"{k}={v!r}")
    return " ".join(parts)


class Diagnostics:
    def __init__(self, stream=None):
        self.stream = stream or sys.stderr
        self.skipped = 0
        self.words = 0

    def emit(self, kind, **items):
        print(f"telsyl: {kind} {_kv(**items)}", file=self.stream)

    def skip(self, exc, **context):
        self.skipped += 1
        self.emit("skip", code=exc.code, **context, msg=str(exc))


def _read_lines(paths, diag):
    """Yield decoded lines; undecodable bytes become U+FFFD and are counted."""
    sources = paths or ["-"]
    for path in sources:
        fh = sys.stdin.buffer if path == "-" else open(path, "rb")
        try:
            for raw in fh:
                line = raw.decode("utf-8", errors="replace")
                bad = line.count("�") - raw.decode("utf-8", errors="ignore").count("�")
                if bad:
                    diag.emit("warning", code="BadUtf8", file=path, replaced=bad)
                yield line.rstrip("\r\n")
        finally:
            if fh is not sys.stdin.buffer:
                fh.close()


class _Output:
    def __init__(self, path):
        self.fh = sys.stdout if path is None else open(path, "w", encoding="utf-8", newline="")

    def write(self, text):
        self.fh.write(text)

    def close(self):
        if self.fh is not sys.stdout:
            self.fh.close()


def _write(path, text):
    if path is None:
        sys.stdout.write(text)
    else:
        Path(path).write_text(text, encoding="utf-8", newline="")


def _transliterate_line(line, diag, lineno):
    """Transliterate whitespace-delimited chunks; failed chunks come back unchanged."""
    out = []
    for chunk in re.split(r"(\s+)", line):
        if chunk and not chunk.isspace():
            diag.words += 1
        if chunk and has_telugu(chunk):
            try:
                chunk = telugu_to_wx(chunk)
            except TelsylError as exc:
                diag.skip(exc, line=lineno, word=chunk)
        out.append(chunk)
    return "".join(out)


def _cmd_transliterate(cfg, diag, inventory):
    out = _Output(cfg.output)
    for lineno, line in enumerate(_read_lines(cfg.inputs, diag), start=1):
        out.write(_transliterate_line(line, diag, lineno) + "\n")
    out.close()
    return diag.words


def _cmd_syllabify(cfg, diag, inventory):
    out = _Output(cfg.output)
    n = 0
    quiet = Diagnostics(io.StringIO())
    for lineno, line in enumerate(_read_lines(cfg.inputs, diag), start=1):
        if has_telugu(line):
            # chunks that fail here are reported below when their word fails
            line = _transliterate_line(line, quiet, lineno)
        for word in corpus_stats.split_words(line):
            try:
                out.write(hyphenate(corpus_stats.to_wx(word), inventory) + "\n")
                n += 1
            except TelsylError as exc:
                diag.skip(exc, line=lineno, word=word)
    out.close()
    return n


def _load_corpus(cfg, diag, inventory):
    corpus = corpus_stats.extract_words(_read_lines(cfg.inputs, diag))
    ac = corpus_stats.analyze(corpus, inventory)
    for s in ac.skipped:
        diag.skipped += 1
        diag.emit("skip", code=s.code, word=s.word, msg=s.message)
    return ac


def _cmd_stats(cfg, diag, inventory):
    ac = _load_corpus(cfg, diag, inventory)
    report = corpus_stats.distribution_report(ac, cfg.mode, cfg.edges, inventory)
    table = corpus_stats.syllable_frequency(ac, cfg.mode, inventory)
    _write(cfg.output, reports.to_json(report.to_dict()))
    if cfg.freq_csv:
        _write(cfg.freq_csv, reports.frequency_csv(table))
    if cfg.series_dir:
        d = Path(cfg.series_dir)
        d.mkdir(parents=True, exist_ok=True)
        for name, series in reports.figure_series(report, table).items():
            _write(d / f"{name}.csv", reports.series_csv(series))
    return len(ac.words)


def _cmd_buckets(cfg, diag, inventory):
    ac = _load_corpus(cfg, diag, inventory)
    table = corpus_stats.syllable_frequency(ac, cfg.mode, inventory)
    _write(cfg.output, reports.buckets_csv(corpus_stats.frequency_buckets(table, cfg.edges)))
    return len(ac.words)


def _cmd_index(cfg, diag, inventory):
    ac = _load_corpus(cfg, diag, inventory)
    table = corpus_stats.syllable_frequency(ac, cfg.mode, inventory)
    matrix = selector.count_words_by_index(ac, table, cfg.cutoffs, cfg.thresholds, cfg.distinct, inventory)
    _write(cfg.output, reports.index_csv(matrix))
    return len(ac.words)


def _cmd_select(cfg, diag, inventory):
    ac = _load_corpus(cfg, diag, inventory)
    target = "all"
    if cfg.target:
        target = [s.strip() for s in Path(cfg.target).read_text(encoding="utf-8").splitlines() if s.strip()]
    try:
        result = selector.select_training_words(ac, target, cfg.coverage, cfg.max_words, cfg.weighted, inventory)
    except UnreachableCoverage as exc:
        _finish_select(cfg, exc.result)
        raise
    _finish_select(cfg, result)
    return len(ac.words)


def _finish_select(cfg, result):
    _write(cfg.output, reports.wordlist(result, cfg.telugu))
    if cfg.audit:
        _write(cfg.audit, reports.to_json(result.audit()))


_HANDLERS = {
    "transliterate": _cmd_transliterate,
    "syllabify": _cmd_syllabify,
    "stats": _cmd_stats,
    "buckets": _cmd_buckets,
    "index": _cmd_index,
    "select": _cmd_select,
}


def run(cfg, stderr=None):
    diag = Diagnostics(stderr)
    try:
        inventory = load_table(cfg.table_file) if cfg.table_file else DEFAULT_INVENTORY
        n = _HANDLERS[cfg.command](cfg, diag, inventory)
    except TelsylError as exc:
        diag.emit("error", code=exc.code, msg=str(exc))
        return EXIT_DATA
    except OSError as exc:
        diag.emit("error", code="IOError", msg=str(exc))
        return EXIT_USAGE
    diag.emit("summary", command=cfg.command, words=n, skipped=diag.skipped)
    return EXIT_OK


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"telsyl: error {_kv(code='Usage', msg=message)}", file=sys.stderr)
        sys.exit(EXIT_USAGE)


def _ints(text):
    return [int(x) for x in text.split(",") if x]


def _floats(text):
    return [float(x) for x in text.split(",") if x]


def build_parser():
    p = _Parser(prog="telsyl", description="Telugu WX transliteration, syllabification and corpus statistics.",
                allow_abbrev=False)
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, help_):
        sp = sub.add_parser(name, help=help_, allow_abbrev=False)
        sp.add_argument("inputs", nargs="*", help="input files (default: stdin)")
        sp.add_argument("-o", "--output", help="output file (default: stdout)")
        sp.add_argument("--table-file", help="WX inventory table overriding the built-in one")
        return sp

    add("transliterate", "Telugu text to WX, line structure preserved")
    add("syllabify", "one hyphen-joined word per line; Telugu lines are transliterated first")

    def corpus_opts(sp):
        sp.add_argument("--mode", choices=corpus_stats.MODES, default="types")
        return sp

    sp = corpus_opts(add("stats", "phoneme distribution report as JSON"))
    sp.add_argument("--edges", type=_ints, default=list(corpus_stats.DEFAULT_EDGES))
    sp.add_argument("--freq-csv", help="also write the syllable frequency table here")
    sp.add_argument("--series-dir", help="also write plot-ready (label,value) CSVs here")

    sp = corpus_opts(add("buckets", "distinct syllables per frequency range as CSV"))
    sp.add_argument("--edges", type=_ints, default=list(corpus_stats.DEFAULT_EDGES))

    sp = corpus_opts(add("index", "word counts by syllable index, one column per threshold"))
    sp.add_argument("--cutoffs", type=_ints, default=list(range(100, 1001, 100)))
    sp.add_argument("--thresholds", type=_floats, default=list(selector.DEFAULT_THRESHOLDS))
    sp.add_argument("--distinct", action="store_true", help="count distinct syllables per word")

    sp = add("select", "greedy word list covering the syllable inventory")
    sp.add_argument("--coverage", type=float, default=1.0)
    sp.add_argument("--max-words", type=int)
    sp.add_argument("--weighted", action="store_true", help="weight syllables by corpus frequency")
    sp.add_argument("--target", help="file with one target syllable per line (default: all)")
    sp.add_argument("--telugu", action="store_true", help="add a Telugu rendering column")
    sp.add_argument("--audit", help="write the per-step JSON audit log here")
    return p


def parse_config(argv):
    ns = build_parser().parse_args(argv)
    return RunConfig(**{k: v for k, v in vars(ns).items() if v is not None or k in ("output",)})


def main(argv=None):
    cfg = parse_config(sys.argv[1:] if argv is None else argv)
    return run(cfg)


if __name__ == "__main__":
    sys.exit(main())
