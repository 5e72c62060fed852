"""Command-line interface: build, classify, eval, sweep."""
from __future__ import annotations

import argparse
import csv
import io
import itertools
import json
import sys
from decimal import Decimal, InvalidOperation
from pathlib import Path

from .classifier import Computed, classify_batch
from .core import IdeosentError, SentimentScheme
from .evaluation import evaluate, sweep
from .formats import (
    FormatError,
    parse_gold_file,
    parse_negation_file,
    parse_ontology,
    parse_training_file,
    parse_word_list,
    serialize_ontology,
    write_atomic,
)
from .ontology import BuilderParams, NegationSet, build_ontology

GRID_NAMES = {"t": "threshold", "threshold": "threshold", "lvb": "lvb", "uvb": "uvb"}
GRID_DEFAULTS = {"threshold": [1], "lvb": [0.1], "uvb": [0.65]}


class CliError(IdeosentError):
    pass


def _read(path: str, what: str) -> bytes:
    try:
        return Path(path).read_bytes()
    except OSError as exc:
        raise CliError(f"cannot read {what} {path!r}: {exc.strerror or exc}") from None


def _scheme(arg: str | None) -> SentimentScheme | None:
    return SentimentScheme.parse(arg) if arg else None


def _negations(path: str | None) -> NegationSet:
    return parse_negation_file(_read(path, "negation file")) if path else NegationSet()


def _values(name: str, text: str):
    conv = int if name == "threshold" else float
    try:
        if ":" in text:
            start, step, end = (Decimal(x) for x in text.split(":"))
            if step <= 0:
                raise CliError(f"grid step for {name} must be positive")
            out, v = [], start
            while v <= end:
                out.append(v)
                v += step
        else:
            out = [Decimal(x) for x in text.split("|")]
    except (InvalidOperation, ValueError):
        raise CliError(f"malformed grid values for {name}: {text!r}") from None
    if conv is int and any(v != v.to_integral_value() for v in out):
        raise CliError(f"threshold values must be integers: {text!r}")
    if not out:
        raise CliError(f"empty grid range for {name}: {text!r}")
    return [conv(v) for v in out]


def parse_grid(grid: str) -> list[BuilderParams]:
    """``T=1:1:8,LVB=0.3,UVB=0.65|0.7`` -> cartesian product of parameter sets.

    Ranges are ``start:step:end`` with an inclusive end; alternatives are
    separated by ``|``. Unnamed parameters take their defaults.
    """
    axes = dict(GRID_DEFAULTS)
    seen = set()
    for part in filter(None, (p.strip() for p in grid.split(","))):
        name, sep, text = part.partition("=")
        key = GRID_NAMES.get(name.strip().lower())
        if not sep or key is None:
            raise CliError(f"malformed grid item {part!r}; expected name=start:step:end "
                           f"or name=v1|v2 with name in T, LVB, UVB")
        if key in seen:
            raise CliError(f"grid parameter {name} given twice")
        seen.add(key)
        axes[key] = _values(key, text.strip())
    try:
        return [BuilderParams(t, lo, hi)
                for t, lo, hi in itertools.product(axes["threshold"], axes["lvb"], axes["uvb"])]
    except IdeosentError as exc:
        raise CliError(f"grid contains invalid parameters: {exc}") from None


def _fmt_vector(v) -> str:
    return ",".join(repr(x) for x in v.as_floats())


def cmd_build(args) -> None:
    lexicon = parse_training_file(_read(args.train, "training file"), _scheme(args.scheme))
    params = BuilderParams(args.threshold, args.lvb, args.uvb)
    ontology = build_ontology(lexicon, params, _negations(args.negations))
    write_atomic(args.out, serialize_ontology(ontology))
    n_keys = len(ontology.key_chars)
    print(f"{len(ontology)} entries ({n_keys} key), {len(ontology.diagnostics)} rejected "
          f"-> {args.out}", file=sys.stderr)


def cmd_classify(args) -> None:
    ontology = parse_ontology(_read(args.ontology, "ontology"))
    words = parse_word_list(_read(args.input, "input word list"))
    for no, w in enumerate(words, start=1):
        if not w:
            raise FormatError("empty word", no)
    results = classify_batch(words, ontology, workers=args.workers)
    out = io.StringIO()
    for w, r in zip(words, results):
        if isinstance(r, Computed):
            out.write(f"{w}\t{ontology.scheme.categories[r.orientation.index]}\t{_fmt_vector(r.vector)}\n")
        else:
            out.write(f"{w}\tUNCOMPUTABLE:{r.reason.value}\t-\n")
    write_atomic(args.out, out.getvalue().encode("utf-8"))


def cmd_eval(args) -> None:
    ontology = parse_ontology(_read(args.ontology, "ontology"))
    gold = parse_gold_file(_read(args.gold, "gold file"), ontology.scheme)
    results = classify_batch([g.chars for g in gold], ontology, workers=args.workers)
    report = evaluate(zip(gold, results), ontology.scheme)
    doc = json.dumps(report.to_dict(), ensure_ascii=False, indent=2, sort_keys=True) + "\n"
    write_atomic(args.out, doc.encode("utf-8"))
    print(f"precision={report.precision:.4f} recall={report.recall:.4f} "
          f"f={report.f:.4f} macro_f={report.macro_f:.4f}", file=sys.stderr)


def cmd_sweep(args) -> None:
    grid = parse_grid(args.grid)
    data = _read(args.train, "training file")
    lexicon = parse_training_file(data, _scheme(args.scheme))
    gold = parse_gold_file(_read(args.gold, "gold file"), lexicon.scheme)
    rows = sweep(lexicon, gold, _negations(args.negations), grid, workers=args.workers)
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["T", "LVB", "UVB", "precision", "recall", "f", "macro_f"])
    for row in rows:
        r = row.report
        writer.writerow([row.threshold, row.lvb, row.uvb,
                         f"{r.precision:.6f}", f"{r.recall:.6f}", f"{r.f:.6f}", f"{r.macro_f:.6f}"])
    write_atomic(args.out, out.getvalue().encode("utf-8"))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ideosent",
        description="Sentiment orientation of Chinese words from their characters.")
    sub = parser.add_subparsers(dest="command", required=True)

    def training_args(p):
        p.add_argument("--train", required=True, help="training TSV: word<TAB>category")
        p.add_argument("--negations", help="negation characters, one per line")
        p.add_argument("--scheme", help="comma-separated category names "
                                        "(default: the file's #scheme: header)")

    p = sub.add_parser("build", help="build a character ontology")
    training_args(p)
    p.add_argument("--threshold", type=int, default=1, help="minimum support T (default 1)")
    p.add_argument("--lvb", type=float, default=0.1, help="lower variance bound (default 0.1)")
    p.add_argument("--uvb", type=float, default=0.65, help="upper variance bound (default 0.65)")
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("classify", help="classify words against an ontology")
    p.add_argument("--ontology", required=True)
    p.add_argument("--input", required=True, help="one word per line")
    p.add_argument("--out", required=True)
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("eval", help="score an ontology against gold labels")
    p.add_argument("--ontology", required=True)
    p.add_argument("--gold", required=True, help="gold TSV: word<TAB>category")
    p.add_argument("--out", required=True, help="JSON report")
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("sweep", help="evaluate a grid of T/LVB/UVB settings")
    training_args(p)
    p.add_argument("--gold", required=True)
    p.add_argument("--grid", required=True,
                   help="e.g. 'T=1:1:8,LVB=0.3,UVB=0.65' or 'UVB=0.4|0.65|1.0'")
    p.add_argument("--out", required=True, help="CSV output")
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_sweep)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        args.func(args)
    except IdeosentError as exc:
        print(f"ideosent {args.command}: error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"ideosent {args.command}: error: cannot write output: {exc}", file=sys.stderr)
        return 1
    return 0


def run_cli(argv=None) -> int:
    """Like ``main`` but returns argparse's exit status instead of raising SystemExit."""
    try:
        return main(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 1
