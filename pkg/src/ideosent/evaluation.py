"""Precision, recall and F-measure against gold labels; parameter sweeps."""
from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from functools import partial
from typing import Iterable, Sequence

from .classifier import ClassificationResult, Computed, classify_batch
from .core import IdeosentError, InvalidArgument, SentimentScheme
from .ontology import BuilderParams, NegationSet, TrainingLexicon, build_ontology


@dataclass(frozen=True)
class GoldLabeledWord:
    chars: str
    gold: int


@dataclass(frozen=True)
class CategoryScore:
    name: str
    gold: int
    predicted: int
    correct: int
    precision: float
    recall: float
    f: float


@dataclass(frozen=True)
class EvalReport:
    total: int
    computed: int
    correct: int
    precision: float
    recall: float
    f: float
    macro_f: float
    tie_broken: int
    per_category: tuple[CategoryScore, ...]
    uncomputable: dict

    def to_dict(self) -> dict:
        return asdict(self)


@dataclass(frozen=True)
class SweepRow:
    params: BuilderParams
    report: EvalReport

    @property
    def threshold(self):
        return self.params.threshold

    @property
    def lvb(self):
        return self.params.lvb

    @property
    def uvb(self):
        return self.params.uvb


class SweepError(IdeosentError):
    def __init__(self, message: str, params: BuilderParams | None = None):
        super().__init__(message)
        self.params = params


def f_measure(p: float, r: float) -> float:
    if p + r == 0:
        return 0.0
    return 2 * p * r / (p + r)


def _ratio(a: int, b: int) -> float:
    return a / b if b else 0.0


def evaluate(results: Iterable[tuple[GoldLabeledWord, ClassificationResult]],
             scheme: SentimentScheme | None = None) -> EvalReport:
    """Score classifications against gold labels.

    Uncomputable words count against recall but not precision. When no scheme
    is given, categories are the indices seen in the data.
    """
    results = list(results)
    n = len(scheme) if scheme else 1 + max(
        [g.gold for g, _ in results]
        + [r.orientation.index for _, r in results if isinstance(r, Computed)],
        default=-1)
    names = list(scheme) if scheme else [str(i) for i in range(n)]

    gold_n, pred_n, hit_n = [0] * n, [0] * n, [0] * n
    computed = correct = tied = 0
    reasons: dict[str, int] = {}
    for g, r in results:
        if not 0 <= g.gold < n:
            raise InvalidArgument(f"gold label {g.gold} out of range for {g.chars!r}")
        gold_n[g.gold] += 1
        if isinstance(r, Computed):
            computed += 1
            k = r.orientation.index
            pred_n[k] += 1
            tied += r.orientation.tied
            if k == g.gold:
                correct += 1
                hit_n[k] += 1
        else:
            reasons[r.reason.value] = reasons.get(r.reason.value, 0) + 1

    cats = []
    for i in range(n):
        p, rc = _ratio(hit_n[i], pred_n[i]), _ratio(hit_n[i], gold_n[i])
        cats.append(CategoryScore(names[i], gold_n[i], pred_n[i], hit_n[i], p, rc, f_measure(p, rc)))
    precision, recall = _ratio(correct, computed), _ratio(correct, len(results))
    macro = sum(c.f for c in cats) / n if n else 0.0
    return EvalReport(len(results), computed, correct, precision, recall,
                      f_measure(precision, recall), macro, tied, tuple(cats),
                      dict(sorted(reasons.items())))


def _sweep_point(params, lexicon, gold, negations):
    try:
        ontology = build_ontology(lexicon, params, negations)
        results = classify_batch([g.chars for g in gold], ontology)
        return SweepRow(params, evaluate(zip(gold, results), lexicon.scheme))
    except IdeosentError as exc:
        raise SweepError(f"sweep failed at T={params.threshold} LVB={params.lvb} "
                         f"UVB={params.uvb}: {exc}", params) from exc


def sweep(lexicon: TrainingLexicon, gold: Sequence[GoldLabeledWord], negations: NegationSet,
          grid: Sequence[BuilderParams], workers: int = 1) -> list[SweepRow]:
    grid = list(grid)
    if not grid:
        raise InvalidArgument("empty parameter grid")
    run = partial(_sweep_point, lexicon=lexicon, gold=list(gold), negations=negations)
    if workers <= 1:
        return [run(p) for p in grid]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(run, grid))
