"""Character evaluation: from an annotated training word list to a character ontology."""
from __future__ import annotations

import enum
from collections import Counter, defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping

from .core import (
    InvalidArgument,
    SentimentScheme,
    SentimentVector,
    ValidationError,
    as_fraction,
    one_hot,
    orientation,
    scaled_variance,
    vector_sum,
)


@dataclass(frozen=True)
class TrainingWord:
    chars: str
    vector: SentimentVector

    def __post_init__(self):
        if not self.chars:
            raise ValidationError("training word has no characters")
        if not self.vector.is_one_hot():
            raise ValidationError(f"training word {self.chars!r} is not annotated one-hot")

    @property
    def category(self) -> int:
        return orientation(self.vector).index


@dataclass(frozen=True)
class TrainingLexicon:
    scheme: SentimentScheme
    words: tuple[TrainingWord, ...]

    def __post_init__(self):
        object.__setattr__(self, "words", tuple(self.words))
        problems = self.problems()
        if problems:
            raise ValidationError("invalid training lexicon", problems)

    def problems(self) -> list[str]:
        n = len(self.scheme)
        out = []
        seen = {}
        for i, w in enumerate(self.words):
            if len(w.vector) != n:
                out.append(f"word {i} {w.chars!r}: vector length {len(w.vector)} != {n}")
            if w.chars in seen:
                out.append(f"word {i} {w.chars!r}: duplicate of word {seen[w.chars]}")
            seen.setdefault(w.chars, i)
        if not out:
            counts = self.category_counts()
            for name, k in zip(self.scheme, counts):
                if k == 0:
                    out.append(f"category {name!r} has no training words")
        return out

    def category_counts(self) -> tuple[int, ...]:
        counts = Counter(w.category for w in self.words)
        return tuple(counts.get(i, 0) for i in range(len(self.scheme)))

    @classmethod
    def from_pairs(cls, scheme: SentimentScheme, pairs: Iterable[tuple[str, str | int]]):
        words = []
        for chars, cat in pairs:
            idx = cat if isinstance(cat, int) else scheme.index(cat)
            words.append(TrainingWord(chars, one_hot(scheme, idx)))
        return cls(scheme, tuple(words))


@dataclass(frozen=True)
class NegationSet:
    """Characters treated as negation operators. Empty disables negation handling."""

    chars: frozenset[str] = frozenset()

    def __post_init__(self):
        chars = frozenset(self.chars)
        object.__setattr__(self, "chars", chars)
        bad = sorted(c for c in chars if len(c) != 1)
        if bad:
            raise ValidationError("negations must be single characters", [repr(c) for c in bad])

    def __contains__(self, c) -> bool:
        return c in self.chars

    def __iter__(self):
        return iter(sorted(self.chars))

    def __len__(self) -> int:
        return len(self.chars)


@dataclass(frozen=True)
class BuilderParams:
    threshold: int = 1
    lvb: float = 0.1
    uvb: float = 0.65

    def __post_init__(self):
        problems = []
        if isinstance(self.threshold, bool) or not isinstance(self.threshold, int):
            problems.append(f"threshold must be an integer, got {self.threshold!r}")
        elif self.threshold < 1:
            problems.append(f"threshold {self.threshold} < 1")
        try:
            lo, hi = as_fraction(self.lvb), as_fraction(self.uvb)
        except (InvalidArgument, ValueError) as exc:
            problems.append(str(exc))
        else:
            object.__setattr__(self, "lvb", float(lo))
            object.__setattr__(self, "uvb", float(hi))
            if lo < 0:
                problems.append(f"lvb {self.lvb} < 0")
            if lo > hi:
                problems.append(f"lvb {self.lvb} > uvb {self.uvb}")
        if problems:
            raise ValidationError("invalid builder parameters", problems)


class Rejection(str, enum.Enum):
    UNDETERMINED = "Undetermined"
    LOW_SUPPORT = "RejectedLowSupport"
    NONSENTIMENT = "RejectedNonsentiment"


@dataclass(frozen=True)
class CharacterEntry:
    char: str
    vector: SentimentVector
    is_key: bool
    support: int


@dataclass(frozen=True)
class Diagnostic:
    char: str
    reason: Rejection
    support: int


@dataclass(frozen=True)
class CharacterOntology:
    scheme: SentimentScheme
    params: BuilderParams
    negations: NegationSet
    entries: Mapping[str, CharacterEntry]
    diagnostics: tuple[Diagnostic, ...] = ()
    training_counts: tuple[int, ...] = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "entries", dict(sorted(self.entries.items())))
        object.__setattr__(self, "diagnostics", tuple(self.diagnostics))
        object.__setattr__(self, "training_counts", tuple(self.training_counts))
        problems = self.problems()
        if problems:
            raise ValidationError("invalid character ontology", problems)

    def problems(self) -> list[str]:
        n = len(self.scheme)
        lo, hi = as_fraction(self.params.lvb), as_fraction(self.params.uvb)
        out = []
        for c, e in self.entries.items():
            if e.char != c:
                out.append(f"{c!r}: entry is keyed under the wrong character {e.char!r}")
            if c in self.negations:
                out.append(f"{c!r}: negation character admitted as an entry")
            if len(e.vector) != n:
                out.append(f"{c!r}: vector length {len(e.vector)} != {n}")
                continue
            if e.support < self.params.threshold:
                out.append(f"{c!r}: support {e.support} below threshold {self.params.threshold}")
            if e.is_key and not e.vector.is_one_hot():
                out.append(f"{c!r}: key entry vector {e.vector.as_floats()} is not one-hot")
            if not e.is_key and not lo <= scaled_variance(e.vector) <= hi:
                out.append(f"{c!r}: non-key scaled variance outside [lvb, uvb]")
        if self.training_counts and len(self.training_counts) != n:
            out.append("training_counts length does not match scheme")
        return out

    def __contains__(self, c) -> bool:
        return c in self.entries

    def __len__(self) -> int:
        return len(self.entries)

    @property
    def key_chars(self) -> list[str]:
        return [c for c, e in self.entries.items() if e.is_key]


def collect_support(c: str, lexicon: TrainingLexicon) -> list[TrainingWord]:
    """Training words containing ``c`` at least once, in lexicon order."""
    return [w for w in lexicon.words if c in w.chars]


def _negated(c: str, chars: str, negations: NegationSet) -> bool:
    return any(ch == c and i > 0 and chars[i - 1] in negations for i, ch in enumerate(chars))


def char_vector(c: str, support: list[TrainingWord], negations: NegationSet) -> SentimentVector | None:
    """Mean annotation of the support words, or None when undetermined.

    A word where some occurrence of ``c`` directly follows a negation does not
    contribute its own annotation; it votes for the orientation of the
    plain-word sum instead. With no plain words there is nothing to vote for,
    and the result is None.
    """
    if not support:
        raise InvalidArgument(f"empty support for {c!r}")
    n = len(support[0].vector)
    plain = [w.vector for w in support if not _negated(c, w.chars, negations)]
    n_negated = len(support) - len(plain)
    totals = list(vector_sum(plain, n))
    if n_negated:
        if not plain:
            return None
        totals[orientation(totals).index] += n_negated
    return SentimentVector(tuple(t / len(support) for t in totals))


def admit(c: str, vector: SentimentVector, support_count: int,
          params: BuilderParams) -> CharacterEntry | Rejection:
    if support_count < params.threshold:
        return Rejection.LOW_SUPPORT
    v = scaled_variance(vector)
    if v < as_fraction(params.lvb):
        return Rejection.NONSENTIMENT
    if v > as_fraction(params.uvb):
        top = orientation(vector).index
        key = SentimentVector(tuple(Fraction(int(i == top)) for i in range(len(vector))))
        return CharacterEntry(c, key, True, support_count)
    return CharacterEntry(c, vector, False, support_count)


def build_ontology(lexicon: TrainingLexicon, params: BuilderParams,
                   negations: NegationSet = NegationSet()) -> CharacterOntology:
    problems = lexicon.problems()
    if problems:
        raise ValidationError("invalid training lexicon", problems)

    index = defaultdict(list)
    for w in lexicon.words:
        for c in dict.fromkeys(w.chars):
            if c not in negations:
                index[c].append(w)

    entries, diagnostics = {}, []
    for c in sorted(index):
        support = index[c]
        vec = char_vector(c, support, negations)
        if vec is None:
            diagnostics.append(Diagnostic(c, Rejection.UNDETERMINED, len(support)))
            continue
        result = admit(c, vec, len(support), params)
        if isinstance(result, Rejection):
            diagnostics.append(Diagnostic(c, result, len(support)))
        else:
            entries[c] = result
    return CharacterOntology(lexicon.scheme, params, negations, entries,
                             tuple(diagnostics), lexicon.category_counts())
