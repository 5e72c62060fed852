"""Sentiment schemes and probability-simplex vectors.

Components are stored as exact ``Fraction`` values so that argmax ties are
decided on the stored values rather than on accumulated float rounding.
Floats passed in are read through their shortest repr (``0.6`` becomes
``3/5``).
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Sequence, Union

Number = Union[int, float, str, Fraction]

SIMPLEX_TOL = 1e-9


class IdeosentError(Exception):
    """Base class for all library errors."""


class InvalidArgument(IdeosentError, ValueError):
    pass


class ValidationError(IdeosentError, ValueError):
    """A value or document violates a type invariant."""

    def __init__(self, message: str, problems: Sequence[str] = ()):
        self.problems = list(problems)
        if self.problems:
            message = message + ": " + "; ".join(self.problems)
        super().__init__(message)


def as_fraction(x: Number) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        return Fraction(int(x))
    if isinstance(x, float):
        if x != x or x in (float("inf"), float("-inf")):
            raise InvalidArgument(f"non-finite component {x!r}")
        return Fraction(repr(x))
    if isinstance(x, (int, Rational, str)):
        return Fraction(x)
    raise InvalidArgument(f"cannot interpret {x!r} as a number")


@dataclass(frozen=True)
class SentimentScheme:
    categories: tuple[str, ...]

    def __post_init__(self):
        cats = tuple(self.categories)
        object.__setattr__(self, "categories", cats)
        if len(cats) < 2:
            raise ValidationError("a scheme needs at least two categories")
        if any(not isinstance(c, str) or not c for c in cats):
            raise ValidationError("category names must be non-empty strings")
        if len(set(cats)) != len(cats):
            raise ValidationError(f"duplicate category names in {cats!r}")

    @classmethod
    def parse(cls, text: str) -> "SentimentScheme":
        return cls(tuple(c.strip() for c in text.split(",")))

    def __len__(self) -> int:
        return len(self.categories)

    def __iter__(self):
        return iter(self.categories)

    def index(self, name: str) -> int:
        try:
            return self.categories.index(name)
        except ValueError:
            raise InvalidArgument(f"unknown category {name!r}") from None


@dataclass(frozen=True)
class SentimentVector:
    """A point on the probability simplex."""

    components: tuple[Fraction, ...]

    def __post_init__(self):
        comps = tuple(as_fraction(p) for p in self.components)
        object.__setattr__(self, "components", comps)
        if not comps:
            raise ValidationError("empty sentiment vector")
        if any(p < 0 or p > 1 for p in comps):
            raise ValidationError(f"component outside [0, 1] in {self.as_floats()}")
        if abs(float(sum(comps)) - 1.0) > SIMPLEX_TOL:
            raise ValidationError(f"components of {self.as_floats()} do not sum to 1")

    def __len__(self) -> int:
        return len(self.components)

    def __iter__(self):
        return iter(self.components)

    def __getitem__(self, i):
        return self.components[i]

    def as_floats(self) -> tuple[float, ...]:
        return tuple(float(p) for p in self.components)

    def is_one_hot(self) -> bool:
        return sorted(self.components) == [0] * (len(self) - 1) + [1]


@dataclass(frozen=True)
class Orientation:
    index: int
    tied: bool = False


def one_hot(scheme: SentimentScheme, index: int) -> SentimentVector:
    n = len(scheme)
    if not isinstance(index, int) or not 0 <= index < n:
        raise InvalidArgument(f"category index {index!r} out of range for n={n}")
    return SentimentVector(tuple(Fraction(int(i == index)) for i in range(n)))


def scaled_variance(v: SentimentVector | Sequence[Number]) -> Fraction:
    """Population variance of the components times n.

    Equals the sum of squared deviations from the mean; ``(1,0,0,0)`` gives
    0.75 and the uniform vector gives 0.
    """
    comps = [as_fraction(p) for p in v]
    mean = sum(comps) / len(comps)
    return sum((p - mean) ** 2 for p in comps)


def orientation(v: SentimentVector | Sequence[Number]) -> Orientation:
    """Smallest index attaining the maximum, flagged when the maximum is shared.

    Accepts raw (unnormalised) sums as well as simplex vectors.
    """
    comps = [as_fraction(p) for p in v]
    if not comps:
        raise InvalidArgument("orientation of an empty vector")
    top = max(comps)
    hits = [i for i, p in enumerate(comps) if p == top]
    return Orientation(hits[0], len(hits) > 1)


def vector_sum(vs: Iterable[SentimentVector | Sequence[Number]], n: int) -> tuple[Fraction, ...]:
    totals = [Fraction(0)] * n
    for v in vs:
        if len(v) != n:
            raise InvalidArgument(f"vector length {len(v)} != {n}")
        for i, p in enumerate(v):
            totals[i] += as_fraction(p)
    return tuple(totals)


def mean_of(vs: Sequence[SentimentVector]) -> SentimentVector:
    vs = list(vs)
    if not vs:
        raise InvalidArgument("mean of an empty sequence")
    n = len(vs[0])
    return SentimentVector(tuple(t / len(vs) for t in vector_sum(vs, n)))
