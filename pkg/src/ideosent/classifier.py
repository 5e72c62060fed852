"""Word evaluation against a character ontology."""
from __future__ import annotations

import enum
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import partial
from typing import Sequence, Union

from .core import (
    InvalidArgument,
    Orientation,
    SentimentVector,
    mean_of,
    one_hot,
    orientation,
    vector_sum,
)
from .ontology import CharacterEntry, CharacterOntology


class Reason(str, enum.Enum):
    NO_KNOWN_CHARS = "NoKnownChars"
    LEADING_NEGATION = "LeadingNegation"
    CONFLICTING_KEY_CHARS = "ConflictingKeyChars"
    UNDETERMINED_BASE = "UndeterminedBase"


@dataclass(frozen=True)
class Computed:
    vector: SentimentVector
    orientation: Orientation

    def __post_init__(self):
        if orientation(self.vector) != self.orientation:
            raise InvalidArgument("orientation does not match vector")


@dataclass(frozen=True)
class Uncomputable:
    reason: Reason


ClassificationResult = Union[Computed, Uncomputable]


def known_chars(w: str, ontology: CharacterOntology) -> list[tuple[int, CharacterEntry]]:
    """Distinct ontology characters of ``w`` at their first occurrence."""
    out, seen = [], set()
    for pos, c in enumerate(w):
        if c in ontology.entries and c not in seen:
            seen.add(c)
            out.append((pos, ontology.entries[c]))
    return out


def _computed(v: SentimentVector) -> Computed:
    return Computed(v, orientation(v))


def classify(w: str, ontology: CharacterOntology) -> ClassificationResult:
    if not w:
        raise InvalidArgument("cannot classify an empty word")
    neg_pos = next((i for i, c in enumerate(w) if c in ontology.negations), None)
    if neg_pos == 0:
        return Uncomputable(Reason.LEADING_NEGATION)

    known = known_chars(w, ontology)
    if not known:
        return Uncomputable(Reason.NO_KNOWN_CHARS)

    effective = [(e.is_key, e.vector) for _, e in known]
    if neg_pos is not None and any(pos > neg_pos for pos, _ in known):
        prefix = [e.vector for pos, e in known if pos < neg_pos]
        if not prefix:
            return Uncomputable(Reason.UNDETERMINED_BASE)
        flipped = one_hot(ontology.scheme, orientation(vector_sum(prefix, len(ontology.scheme))).index)
        effective = [(e.is_key, e.vector if pos < neg_pos else flipped) for pos, e in known]

    keys = [v for is_key, v in effective if is_key]
    if keys:
        if any(v != keys[0] for v in keys[1:]):
            return Uncomputable(Reason.CONFLICTING_KEY_CHARS)
        return _computed(keys[0])
    return _computed(mean_of([v for _, v in effective]))


def classify_batch(words: Sequence[str], ontology: CharacterOntology,
                   workers: int = 1) -> list[ClassificationResult]:
    """Classify many words; results are in input order whatever ``workers`` is."""
    if workers <= 1 or len(words) < 2:
        return [classify(w, ontology) for w in words]
    chunk = max(1, len(words) // (workers * 4))
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(partial(classify, ontology=ontology), words, chunksize=chunk))
