from fractions import Fraction
from pathlib import Path

import hypothesis
import hypothesis.strategies as st
import pytest

from ideosent import (
    BuilderParams,
    CharacterEntry,
    CharacterOntology,
    NegationSet,
    SentimentScheme,
    SentimentVector,
)

hypothesis.settings.register_profile("default", deadline=None, derandomize=True)
hypothesis.settings.register_profile("fast", max_examples=10, deadline=None)
hypothesis.settings.load_profile("default")

FIXTURES = Path(__file__).parent / "fixtures"
SCHEME4 = SentimentScheme(("happy", "angry", "sad", "fear"))
ALPHABET = [chr(0x5F00 + i) for i in range(20)]
NEG = "不"


@pytest.fixture
def scheme4():
    return SCHEME4


def make_ontology(scheme, vectors, keys=(), negations=(NEG,), lvb=0.0, uvb=10.0):
    """Hand-built ontology under permissive bounds: vectors maps char -> components."""
    entries = {c: CharacterEntry(c, SentimentVector(v), c in keys, 1) for c, v in vectors.items()}
    return CharacterOntology(scheme, BuilderParams(1, lvb, uvb), NegationSet(frozenset(negations)), entries)


@st.composite
def simplex_vectors(draw, n):
    counts = draw(st.lists(st.integers(0, 6), min_size=n, max_size=n).filter(lambda c: sum(c) > 0))
    total = sum(counts)
    return tuple(Fraction(k, total) for k in counts)


@st.composite
def random_ontologies(draw, max_chars=8):
    n = draw(st.integers(2, 5))
    scheme = SentimentScheme(tuple(f"c{i}" for i in range(n)))
    chars = draw(st.lists(st.sampled_from(ALPHABET), min_size=1, max_size=max_chars, unique=True))
    vectors, keys = {}, set()
    for c in chars:
        if draw(st.booleans()) and draw(st.booleans()):
            i = draw(st.integers(0, n - 1))
            vectors[c] = tuple(Fraction(int(j == i)) for j in range(n))
            keys.add(c)
        else:
            vectors[c] = draw(simplex_vectors(n))
    return make_ontology(scheme, vectors, keys)
