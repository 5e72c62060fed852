import random
from fractions import Fraction

import hypothesis.strategies as st
import pytest
from hypothesis import given

from ideosent import (
    BuilderParams,
    CharacterEntry,
    NegationSet,
    Rejection,
    SentimentScheme,
    SentimentVector,
    TrainingLexicon,
    TrainingWord,
    ValidationError,
    admit,
    build_ontology,
    char_vector,
    collect_support,
    one_hot,
    scaled_variance,
)

from conftest import SCHEME4, make_ontology

import oracle

BEST = BuilderParams(1, 0.1, 0.65)
NONE = NegationSet()
N = NegationSet(frozenset("N"))


def lex(*pairs, scheme=SCHEME4):
    # fill missing categories with filler words so the lexicon is valid
    pairs = list(pairs)
    have = {scheme.index(c) if isinstance(c, str) else c for _, c in pairs}
    for i in range(len(scheme)):
        if i not in have:
            pairs.append((f"z{i}", i))
    return TrainingLexicon.from_pairs(scheme, pairs)


def test_collect_support():
    v = lex(("AB", "happy"), ("AC", "sad"), ("BD", "fear"))
    assert [w.chars for w in collect_support("A", v)] == ["AB", "AC"]
    assert collect_support("E", v) == []
    assert [w.chars for w in collect_support("B", v)] == ["AB", "BD"]


def test_support_counts_word_once():
    v = lex(("AA", "happy"), ("AB", "sad"))
    assert len(collect_support("A", v)) == 2


def word(chars, idx):
    return TrainingWord(chars, one_hot(SCHEME4, idx))


def test_char_vector_plain_mean():
    got = char_vector("A", [word("AB", 0), word("AC", 2)], NONE)
    assert got.as_floats() == (0.5, 0, 0.5, 0)


def test_char_vector_negated_word_votes_for_base():
    got = char_vector("A", [word("XA", 0), word("NA", 2)], N)
    assert got.as_floats() == (1, 0, 0, 0)


def test_char_vector_all_negated_is_undetermined():
    assert char_vector("A", [word("NA", 2)], N) is None


def test_char_vector_negation_must_be_adjacent():
    # N is not directly before A, so the word is plain
    got = char_vector("A", [word("XA", 0), word("NXA", 2)], N)
    assert got.as_floats() == (0.5, 0, 0.5, 0)


def test_char_vector_any_negated_occurrence_counts():
    got = char_vector("A", [word("XA", 1), word("ANA", 2)], N)
    assert got.as_floats() == (0, 1, 0, 0)


def test_char_vector_tie_breaks_to_lowest():
    got = char_vector("A", [word("A1", 2), word("A2", 1), word("NA", 3)], N)
    assert got.as_floats() == (0, 2 / 3, 1 / 3, 0)


def test_char_vector_empty_support():
    with pytest.raises(ValueError):
        char_vector("A", [], NONE)


def test_char_vector_does_not_touch_annotations():
    support = [word("XA", 0), word("NA", 2)]
    char_vector("A", support, N)
    assert support[1].vector == one_hot(SCHEME4, 2)


def test_admit_low_support():
    assert admit("A", SentimentVector((1, 0, 0, 0)), 1, BuilderParams(2, 0.1, 0.65)) \
        is Rejection.LOW_SUPPORT


def test_admit_nonsentiment():
    assert admit("A", SentimentVector((0.25,) * 4), 3, BEST) is Rejection.NONSENTIMENT


def test_admit_key_promotion():
    # best reported setting; 0.75 > 0.65
    e = admit("A", SentimentVector((1, 0, 0, 0)), 3, BEST)
    assert e == CharacterEntry("A", SentimentVector((1, 0, 0, 0)), True, 3)


def test_admit_key_promotion_rounds_to_one_hot():
    e = admit("A", SentimentVector((0.9, 0.1, 0, 0)), 3, BuilderParams(1, 0.1, 0.5))
    assert e.is_key and e.vector.as_floats() == (1, 0, 0, 0)


def test_admit_plain():
    e = admit("A", SentimentVector((0.5, 0, 0.5, 0)), 3, BEST)
    assert not e.is_key and e.vector.as_floats() == (0.5, 0, 0.5, 0)


def test_admit_boundaries_are_strict():
    v = SentimentVector((0.5, 0.5, 0, 0))  # scaled variance exactly 0.25
    assert admit("A", v, 1, BuilderParams(1, 0.25, 0.25)).is_key is False
    assert admit("A", v, 1, BuilderParams(1, 0.25, 0.3)).is_key is False
    assert admit("A", v, 1, BuilderParams(1, 0.2, 0.2499)).is_key is True


def test_params_validation():
    for bad in [(0, 0.1, 0.2), (1, 0.3, 0.2), (1, -0.1, 0.2), (1.5, 0.1, 0.2)]:
        with pytest.raises(ValidationError):
            BuilderParams(*bad)


def test_build_example():
    v = TrainingLexicon.from_pairs(SentimentScheme(("happy", "angry", "sad", "fear")),
                                   [("AB", "happy"), ("AC", "sad"), ("D", "angry"), ("E", "fear")])
    o = build_ontology(v, BuilderParams(1, 0, 10))
    got = {c: (e.vector.as_floats(), e.is_key) for c, e in o.entries.items()}
    assert got["A"] == ((0.5, 0, 0.5, 0), False)
    assert got["B"] == ((1, 0, 0, 0), False)
    assert got["C"] == ((0, 0, 1, 0), False)


def test_build_threshold_filters():
    v = TrainingLexicon.from_pairs(SCHEME4, [("AB", 0), ("AC", 2), ("D", 1), ("E", 3)])
    o = build_ontology(v, BuilderParams(2, 0, 10))
    assert list(o.entries) == ["A"]
    reasons = {d.char: d.reason for d in o.diagnostics}
    assert reasons["B"] is Rejection.LOW_SUPPORT and reasons["C"] is Rejection.LOW_SUPPORT


def test_build_excludes_negations():
    v = lex(("NB", "happy"))
    o = build_ontology(v, BuilderParams(1, 0, 10), N)
    assert "N" not in o.entries
    assert "B" not in o.entries  # only occurrence is negated
    assert {d.char: d.reason for d in o.diagnostics}["B"] is Rejection.UNDETERMINED


def test_lexicon_requires_every_category():
    with pytest.raises(ValidationError, match="no training words"):
        TrainingLexicon.from_pairs(SCHEME4, [("AB", 0)])


def test_lexicon_rejects_duplicates_and_multi_labels():
    with pytest.raises(ValidationError, match="duplicate"):
        TrainingLexicon.from_pairs(SentimentScheme(("a", "b")), [("X", 0), ("X", 1)])
    with pytest.raises(ValidationError):
        TrainingWord("X", SentimentVector((0.5, 0.5)))


def test_ontology_rejects_negation_entry():
    with pytest.raises(ValidationError, match="negation"):
        make_ontology(SCHEME4, {"不": (1, 0, 0, 0)})


def test_build_records_category_counts():
    v = lex(("AB", "happy"), ("AC", "happy"))
    assert build_ontology(v, BEST).training_counts == (2, 1, 1, 1)


# --- randomized checks ---------------------------------------------------

@st.composite
def lexicons(draw, with_negations=True):
    n = draw(st.integers(2, 5))
    scheme = SentimentScheme(tuple(f"c{i}" for i in range(n)))
    alphabet = "ABCDEFGHIJ" + ("N" if with_negations else "")
    words = draw(st.lists(st.text(alphabet, min_size=1, max_size=5), min_size=n, max_size=25,
                          unique=True))
    labels = list(range(n)) + [draw(st.integers(0, n - 1)) for _ in words[n:]]
    return TrainingLexicon.from_pairs(scheme, list(zip(words, labels)))


params = st.builds(lambda t, lo, gap: BuilderParams(t, lo, lo + gap),
                   st.integers(1, 4), st.sampled_from([0, 0.05, 0.1, 0.3]),
                   st.sampled_from([0, 0.2, 0.35, 0.55, 5]))


@given(lexicons(), params)
def test_built_ontology_invariants(v, p):
    o = build_ontology(v, p, N)
    for c, e in o.entries.items():
        assert c != "N"
        assert abs(float(sum(e.vector)) - 1) <= 1e-9
        assert e.support >= p.threshold
        if e.is_key:
            assert e.vector.is_one_hot()
        else:
            assert p.lvb <= float(scaled_variance(e.vector)) <= p.uvb


@given(lexicons(with_negations=False), params)
def test_without_negations_char_vector_is_plain_mean(v, p):
    n = len(v.scheme)
    for c in {ch for w in v.words for ch in w.chars}:
        support = [w for w in v.words if c in w.chars]
        counts = [sum(1 for w in support if w.vector[i] == 1) for i in range(n)]
        expected = tuple(Fraction(k, len(support)) for k in counts)
        assert char_vector(c, support, N).components == expected


@given(lexicons(), st.randoms(use_true_random=False))
def test_negated_word_order_does_not_matter(v, rnd):
    for c in sorted({ch for w in v.words for ch in w.chars} - {"N"}):
        support = collect_support(c, v)
        shuffled = list(support)
        rnd.shuffle(shuffled)
        assert char_vector(c, support, N) == char_vector(c, shuffled, N)


@given(lexicons(), params)
def test_monotone_in_parameters(v, p):
    base = build_ontology(v, p, N)
    higher_t = build_ontology(v, BuilderParams(p.threshold + 1, p.lvb, p.uvb), N)
    higher_lvb = build_ontology(v, BuilderParams(p.threshold, min(p.lvb + 0.1, p.uvb), p.uvb), N)
    higher_uvb = build_ontology(v, BuilderParams(p.threshold, p.lvb, p.uvb + 0.1), N)
    assert len(higher_t) <= len(base)
    assert len(higher_lvb) <= len(base)
    assert len(higher_uvb.key_chars) <= len(base.key_chars)


@given(lexicons(), params)
def test_build_matches_oracle(v, p):
    words = [(w.chars, w.category) for w in v.words]
    entries, decisions = oracle.build(words, len(v.scheme), {"N"}, p.threshold, p.lvb, p.uvb)
    o = build_ontology(v, p, N)
    assert {c: (e.vector.components, e.is_key, e.support) for c, e in o.entries.items()} == entries
    got = {d.char: d.reason for d in o.diagnostics}
    expect = {"undetermined": Rejection.UNDETERMINED, "low_support": Rejection.LOW_SUPPORT,
              "nonsentiment": Rejection.NONSENTIMENT}
    assert got == {c: expect[d] for c, d in decisions.items() if d in expect}


def test_build_independent_of_word_order():
    rng = random.Random(3)
    v = lex(("AB", 0), ("BC", 1), ("NA", 2), ("CA", 3), ("ANB", 0), ("DB", 2))
    words = list(v.words)
    rng.shuffle(words)
    shuffled = TrainingLexicon(v.scheme, tuple(words))
    assert build_ontology(v, BEST, N).entries == build_ontology(shuffled, BEST, N).entries
