"""Seeded synthetic corpora with planted character-category affinities.

Used to check that parameter sweeps move in the expected directions when the
real annotated word lists are not at hand.

Characters come in three kinds. Neutral characters carry no sentiment. Core
characters belong to one category. Polysemous characters have a dominant
category and a minor one, and words of the minor category also use them;
these are the characters a low upper variance bound wrongly promotes to key.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from pathlib import Path

from .core import SentimentScheme
from .evaluation import GoldLabeledWord
from .ontology import NegationSet, TrainingLexicon

DEFAULT_SCHEME = SentimentScheme(("happy", "angry", "sad", "fear"))
NEGATIONS = ("不", "没")


@dataclass
class CorpusConfig:
    seed: int = 0
    alphabet_size: int = 60
    neutral_fraction: float = 0.2
    polysemous_fraction: float = 0.3
    n_train: int = 500
    n_gold: int = 200
    label_noise: float = 0.1
    # per extra position: draw a core char of the word's category
    core_rate: float = 0.3
    # per extra position: a polysemous char whose minor meaning is the word's category
    minor_rate: float = 0.12
    # per extra position: a polysemous char whose dominant meaning is the word's category
    major_rate: float = 0.25
    # remaining mass goes to neutral characters
    negation_rate: float = 0.05
    zipf_exponent: float = 1.3
    min_len: int = 2
    max_len: int = 3


@dataclass
class SyntheticCorpus:
    lexicon: TrainingLexicon
    gold: list[GoldLabeledWord]
    negations: NegationSet
    # char -> (dominant category, minor category); None entries for neutral/core
    affinity: dict


def generate(cfg: CorpusConfig = CorpusConfig(),
             scheme: SentimentScheme = DEFAULT_SCHEME) -> SyntheticCorpus:
    rng = random.Random(cfg.seed)
    n = len(scheme)
    chars = [chr(0x4E00 + 37 * i) for i in range(cfg.alphabet_size)]
    rng.shuffle(chars)
    weights = {c: 1.0 / (rank + 1) ** cfg.zipf_exponent for rank, c in enumerate(chars)}
    # frequency rank is independent of kind
    kinds = list(chars)
    rng.shuffle(kinds)
    n_neutral = round(cfg.alphabet_size * cfg.neutral_fraction)
    n_poly = round(cfg.alphabet_size * cfg.polysemous_fraction)
    neutral = kinds[:n_neutral]
    poly = kinds[n_neutral:n_neutral + n_poly]
    core = kinds[n_neutral + n_poly:]

    affinity = {c: (None, None) for c in neutral}
    core_by = {k: [] for k in range(n)}
    for i, c in enumerate(core):
        core_by[i % n].append(c)
        affinity[c] = (i % n, None)
    major_by = {k: [] for k in range(n)}
    minor_by = {k: [] for k in range(n)}
    for i, c in enumerate(poly):
        major, minor = i % n, (i % n + 1 + (i // n) % (n - 1)) % n
        major_by[major].append(c)
        minor_by[minor].append(c)
        affinity[c] = (major, minor)

    def draw(pool):
        return rng.choices(pool, weights=[weights[c] for c in pool])[0]

    def extra(k):
        u = rng.random()
        for pool, rate in ((core_by[k], cfg.core_rate), (minor_by[k], cfg.minor_rate),
                           (major_by[k], cfg.major_rate)):
            if u < rate and pool:
                return draw(pool)
            u -= rate
        return draw(neutral)

    def word_for(k):
        head = draw(core_by[k] + major_by[k])
        if rng.random() < cfg.negation_rate:
            # orientation rides on the head; the negated character is arbitrary
            return head + rng.choice(NEGATIONS) + draw(chars)
        parts = [head] + [extra(k) for _ in range(rng.randint(cfg.min_len, cfg.max_len) - 1)]
        rng.shuffle(parts)
        return "".join(parts)

    seen: set[str] = set()

    def fresh(count):
        out = []
        while len(out) < count:
            k = len(out) % n if len(out) < n else rng.randrange(n)
            w = word_for(k)
            if w not in seen:
                seen.add(w)
                out.append((w, k))
        return out

    train = []
    for i, (w, k) in enumerate(fresh(cfg.n_train)):
        # the first n words stay clean so every category is represented
        if i >= n and rng.random() < cfg.label_noise:
            k = rng.choice([j for j in range(n) if j != k])
        train.append((w, k))
    gold = [GoldLabeledWord(w, k) for w, k in fresh(cfg.n_gold)]
    return SyntheticCorpus(TrainingLexicon.from_pairs(scheme, train), gold,
                           NegationSet(frozenset(NEGATIONS)), affinity)


def write_files(corpus: SyntheticCorpus, directory) -> dict:
    """Write train.tsv, gold.tsv, words.txt and negations.txt; return their paths."""
    d = Path(directory)
    d.mkdir(parents=True, exist_ok=True)
    scheme = corpus.lexicon.scheme
    header = f"#scheme: {','.join(scheme)}\n"
    paths = {name: d / name for name in ("train.tsv", "gold.tsv", "words.txt", "negations.txt")}
    paths["train.tsv"].write_text(header + "".join(
        f"{w.chars}\t{scheme.categories[w.category]}\n" for w in corpus.lexicon.words), encoding="utf-8")
    paths["gold.tsv"].write_text(header + "".join(
        f"{g.chars}\t{scheme.categories[g.gold]}\n" for g in corpus.gold), encoding="utf-8")
    paths["words.txt"].write_text("".join(f"{g.chars}\n" for g in corpus.gold), encoding="utf-8")
    paths["negations.txt"].write_text("".join(f"{c}\n" for c in corpus.negations), encoding="utf-8")
    return paths
