"""Ideogram-based sentiment orientation for Chinese words."""
from .classifier import Computed, Reason, Uncomputable, classify, classify_batch, known_chars
from .core import (
    IdeosentError,
    InvalidArgument,
    Orientation,
    SentimentScheme,
    SentimentVector,
    ValidationError,
    mean_of,
    one_hot,
    orientation,
    scaled_variance,
)
from .evaluation import EvalReport, GoldLabeledWord, SweepRow, evaluate, f_measure, sweep
from .ontology import (
    BuilderParams,
    CharacterEntry,
    CharacterOntology,
    NegationSet,
    Rejection,
    TrainingLexicon,
    TrainingWord,
    admit,
    build_ontology,
    char_vector,
    collect_support,
)

__version__ = "0.1.0"
