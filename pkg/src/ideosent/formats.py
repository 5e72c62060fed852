"""Lexicon, negation, gold and ontology file formats.

Lexicon and gold files are UTF-8 TSV, one ``word<TAB>category`` per line.
Blank lines and lines starting with ``#`` are skipped, except that a
``#scheme: c1,c2,...`` line declares the category scheme. All text is NFC
normalised on ingestion.

Ontology documents are canonical JSON: sorted keys, entries sorted by code
point, every vector written both as floats and as exact ``p/q`` strings.
"""
from __future__ import annotations

import json
import os
import tempfile
import unicodedata
from fractions import Fraction
from pathlib import Path

from .core import IdeosentError, SentimentScheme, SentimentVector, ValidationError, one_hot
from .evaluation import GoldLabeledWord
from .ontology import (
    BuilderParams,
    CharacterEntry,
    CharacterOntology,
    Diagnostic,
    NegationSet,
    Rejection,
    TrainingLexicon,
    TrainingWord,
)

FORMAT_NAME = "ideosent-ontology"
FORMAT_VERSION = 1


class FormatError(IdeosentError, ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


def _text(data: bytes | str) -> str:
    if isinstance(data, bytes):
        try:
            data = data.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise FormatError(f"input is not valid UTF-8 ({exc.reason} at byte {exc.start})") from None
    if data.startswith("\ufeff"):
        data = data[1:]
    return unicodedata.normalize("NFC", data)


def _lines(text: str):
    for no, raw in enumerate(text.splitlines(), start=1):
        yield no, raw.rstrip("\r\n")


def read_scheme_header(data: bytes | str) -> SentimentScheme | None:
    for _, line in _lines(_text(data)):
        stripped = line.strip()
        if stripped.lower().startswith("#scheme:"):
            return SentimentScheme.parse(stripped.split(":", 1)[1])
    return None


def _resolve_scheme(data, scheme):
    declared = read_scheme_header(data)
    if scheme is None and declared is None:
        raise FormatError("no scheme given and no '#scheme:' header present")
    if scheme is not None and declared is not None and declared != scheme:
        raise FormatError(f"file declares scheme {','.join(declared)} "
                          f"but {','.join(scheme)} was requested")
    return scheme or declared


def _labelled_pairs(text: str, scheme: SentimentScheme):
    for no, line in _lines(text):
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        fields = line.split("\t")
        if len(fields) != 2:
            raise FormatError(f"expected 'word<TAB>category', got {len(fields)} field(s)", no)
        word, cat = fields[0].strip(), fields[1].strip()
        if not word:
            raise FormatError("empty word", no)
        if cat not in scheme.categories:
            raise FormatError(f"unknown category {cat!r} (scheme: {','.join(scheme)})", no)
        yield no, word, scheme.index(cat)


def parse_training_file(data: bytes | str, scheme: SentimentScheme | None = None) -> TrainingLexicon:
    text = _text(data)
    scheme = _resolve_scheme(text, scheme)
    first_seen: dict[str, tuple[int, int]] = {}
    words = []
    for no, word, idx in _labelled_pairs(text, scheme):
        if word in first_seen:
            prev_no, prev_idx = first_seen[word]
            if prev_idx != idx:
                raise FormatError(f"{word!r} annotated {scheme.categories[idx]!r} but line "
                                  f"{prev_no} says {scheme.categories[prev_idx]!r}", no)
            continue
        first_seen[word] = (no, idx)
        words.append(TrainingWord(word, one_hot(scheme, idx)))
    if not words:
        raise FormatError("training file contains no words")
    try:
        return TrainingLexicon(scheme, tuple(words))
    except ValidationError as exc:
        raise FormatError(str(exc)) from None


def parse_gold_file(data: bytes | str, scheme: SentimentScheme) -> list[GoldLabeledWord]:
    text = _text(data)
    scheme = _resolve_scheme(text, scheme)
    return [GoldLabeledWord(word, idx) for _, word, idx in _labelled_pairs(text, scheme)]


def parse_negation_file(data: bytes | str) -> NegationSet:
    chars = set()
    for no, line in _lines(_text(data)):
        c = line.strip()
        if not c or (c.startswith("#") and len(c) > 1):
            continue
        if len(c) != 1:
            raise FormatError(f"expected a single character, got {c!r}", no)
        chars.add(c)
    return NegationSet(frozenset(chars))


def parse_word_list(data: bytes | str) -> list[str]:
    return [line.strip() for _, line in _lines(_text(data))]


def serialize_ontology(o: CharacterOntology) -> bytes:
    doc = {
        "format": FORMAT_NAME,
        "version": FORMAT_VERSION,
        "scheme": list(o.scheme),
        "params": {"threshold": o.params.threshold, "lvb": o.params.lvb, "uvb": o.params.uvb},
        "negations": list(o.negations),
        "training_counts": list(o.training_counts),
        "entries": [
            {
                "char": e.char,
                "vector": list(e.vector.as_floats()),
                "exact": [str(p) for p in e.vector],
                "is_key": e.is_key,
                "support": e.support,
            }
            for _, e in sorted(o.entries.items(), key=lambda kv: ord(kv[0]))
        ],
        "diagnostics": [
            {"char": d.char, "reason": d.reason.value, "support": d.support}
            for d in sorted(o.diagnostics, key=lambda d: ord(d.char))
        ],
    }
    return (json.dumps(doc, ensure_ascii=False, indent=2, sort_keys=True) + "\n").encode("utf-8")


def _entry(raw: dict, n: int) -> CharacterEntry:
    c = raw["char"]
    floats = raw["vector"]
    exact = raw.get("exact")
    if len(floats) != n or (exact is not None and len(exact) != n):
        raise ValidationError(f"{c!r}: vector length does not match scheme size {n}")
    if exact is not None:
        comps = tuple(Fraction(p) for p in exact)
        if any(abs(float(p) - x) > 1e-12 for p, x in zip(comps, floats)):
            raise ValidationError(f"{c!r}: 'vector' and 'exact' disagree")
    else:
        comps = tuple(floats)
    if not isinstance(raw["is_key"], bool) or isinstance(raw["support"], bool) \
            or not isinstance(raw["support"], int):
        raise ValidationError(f"{c!r}: malformed is_key/support")
    return CharacterEntry(c, SentimentVector(comps), raw["is_key"], raw["support"])


def parse_ontology(data: bytes | str) -> CharacterOntology:
    try:
        doc = json.loads(_text(data))
    except json.JSONDecodeError as exc:
        raise FormatError(f"ontology is not valid JSON: {exc}") from None
    if not isinstance(doc, dict) or doc.get("format") != FORMAT_NAME:
        raise FormatError("not an ontology document")
    if doc.get("version") != FORMAT_VERSION:
        raise FormatError(f"unsupported ontology version {doc.get('version')!r} "
                          f"(expected {FORMAT_VERSION})")
    try:
        scheme = SentimentScheme(tuple(doc["scheme"]))
        p = doc["params"]
        params = BuilderParams(p["threshold"], p["lvb"], p["uvb"])
        negations = NegationSet(frozenset(doc["negations"]))
        entries = {}
        for raw in doc["entries"]:
            e = _entry(raw, len(scheme))
            if e.char in entries:
                raise ValidationError(f"{e.char!r}: duplicate entry")
            entries[e.char] = e
        diagnostics = tuple(Diagnostic(d["char"], Rejection(d["reason"]), d["support"])
                            for d in doc.get("diagnostics", []))
        return CharacterOntology(scheme, params, negations, entries, diagnostics,
                                 tuple(doc.get("training_counts", ())))
    except (KeyError, TypeError) as exc:
        raise FormatError(f"malformed ontology document: missing or bad field {exc}") from None
    except ValueError as exc:
        if isinstance(exc, IdeosentError):
            raise
        raise FormatError(f"malformed ontology document: {exc}") from None


def write_atomic(path: str | os.PathLike, data: bytes) -> None:
    """Write via a temporary file in the target directory, then rename."""
    path = Path(path)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=f".{path.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "wb") as fh:
            fh.write(data)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise
