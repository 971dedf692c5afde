"""Distributional word vectors and lexicon persistence.

A word's vector is its raw co-occurrence count against a chosen list of
context words inside a symmetric token window.  No weighting or
normalisation is applied.  Lexicons (word -> type + state) round-trip
through a small JSON format, with one-dimensional exports as TSV.
"""

from __future__ import annotations

import json
import re
from collections import defaultdict
from dataclasses import dataclass, field

import numpy as np

from .functor import FunctorAssignment, LexiconEntry
from .linalg import Tensor, VectorSpace
from .pregroup import CompoundType, parse_type_expr

__all__ = [
    "ContextConfig",
    "CooccurrenceCounts",
    "Lexicon",
    "LexiconFormatError",
    "tokenize",
    "count_cooccurrence",
    "build_noun_vector",
    "save_lexicon",
    "load_lexicon",
    "export_vectors_tsv",
]

_EDGE_PUNCT = re.compile(r"^[^A-Za-z0-9']+|[^A-Za-z0-9']+$")


@dataclass(frozen=True)
class ContextConfig:
    """Counting parameters: the ordered context words, the window radius,
    and the token normalisation switches."""

    context_words: tuple[str, ...]
    window: int = 3
    lowercase: bool = True
    strip_punct: bool = True

    def __post_init__(self):
        words = tuple(self.context_words)
        object.__setattr__(self, "context_words", words)
        if not words:
            raise ValueError("context_words must be nonempty")
        if len(set(words)) != len(words):
            dupes = sorted({w for w in words if words.count(w) > 1})
            raise ValueError(f"duplicate context words: {', '.join(dupes)}")
        if self.window < 1:
            raise ValueError(f"window must be >= 1, got {self.window}")

    @property
    def index_of(self) -> dict[str, int]:
        return {w: i for i, w in enumerate(self.context_words)}


def _ascii_lower(token: str) -> str:
    return "".join(
        chr(ord(c) + 32) if "A" <= c <= "Z" else c for c in token)


def tokenize(text: str, cfg: ContextConfig) -> list[str]:
    """Whitespace tokens, optionally stripped of leading/trailing
    non-alphanumeric-non-apostrophe characters and ASCII-lowercased.
    Tokens emptied by stripping are dropped.
    """
    out = []
    for token in text.split():
        if cfg.strip_punct:
            token = _EDGE_PUNCT.sub("", token)
        if cfg.lowercase:
            token = _ascii_lower(token)
        if token:
            out.append(token)
    return out


@dataclass
class CooccurrenceCounts:
    """Counts keyed by (target word, context index).  Counts over separate
    texts merge by addition."""

    counts: dict[tuple[str, int], int] = field(default_factory=dict)

    def get(self, word: str, ctx_index: int) -> int:
        return self.counts.get((word, ctx_index), 0)

    def merge(self, other: "CooccurrenceCounts") -> "CooccurrenceCounts":
        merged = defaultdict(int, self.counts)
        for key, v in other.counts.items():
            merged[key] += v
        return CooccurrenceCounts(dict(merged))


def count_cooccurrence(tokens, cfg: ContextConfig) -> CooccurrenceCounts:
    """For every position p and context-word occurrence q with
    0 < |p - q| <= window, bump (token[p], index of token[q]).

    The window is symmetric and a token never pairs with its own position.
    """
    index_of = cfg.index_of
    counts: dict[tuple[str, int], int] = defaultdict(int)
    n = len(tokens)
    for p, target in enumerate(tokens):
        lo = max(0, p - cfg.window)
        hi = min(n, p + cfg.window + 1)
        for q in range(lo, hi):
            if q == p:
                continue
            idx = index_of.get(tokens[q])
            if idx is not None:
                counts[(target, idx)] += 1
    return CooccurrenceCounts(dict(counts))


def build_noun_vector(word: str, counts: CooccurrenceCounts,
                      cfg: ContextConfig,
                      space: VectorSpace | None = None) -> Tensor:
    """The word's count vector over the context words; all zeros if the
    word was never counted."""
    if space is None:
        space = VectorSpace("n", len(cfg.context_words),
                            basis_labels=cfg.context_words)
    if space.dim != len(cfg.context_words):
        raise ValueError(
            f"space dim {space.dim} != {len(cfg.context_words)} context words")
    data = [counts.get(word, i) for i in range(len(cfg.context_words))]
    return Tensor((space,), data)


class LexiconFormatError(ValueError):
    """A lexicon file violates the schema; ``path`` points at the bad field."""

    def __init__(self, path, message):
        super().__init__(f"{path}: {message}")
        self.path = path


class Lexicon:
    """Words mapped to one or more (grammar type, state) readings, plus the
    registry of spaces backing the basic types.

    >>> lex = Lexicon({"n": VectorSpace("n", 2)})
    >>> entry = lex.add("cat", "n", [3, 1])
    >>> [e.gtype for e in lex.entries_for("cat")]
    [CompoundType('n')]
    """

    def __init__(self, spaces: dict[str, VectorSpace] | None = None):
        self.spaces: dict[str, VectorSpace] = dict(spaces or {})
        self._entries: dict[str, list[LexiconEntry]] = {}

    def register_space(self, name: str, space: VectorSpace):
        self.spaces[name] = space

    def functor_assignment(self) -> FunctorAssignment:
        return FunctorAssignment(self.spaces)

    def add(self, word: str, gtype: CompoundType | str, data) -> LexiconEntry:
        """Append a reading; the state spaces follow the type's simples."""
        if isinstance(gtype, str):
            gtype = parse_type_expr(gtype)
        spaces = []
        for t in gtype:
            if t.base.name not in self.spaces:
                raise LexiconFormatError(
                    f"entries[{word}]", f"basic type {t.base.name!r} has no "
                    f"registered space")
            spaces.append(self.spaces[t.base.name])
        entry = LexiconEntry(word, gtype, Tensor(tuple(spaces), data))
        self._entries.setdefault(word, []).append(entry)
        return entry

    def entries_for(self, word: str) -> list[LexiconEntry]:
        return list(self._entries.get(word, []))

    def words(self) -> list[str]:
        return list(self._entries)

    def all_entries(self) -> list[LexiconEntry]:
        return [e for entries in self._entries.values() for e in entries]

    def __len__(self):
        return sum(len(v) for v in self._entries.values())

    def __contains__(self, word):
        return word in self._entries

    def __eq__(self, other):
        return (isinstance(other, Lexicon) and self.spaces == other.spaces
                and self._entries == other._entries)


def _expect(cond: bool, path: str, message: str):
    if not cond:
        raise LexiconFormatError(path, message)


def _format_number(x: float):
    return int(x) if float(x).is_integer() else float(x)


def save_lexicon(lexicon: Lexicon, path):
    """Write the JSON form; entries keep insertion order, spaces sort by
    label, integral floats are written as ints to keep files diffable."""
    doc = {
        "spaces": {
            name: ({"dim": sp.dim, "basis": list(sp.basis_labels)}
                   if sp.basis_labels is not None else {"dim": sp.dim})
            for name, sp in sorted(lexicon.spaces.items())
        },
        "entries": [
            {
                "word": e.word,
                "type": str(e.gtype),
                "tensor": {
                    "dims": list(e.state.dims),
                    "data": [_format_number(x) for x in e.state.flat],
                },
            }
            for e in lexicon.all_entries()
        ],
    }
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(doc, fh, indent=2)
        fh.write("\n")


def load_lexicon(path) -> Lexicon:
    """Read and validate a lexicon file.  Schema violations raise
    :class:`LexiconFormatError` naming the offending field path."""
    with open(path, "r", encoding="utf-8") as fh:
        try:
            doc = json.load(fh)
        except json.JSONDecodeError as exc:
            raise LexiconFormatError("$", f"not valid JSON: {exc}") from exc
    _expect(isinstance(doc, dict), "$", "top level must be an object")
    _expect(isinstance(doc.get("spaces"), dict), "spaces",
            "must be an object of space records")
    _expect(isinstance(doc.get("entries"), list), "entries",
            "must be a list of entry records")
    spaces: dict[str, VectorSpace] = {}
    for name, rec in doc["spaces"].items():
        where = f"spaces.{name}"
        _expect(isinstance(rec, dict), where, "must be an object")
        dim = rec.get("dim")
        _expect(isinstance(dim, int) and dim >= 1, f"{where}.dim",
                "must be a positive integer")
        basis = rec.get("basis")
        if basis is not None:
            _expect(isinstance(basis, list)
                    and all(isinstance(b, str) for b in basis),
                    f"{where}.basis", "must be a list of strings")
            _expect(len(basis) == dim, f"{where}.basis",
                    f"has {len(basis)} labels for dim {dim}")
            _expect(len(set(basis)) == len(basis), f"{where}.basis",
                    "labels must be unique")
            spaces[name] = VectorSpace(name, dim, tuple(basis))
        else:
            spaces[name] = VectorSpace(name, dim)
    lexicon = Lexicon(spaces)
    for k, rec in enumerate(doc["entries"]):
        where = f"entries[{k}]"
        _expect(isinstance(rec, dict), where, "must be an object")
        word = rec.get("word")
        _expect(isinstance(word, str) and word != "", f"{where}.word",
                "must be a nonempty string")
        type_expr = rec.get("type")
        _expect(isinstance(type_expr, str), f"{where}.type", "must be a string")
        try:
            gtype = parse_type_expr(type_expr)
        except ValueError as exc:
            raise LexiconFormatError(f"{where}.type", str(exc)) from exc
        tensor = rec.get("tensor")
        _expect(isinstance(tensor, dict), f"{where}.tensor", "must be an object")
        dims = tensor.get("dims")
        _expect(isinstance(dims, list)
                and all(isinstance(d, int) and d >= 1 for d in dims),
                f"{where}.tensor.dims", "must be a list of positive integers")
        data = tensor.get("data")
        _expect(isinstance(data, list)
                and all(isinstance(x, (int, float)) and not isinstance(x, bool)
                        for x in data),
                f"{where}.tensor.data", "must be a list of numbers")
        expected_dims = []
        for t in gtype:
            _expect(t.base.name in spaces, f"{where}.type",
                    f"word {word!r} uses basic type {t.base.name!r} with no "
                    f"space record")
            expected_dims.append(spaces[t.base.name].dim)
        _expect(list(dims) == expected_dims, f"{where}.tensor.dims",
                f"word {word!r} declares dims {dims} but type "
                f"{type_expr!r} needs {expected_dims}")
        size = int(np.prod(dims)) if dims else 1
        _expect(len(data) == size, f"{where}.tensor.data",
                f"word {word!r} has {len(data)} entries, dims {dims} "
                f"need {size}")
        lexicon.add(word, gtype, data)
    return lexicon


def export_vectors_tsv(tokens, cfg: ContextConfig, stream):
    """One row per distinct token in lexicographic order:
    ``word<TAB>c_1<TAB>...<TAB>c_n`` after a header row."""
    counts = count_cooccurrence(tokens, cfg)
    stream.write("word\t" + "\t".join(cfg.context_words) + "\n")
    for word in sorted(set(tokens)):
        row = [str(counts.get(word, i)) for i in range(len(cfg.context_words))]
        stream.write(word + "\t" + "\t".join(row) + "\n")
