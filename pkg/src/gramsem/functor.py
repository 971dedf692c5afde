"""The strong monoidal functor from grammar types to tensor spaces.

Basic types map to spaces, duals collapse onto the same space, compound
types map to tensor products, and a reduction diagram maps to the
contraction plan that pairs exactly its cup positions.  Composing the two
sides gives the sentence-meaning pipeline: concatenate the word states,
contract along a chosen reduction, read off the residual tensor.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

import numpy as np

from .linalg import ContractionPlan, Tensor, VectorSpace, contract, tensor_product
from .pregroup import (CompoundType, ReductionDiagram, SimpleType,
                       enumerate_reductions, parse_type_expr)

__all__ = [
    "FunctorAssignment",
    "LexiconEntry",
    "SentenceAnalysis",
    "UnassignedTypeError",
    "UnknownWordError",
    "NoParseError",
    "assign_space",
    "spaces_of",
    "lift_reduction",
    "check_strong_monoidal",
    "identity_verb",
    "enumerate_analyses",
    "sentence_meaning",
    "preller_obstruction",
    "PrellerWitness",
]


class UnassignedTypeError(KeyError):
    """A basic type has no space assigned."""

    def __init__(self, name):
        super().__init__(name)
        self.name = name

    def __str__(self):
        return f"no space assigned to basic type {self.name!r}"


class UnknownWordError(KeyError):
    """A sentence word is missing from the lexicon."""

    def __init__(self, word):
        super().__init__(word)
        self.word = word

    def __str__(self):
        return f"unknown word {self.word!r}"


class NoParseError(ValueError):
    """No reduction from the concatenated word types to the target."""


@dataclass(frozen=True)
class FunctorAssignment:
    """The object part of the functor: basic type name -> space."""

    space_of: dict[str, VectorSpace]

    def __post_init__(self):
        object.__setattr__(self, "space_of", dict(self.space_of))


def assign_space(assignment: FunctorAssignment, t: SimpleType) -> VectorSpace:
    """Space of a simple type; the adjoint exponent is ignored because the
    fixed basis identifies each space with its dual."""
    try:
        return assignment.space_of[t.base.name]
    except KeyError:
        raise UnassignedTypeError(t.base.name) from None


def spaces_of(assignment: FunctorAssignment,
              ct: CompoundType) -> tuple[VectorSpace, ...]:
    """Image of a compound type: one space per simple, in order."""
    return tuple(assign_space(assignment, t) for t in ct)


def lift_reduction(assignment: FunctorAssignment,
                   d: ReductionDiagram) -> ContractionPlan:
    """A reduction diagram becomes the plan contracting its cup positions;
    counits turn into index sums, identity wires into free indices."""
    return ContractionPlan(spaces_of(assignment, d.source),
                           frozenset(c.as_pair() for c in d.cups))


def check_strong_monoidal(assignment: FunctorAssignment, samples) -> bool:
    """Product of types maps to concatenated space lists, checked on the
    given (a, b) pairs."""
    for a, b in samples:
        if spaces_of(assignment, a + b) != spaces_of(assignment, a) + spaces_of(assignment, b):
            return False
    return True


@dataclass(frozen=True)
class LexiconEntry:
    """One reading of a word: its grammar type plus a state whose indices
    follow the type's simples left to right."""

    word: str
    gtype: CompoundType
    state: Tensor

    def __post_init__(self):
        if self.state.rank != len(self.gtype):
            raise ValueError(
                f"word {self.word!r}: state rank {self.state.rank} != "
                f"type length {len(self.gtype)}")


@dataclass(frozen=True)
class SentenceAnalysis:
    """One fully resolved parse: the chosen readings, their concatenated
    type, the chosen reduction, and the contracted meaning tensor."""

    words: tuple[LexiconEntry, ...]
    concat_type: CompoundType
    chosen: ReductionDiagram
    meaning: Tensor


def _check_entry_spaces(entry: LexiconEntry, assignment: FunctorAssignment):
    expected = tuple(s.dim for s in spaces_of(assignment, entry.gtype))
    if entry.state.dims != expected:
        raise ValueError(
            f"word {entry.word!r}: state dims {entry.state.dims} do not "
            f"match assigned spaces {expected}")


def enumerate_analyses(words, lexicon, assignment: FunctorAssignment,
                       target: CompoundType | str = "s") -> list[SentenceAnalysis]:
    """Every (reading combination, reduction) pair for the sentence, in a
    fixed order: combinations vary in lexicon entry order (rightmost word
    fastest), reductions in canonical cup order within each combination.

    Raises :class:`UnknownWordError` for a missing word.  An unparseable
    sentence yields ``[]``.
    """
    if isinstance(target, str):
        target = parse_type_expr(target)
    readings = []
    for w in words:
        entries = lexicon.entries_for(w)
        if not entries:
            raise UnknownWordError(w)
        for entry in entries:
            _check_entry_spaces(entry, assignment)
        readings.append(entries)
    analyses = []
    for combo in product(*readings):
        concat = CompoundType()
        for entry in combo:
            concat = concat + entry.gtype
        for diagram in enumerate_reductions(concat, target):
            state = Tensor((), [1.0])
            for entry in combo:
                state = tensor_product(state, entry.state)
            meaning = contract(state, lift_reduction(assignment, diagram))
            analyses.append(SentenceAnalysis(combo, concat, diagram, meaning))
    return analyses


def sentence_meaning(words, lexicon, assignment: FunctorAssignment,
                     parse_index: int = 0,
                     target: CompoundType | str = "s") -> SentenceAnalysis:
    """Meaning of a sentence under one chosen parse.

    ``parse_index`` picks from :func:`enumerate_analyses`; sentences with
    homonyms or several reductions expose every alternative there.

    Raises :class:`UnknownWordError`, :class:`NoParseError`, or
    :class:`IndexError` when the parse index exceeds the parse count.
    """
    if isinstance(target, str):
        target = parse_type_expr(target)
    if parse_index < 0:
        raise IndexError(f"parse_index must be >= 0, got {parse_index}")
    analyses = enumerate_analyses(words, lexicon, assignment, target)
    if not analyses:
        raise NoParseError(
            f"no reduction from the types of {' '.join(words)!r} to "
            f"{str(target) or '1'!r}")
    if parse_index >= len(analyses):
        raise IndexError(
            f"parse_index {parse_index} out of range: sentence has "
            f"{len(analyses)} parse(s)")
    return analyses[parse_index]


def identity_verb(noun_space: VectorSpace, sentence_space: VectorSpace) -> Tensor:
    """Copula state in N (x) S (x) N with coefficients c_ij = delta_ij;
    the sentence space must be one-dimensional."""
    if sentence_space.dim != 1:
        raise ValueError(
            f"identity verb needs a one-dimensional sentence space, got "
            f"dim {sentence_space.dim}")
    d = noun_space.dim
    return Tensor((noun_space, sentence_space, noun_space),
                  np.eye(d).reshape(d, 1, d))


@dataclass(frozen=True)
class PrellerWitness:
    """Outcome of lifting the poset identity on a a^r a to tensors."""

    dim: int
    is_identity: bool
    zero_witness: tuple[int, int, int] | None


def preller_obstruction(dim: int) -> PrellerWitness:
    """Lift the snake composite on A (x) A (x) A (counit on the first two
    slots, then unit appended) and test it against the identity matrix.

    In the free pregroup the corresponding arrow *is* the identity, but
    its lift annihilates e1 (x) e2 (x) e1 whenever dim >= 2, so only
    one-dimensional semantics can be faithful.
    """
    if dim < 1:
        raise ValueError(f"dim must be >= 1, got {dim}")
    space = VectorSpace("a", dim)
    eta = Tensor((space, space), np.eye(dim))
    plan = ContractionPlan((space,) * 3, frozenset({(0, 1)}))
    size = dim ** 3
    lifted = np.empty((size, size))
    col = 0
    for a in range(dim):
        for b in range(dim):
            for c in range(dim):
                basis = np.zeros((dim, dim, dim))
                basis[a, b, c] = 1.0
                bent = contract(Tensor((space,) * 3, basis), plan)
                image = tensor_product(bent, eta)
                lifted[:, col] = image.array.reshape(-1)
                col += 1
    is_identity = bool(np.array_equal(lifted, np.eye(size)))
    witness = None
    if dim >= 2:
        # column of e1 (x) e2 (x) e1, i.e. multi-index (0, 1, 0)
        col_idx = 0 * dim * dim + 1 * dim + 0
        if np.array_equal(lifted[:, col_idx], np.zeros(size)):
            witness = (0, 1, 0)
    return PrellerWitness(dim=dim, is_identity=is_identity, zero_witness=witness)
