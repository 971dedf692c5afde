"""Dense tensor kernel over labelled finite-dimensional real spaces.

Fixes the standard orthonormal basis once per space, so duals are
identified with the spaces themselves: the unit is the Kronecker-delta
state, the counit is plain index contraction, and bending a wire is a
reshape.  Data is row-major throughout (leftmost index slowest).
"""

from __future__ import annotations

from dataclasses import dataclass
from string import ascii_letters

import numpy as np

__all__ = [
    "VectorSpace",
    "Tensor",
    "ContractionPlan",
    "scalar",
    "make_eta",
    "apply_epsilon",
    "tensor_product",
    "contract",
    "yanking_check",
    "state_to_process",
    "process_to_state",
]


@dataclass(frozen=True)
class VectorSpace:
    """A labelled space of fixed dimension; basis labels are optional
    context-word names."""

    label: str
    dim: int
    basis_labels: tuple[str, ...] | None = None

    def __post_init__(self):
        if self.dim < 1:
            raise ValueError(f"dim must be >= 1, got {self.dim}")
        if self.basis_labels is not None:
            labels = tuple(self.basis_labels)
            object.__setattr__(self, "basis_labels", labels)
            if len(labels) != self.dim:
                raise ValueError(
                    f"space {self.label!r}: {len(labels)} basis labels for "
                    f"dim {self.dim}")
            if len(set(labels)) != len(labels):
                raise ValueError(f"space {self.label!r}: duplicate basis labels")

    def __str__(self):
        return f"{self.label}({self.dim})"


class Tensor:
    """An immutable dense array with one labelled space per index.
    Rank 0 is a scalar.

    >>> v = Tensor([VectorSpace("n", 3)], [21, 9, 0])
    >>> v.array.tolist()
    [21.0, 9.0, 0.0]
    """

    __slots__ = ("spaces", "array")

    def __init__(self, spaces, data):
        spaces = tuple(spaces)
        shape = tuple(s.dim for s in spaces)
        arr = np.asarray(data, dtype=np.float64)
        size = int(np.prod(shape)) if shape else 1
        if arr.size != size:
            raise ValueError(
                f"data has {arr.size} entries, spaces {shape} need {size}")
        arr = arr.reshape(shape).copy()
        arr.setflags(write=False)
        object.__setattr__(self, "spaces", spaces)
        object.__setattr__(self, "array", arr)

    def __setattr__(self, name, value):
        raise AttributeError("Tensor is immutable")

    @property
    def dims(self) -> tuple[int, ...]:
        return tuple(s.dim for s in self.spaces)

    @property
    def rank(self) -> int:
        return len(self.spaces)

    @property
    def flat(self) -> list[float]:
        """Row-major data as a plain list (the serialised layout)."""
        return [float(x) for x in self.array.reshape(-1)]

    def item(self) -> float:
        if self.rank != 0 and self.array.size != 1:
            raise ValueError(f"tensor of shape {self.dims} is not a scalar")
        return float(self.array.reshape(-1)[0])

    def __eq__(self, other):
        return (isinstance(other, Tensor) and self.spaces == other.spaces
                and np.array_equal(self.array, other.array))

    def __hash__(self):
        return hash((self.spaces, self.array.tobytes()))

    def __repr__(self):
        names = ", ".join(str(s) for s in self.spaces)
        return f"Tensor([{names}], {self.array.reshape(-1).tolist()})"


def scalar(value: float) -> Tensor:
    """A rank-0 tensor; the monoidal unit carrier."""
    return Tensor((), [value])


@dataclass(frozen=True)
class ContractionPlan:
    """Which index pairs of an input tensor get summed; the cups of a
    diagram, lifted.  Remaining indices keep their original order."""

    input_spaces: tuple[VectorSpace, ...]
    pairs: frozenset[tuple[int, int]]

    def __post_init__(self):
        object.__setattr__(self, "input_spaces", tuple(self.input_spaces))
        pairs = frozenset(tuple(sorted(p)) for p in self.pairs)
        object.__setattr__(self, "pairs", pairs)
        n = len(self.input_spaces)
        seen = set()
        for i, j in pairs:
            if not 0 <= i < j < n:
                raise ValueError(f"pair ({i}, {j}) out of range for {n} indices")
            if i in seen or j in seen:
                raise ValueError(f"pair ({i}, {j}) reuses an index")
            seen.update((i, j))
            if self.input_spaces[i].dim != self.input_spaces[j].dim:
                raise ValueError(
                    f"paired spaces {self.input_spaces[i]} and "
                    f"{self.input_spaces[j]} have different dims")

    @property
    def output_indices(self) -> tuple[int, ...]:
        matched = {p for pr in self.pairs for p in pr}
        return tuple(i for i in range(len(self.input_spaces)) if i not in matched)

    @property
    def output_spaces(self) -> tuple[VectorSpace, ...]:
        return tuple(self.input_spaces[i] for i in self.output_indices)


def make_eta(space: VectorSpace) -> Tensor:
    """The unit state in V (x) V: 1 on the diagonal, 0 elsewhere.

    >>> make_eta(VectorSpace("n", 3)).flat
    [1.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 1.0]
    """
    return Tensor((space, space), np.eye(space.dim))


def apply_epsilon(t: Tensor) -> float:
    """The counit on a two-index tensor: trace of the reshaped matrix."""
    if t.rank != 2:
        raise ValueError(f"counit needs exactly 2 indices, got {t.rank}")
    if t.dims[0] != t.dims[1]:
        raise ValueError(f"counit needs equal dims, got {t.dims}")
    return float(np.trace(t.array))


def tensor_product(a: Tensor, b: Tensor) -> Tensor:
    """Monoidal product of states: concatenated spaces, outer product data."""
    return Tensor(a.spaces + b.spaces,
                  np.tensordot(a.array, b.array, axes=0))


def contract(t: Tensor, plan: ContractionPlan) -> Tensor:
    """Sum every paired index pair over its shared range.

    With the orthonormal basis fixed this *is* applying the tensor product
    of counits (paired slots) and identities (free slots).
    """
    if plan.input_spaces != t.spaces:
        raise ValueError(
            f"plan expects spaces ({', '.join(map(str, plan.input_spaces))}), "
            f"tensor has ({', '.join(map(str, t.spaces))})")
    if not plan.pairs:
        return t
    if t.rank > len(ascii_letters):
        raise ValueError(f"rank {t.rank} exceeds contraction limit")
    letters = list(ascii_letters[:t.rank])
    for i, j in plan.pairs:
        letters[j] = letters[i]
    out_letters = "".join(letters[i] for i in plan.output_indices)
    result = np.einsum("".join(letters) + "->" + out_letters, t.array)
    return Tensor(plan.output_spaces, result)


def yanking_check(dim: int, tol: float = 0.0) -> bool:
    """Verify both snake composites act as the identity on V.

    One bends the wire to the right (state (x) eta, counit on the first
    two slots), the other to the left (eta (x) state, counit on the last
    two).  Each composite is assembled column by column from basis states
    and compared to the identity matrix entrywise within ``tol``.
    """
    space = VectorSpace("v", dim)
    eta = make_eta(space)
    right_bend = np.empty((dim, dim))
    left_bend = np.empty((dim, dim))
    for a in range(dim):
        basis = Tensor((space,), np.eye(dim)[a])
        out = contract(tensor_product(basis, eta),
                       ContractionPlan((space,) * 3, frozenset({(0, 1)})))
        right_bend[:, a] = out.array
        out = contract(tensor_product(eta, basis),
                       ContractionPlan((space,) * 3, frozenset({(1, 2)})))
        left_bend[:, a] = out.array
    eye = np.eye(dim)
    return (np.max(np.abs(right_bend - eye)) <= tol
            and np.max(np.abs(left_bend - eye)) <= tol)


def state_to_process(t: Tensor) -> np.ndarray:
    """Read a two-index state as the matrix of a map between its spaces
    (rows indexed by the first space, columns by the second)."""
    if t.rank != 2:
        raise ValueError(f"state must have exactly 2 indices, got {t.rank}")
    return np.array(t.array)


def process_to_state(matrix, spaces) -> Tensor:
    """Inverse reshape of :func:`state_to_process`; exact round trip."""
    spaces = tuple(spaces)
    if len(spaces) != 2:
        raise ValueError(f"need exactly 2 spaces, got {len(spaces)}")
    matrix = np.asarray(matrix, dtype=np.float64)
    if matrix.ndim != 2:
        raise ValueError(f"process must be a matrix, got ndim {matrix.ndim}")
    if matrix.shape != (spaces[0].dim, spaces[1].dim):
        raise ValueError(
            f"matrix shape {matrix.shape} does not match spaces "
            f"({spaces[0]}, {spaces[1]})")
    return Tensor(spaces, matrix)
