"""Brute-force reference implementations used to cross-check the fast paths.

Everything here trades speed for obviousness: reductions are found by
enumerating *all* partial matchings of wire positions and filtering them
against the validity rules written out verbatim, and meanings are evaluated
by looping over every index assignment of the word-state product.  Nothing
in this module calls the search code in :mod:`gramsem.pregroup` or the
einsum path in :mod:`gramsem.linalg`.
"""

from __future__ import annotations

from itertools import product

from .pregroup import CompoundType

__all__ = [
    "all_partial_matchings",
    "matching_is_valid",
    "brute_force_reductions",
    "brute_force_contract",
]


def all_partial_matchings(n: int):
    """Yield every partial matching of ``range(n)`` as a sorted tuple of
    (i, j) pairs, i < j.  No structural filtering at all."""

    def rec(free: tuple[int, ...]):
        if not free:
            yield ()
            return
        first, rest = free[0], free[1:]
        # first stays unmatched
        for m in rec(rest):
            yield m
        # or pairs with any later free position
        for k, partner in enumerate(rest):
            for m in rec(rest[:k] + rest[k + 1:]):
                yield ((first, partner),) + m

    for m in rec(tuple(range(n))):
        yield tuple(sorted(m))


def matching_is_valid(source: CompoundType, pairs) -> bool:
    """Check the diagram rules one by one, straight from their statements."""
    # each pair is a counit redex: same base, right exponent = left + 1
    for i, j in pairs:
        if source[i].base != source[j].base:
            return False
        if source[j].adjoint != source[i].adjoint + 1:
            return False
    # planarity: no i < k < j < l
    for i, j in pairs:
        for k, l in pairs:
            if i < k < j < l:
                return False
    # nesting closure: everything strictly under a cup is matched,
    # and matched by a cup lying strictly inside it
    matched = {p for pr in pairs for p in pr}
    for i, j in pairs:
        for p in range(i + 1, j):
            if p not in matched:
                return False
            for k, l in pairs:
                if p in (k, l):
                    if not (i < k and l < j) and (k, l) != (i, j):
                        return False
    return True


def brute_force_reductions(source: CompoundType,
                           target: CompoundType) -> list[tuple[tuple[int, int], ...]]:
    """All valid cup sets reducing ``source`` to ``target``, sorted."""
    n = len(source)
    found = []
    for pairs in all_partial_matchings(n):
        if not matching_is_valid(source, pairs):
            continue
        matched = {p for pr in pairs for p in pr}
        residual = CompoundType(
            t for p, t in enumerate(source) if p not in matched)
        if residual == target:
            found.append(pairs)
    return sorted(found)


def brute_force_contract(arrays, pairs):
    """Contract an ordered list of numpy arrays (one per word state) over
    the given global index pairs by summing explicit index assignments.

    Returns ``(out_shape, out_flat)`` where the output keeps unmatched
    indices in original order.  Quadratic-to-exponential and proud of it.
    """
    dims = []
    for a in arrays:
        dims.extend(a.shape)
    matched = {p for pr in pairs for p in pr}
    out_axes = [p for p in range(len(dims)) if p not in matched]
    out_shape = tuple(dims[p] for p in out_axes)
    size = 1
    for d in out_shape:
        size *= d
    out = [0.0] * max(size, 1)
    for assign in product(*(range(d) for d in dims)):
        if any(assign[i] != assign[j] for i, j in pairs):
            continue
        term = 1.0
        cursor = 0
        for a in arrays:
            k = len(a.shape)
            term *= float(a[assign[cursor:cursor + k]]) if k else float(a)
            cursor += k
        offset = 0
        for p in out_axes:
            offset = offset * dims[p] + assign[p]
        out[offset] += term
    return out_shape, out
