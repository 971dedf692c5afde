#!/usr/bin/env python3
"""Why the toy sentence space is one-dimensional.

In the free pregroup there is at most one arrow between any two types, so
the zig-zag arrow on a a^r a is forced to be the identity.  Its tensor
lift is not: contract the first two slots, then append the diagonal pair.
For dim >= 2 that map kills e1 (x) e2 (x) e1, so it cannot be the
identity, and no faithful tensor model exists above dimension one.
"""

from gramsem import preller_obstruction

for dim in range(1, 7):
    w = preller_obstruction(dim)
    if w.is_identity:
        print(f"dim {dim}: lift IS the identity (no obstruction)")
    else:
        i, j, k = w.zero_witness
        print(f"dim {dim}: lift is NOT the identity; it sends "
              f"e{i + 1} (x) e{j + 1} (x) e{k + 1} to zero")

print()
print("Only dim 1 survives: a sentence space richer than a scalar cannot")
print("be reached by a structure-preserving map out of a free pregroup.")
print("(Meaning still works fine: the pipeline only ever *applies* lifted")
print("reductions; it never needs the lift to be injective.)")
