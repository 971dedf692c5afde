#!/usr/bin/env python3
"""The tensor kernel: units, counits, and the snake equations.

Once each space carries a fixed orthonormal basis, the unit state is the
Kronecker delta, the counit is index contraction, and the two snake
composites (bend a wire one way, then the other) flatten back to the
identity wire -- exactly, in integer arithmetic.
"""

import numpy as np

from gramsem import (ContractionPlan, Tensor, VectorSpace, apply_epsilon,
                     contract, make_eta, process_to_state, state_to_process,
                     tensor_product, yanking_check)

V = VectorSpace("v", 3)

# The unit state in V (x) V: ones down the diagonal.
eta = make_eta(V)
print("eta over dim 3, flattened:", eta.flat)

# The counit undoes it: contracting the diagonal state counts the basis.
print("epsilon(eta) =", apply_epsilon(eta), "(the dimension)")

# Bend a wire: x (x) eta, then contract x against eta's first leg.
# The wire pulls taut and x comes back unchanged.
x = Tensor((V,), [2, -1, 7])
bent = tensor_product(x, eta)
plan = ContractionPlan(bent.spaces, frozenset({(0, 1)}))
print("snake applied to", x.flat, "->", contract(bent, plan).flat)

# Both snake composites equal the identity matrix for every dimension.
print("snake equations, dims 1..16:",
      all(yanking_check(d, tol=0.0) for d in range(1, 17)))

# Process-state duality: a two-index state is a matrix and vice versa.
print("eta as a matrix:")
print(state_to_process(eta))
roundtrip = process_to_state(state_to_process(eta), eta.spaces)
print("round trip exact:", roundtrip == eta)

# Any matrix works; a random one survives the round trip bit for bit.
rng = np.random.default_rng(0)
W = VectorSpace("w", 2)
state = Tensor((V, W), rng.standard_normal((3, 2)))
print("random 3x2 state round trips:",
      process_to_state(state_to_process(state), (V, W)) == state)
