"""The tensor kernel: units, counits, contraction, snakes, reshaping."""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gramsem.linalg import (ContractionPlan, Tensor, VectorSpace,
                            apply_epsilon, contract, make_eta,
                            process_to_state, scalar, state_to_process,
                            tensor_product, yanking_check)

N = VectorSpace("n", 3, ("sweet", "green", "furry"))
S = VectorSpace("s", 1)


class TestSpacesAndTensors:
    def test_space_validation(self):
        with pytest.raises(ValueError):
            VectorSpace("v", 0)
        with pytest.raises(ValueError):
            VectorSpace("v", 2, ("a",))
        with pytest.raises(ValueError):
            VectorSpace("v", 2, ("a", "a"))

    def test_tensor_size_check(self):
        with pytest.raises(ValueError):
            Tensor((N,), [1, 2])

    def test_tensor_is_immutable(self):
        t = Tensor((N,), [1, 2, 3])
        with pytest.raises(AttributeError):
            t.array = None
        with pytest.raises(ValueError):
            t.array[0] = 9

    def test_rank0_scalar(self):
        assert scalar(4.5).item() == 4.5
        assert scalar(1).dims == ()

    def test_row_major_layout(self):
        # entry (i, j, k) sits at offset i*dim_j*dim_k + j*dim_k + k
        a, b, c = VectorSpace("a", 2), VectorSpace("b", 3), VectorSpace("c", 4)
        data = np.arange(24.0)
        t = Tensor((a, b, c), data)
        strides = (12, 4, 1)
        for i in range(2):
            for j in range(3):
                for k in range(4):
                    offset = i * strides[0] + j * strides[1] + k * strides[2]
                    assert t.array[i, j, k] == data[offset]


class TestUnitCounit:
    def test_eta_dim3_layout(self):
        assert make_eta(N).flat == [1, 0, 0, 0, 1, 0, 0, 0, 1]

    def test_eta_dim1_and_dim2(self):
        assert make_eta(VectorSpace("v", 1)).flat == [1]
        assert make_eta(VectorSpace("v", 2)).flat == [1, 0, 0, 1]

    def test_epsilon_of_eta_is_dimension(self):
        for d in range(1, 65):
            sp = VectorSpace("v", d)
            assert apply_epsilon(make_eta(sp)) == d

    def test_epsilon_kills_off_diagonal_basis_pair(self):
        sp = VectorSpace("v", 4)
        e1_e2 = np.zeros((4, 4))
        e1_e2[0, 1] = 1.0
        assert apply_epsilon(Tensor((sp, sp), e1_e2)) == 0

    def test_epsilon_of_copula_state(self):
        # the 9-entry state with ones at offsets 0, 4, 8 is the identity
        # matrix reshaped; its counit is the trace, 3
        data = [0.0] * 9
        data[0] = data[4] = data[8] = 1.0
        assert apply_epsilon(Tensor((N, N), data)) == 3

    def test_epsilon_arity_and_dim_errors(self):
        with pytest.raises(ValueError):
            apply_epsilon(Tensor((N,), [1, 2, 3]))
        with pytest.raises(ValueError):
            apply_epsilon(Tensor((N, S), np.zeros((3, 1))))


class TestTensorProduct:
    def test_outer_product_entry(self):
        bananas = Tensor((N,), [21, 9, 0])
        fruit = Tensor((N,), [43, 19, 0])
        prod = tensor_product(bananas, fruit)
        assert prod.array[0, 0] == 903

    def test_unit_scalar(self):
        x = Tensor((N,), [5, -1, 2])
        assert tensor_product(x, scalar(1)) == Tensor((N,), [5, -1, 2])
        assert tensor_product(scalar(1), x) == x

    def test_shapes_concatenate(self):
        a = Tensor((VectorSpace("a", 2),), [1, 2])
        b = Tensor((VectorSpace("b", 3),), [1, 2, 3])
        prod = tensor_product(a, b)
        assert prod.dims == (2, 3) and prod.array.size == 6


class TestContract:
    def test_sentence_contraction(self, toy_lexicon):
        entries = {w: toy_lexicon.entries_for(w)[0]
                   for w in ("bananas", "are", "fruit")}
        state = tensor_product(
            tensor_product(entries["bananas"].state, entries["are"].state),
            entries["fruit"].state)
        plan = ContractionPlan(state.spaces, frozenset({(0, 1), (3, 4)}))
        out = contract(state, plan)
        assert out.dims == (1,) and out.item() == 1074

    def test_empty_plan_is_identity(self):
        t = Tensor((N,), [1, 2, 3])
        assert contract(t, ContractionPlan((N,), frozenset())) == t

    def test_contracting_eta_gives_dimension(self):
        for d in (1, 2, 5):
            sp = VectorSpace("v", d)
            out = contract(make_eta(sp),
                           ContractionPlan((sp, sp), frozenset({(0, 1)})))
            assert out.dims == () and out.item() == d

    def test_plan_validation(self):
        sp2, sp3 = VectorSpace("a", 2), VectorSpace("b", 3)
        with pytest.raises(ValueError, match="different dims"):
            ContractionPlan((sp2, sp3), frozenset({(0, 1)}))
        with pytest.raises(ValueError, match="out of range"):
            ContractionPlan((sp2, sp2), frozenset({(0, 5)}))
        with pytest.raises(ValueError, match="reuses"):
            ContractionPlan((sp2,) * 3, frozenset({(0, 1), (1, 2)}))

    def test_space_mismatch(self):
        t = Tensor((N,), [1, 2, 3])
        plan = ContractionPlan((VectorSpace("m", 3),), frozenset())
        with pytest.raises(ValueError, match="plan expects"):
            contract(t, plan)

    def test_one_sided_yanking_on_states(self):
        rng = np.random.default_rng(7)
        for dims in [(3,), (2, 3), (4, 2, 3)]:
            spaces = tuple(VectorSpace(f"v{k}", d) for k, d in enumerate(dims))
            x = Tensor(spaces, rng.integers(-5, 6, size=dims))
            eta = make_eta(spaces[-1])
            bent = tensor_product(x, eta)
            plan = ContractionPlan(
                bent.spaces, frozenset({(len(dims) - 1, len(dims))}))
            assert contract(bent, plan) == x


class TestYanking:
    @pytest.mark.parametrize("dim", list(range(1, 17)))
    def test_snake_equations_exact(self, dim):
        assert yanking_check(dim, tol=0.0)


class TestProcessStateDuality:
    def test_eta_reshapes_to_identity(self):
        assert np.array_equal(state_to_process(make_eta(N)), np.eye(3))

    def test_identity_matrix_to_copula_state(self):
        state = process_to_state(np.eye(3), (N, N))
        flat = state.flat
        assert [i for i, x in enumerate(flat) if x == 1] == [0, 4, 8]

    def test_round_trip_exact(self):
        rng = np.random.default_rng(3)
        v, w = VectorSpace("v", 2), VectorSpace("w", 3)
        t = Tensor((v, w), rng.standard_normal((2, 3)))
        assert process_to_state(state_to_process(t), (v, w)) == t

    def test_arity_errors(self):
        with pytest.raises(ValueError):
            state_to_process(Tensor((N,), [1, 2, 3]))
        with pytest.raises(ValueError):
            process_to_state(np.zeros((2, 2)), (N, N))
        with pytest.raises(ValueError):
            process_to_state(np.zeros(4), (N, N))


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 5), st.integers(1, 5), st.integers(0, 10 ** 6))
def test_reshape_round_trip_property(dv, dw, seed):
    rng = np.random.default_rng(seed)
    v, w = VectorSpace("v", dv), VectorSpace("w", dw)
    t = Tensor((v, w), rng.standard_normal((dv, dw)))
    assert process_to_state(state_to_process(t), (v, w)) == t
