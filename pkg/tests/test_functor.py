"""Grammar-to-tensor lifting and the sentence-meaning pipeline."""

import numpy as np
import pytest

from gramsem.functor import (FunctorAssignment, NoParseError,
                             UnassignedTypeError, UnknownWordError,
                             assign_space, check_strong_monoidal,
                             enumerate_analyses, identity_verb,
                             lift_reduction, preller_obstruction,
                             sentence_meaning, spaces_of)
from gramsem.linalg import Tensor, VectorSpace, contract, tensor_product
from gramsem.pregroup import (CompoundType, Cup, ReductionDiagram, SimpleType,
                              parse_type_expr)

N = VectorSpace("n", 3, ("sweet", "green", "furry"))
S = VectorSpace("s", 1)
F = FunctorAssignment({"n": N, "s": S})


class TestSpaceAssignment:
    def test_plain_and_duals_share_a_space(self):
        n = parse_type_expr("n")[0]
        assert assign_space(F, n) == N
        assert assign_space(F, SimpleType(n.base, 1)) == N

    def test_dual_collapse_all_exponents(self):
        n = parse_type_expr("n")[0]
        for z in range(-3, 4):
            assert assign_space(F, SimpleType(n.base, z)) == N

    def test_verb_type_maps_to_triple(self):
        assert spaces_of(F, parse_type_expr("n^r s n^l")) == (N, S, N)

    def test_unassigned_type(self):
        with pytest.raises(UnassignedTypeError, match="q"):
            spaces_of(F, parse_type_expr("q"))


class TestStrongMonoidal:
    def test_sample_pairs(self):
        samples = [
            (parse_type_expr("n"), parse_type_expr("n^l")),
            (CompoundType(), parse_type_expr("s")),
            (parse_type_expr("n^r s n^l"), parse_type_expr("n")),
        ]
        assert check_strong_monoidal(F, samples)
        assert spaces_of(F, samples[2][0] + samples[2][1]) == (N, S, N, N)


class TestLiftReduction:
    def test_sentence_diagram_lifts_to_plan(self):
        src = parse_type_expr("n n^r s n^l n")
        d = ReductionDiagram(src, frozenset({Cup(0, 1), Cup(3, 4)}))
        plan = lift_reduction(F, d)
        assert plan.input_spaces == (N, N, S, N, N)
        assert plan.pairs == frozenset({(0, 1), (3, 4)})
        assert plan.output_spaces == (S,)

    def test_empty_diagram_lifts_to_identity_plan(self):
        d = ReductionDiagram(parse_type_expr("n"))
        plan = lift_reduction(F, d)
        assert plan.pairs == frozenset() and plan.output_spaces == (N,)

    def test_adjective_diagram(self):
        src = parse_type_expr("n n^l n")
        d = ReductionDiagram(src, frozenset({Cup(1, 2)}))
        plan = lift_reduction(F, d)
        assert plan.output_indices == (0,)

    def test_identity_lift_acts_as_identity_on_states(self):
        rng = np.random.default_rng(11)
        src = parse_type_expr("n s n")
        d = ReductionDiagram(src)
        plan = lift_reduction(F, d)
        for _ in range(5):
            t = Tensor((N, S, N), rng.standard_normal((3, 1, 3)))
            out = contract(t, plan)
            assert np.allclose(out.array, t.array, atol=1e-9)


class TestSentenceMeaning:
    def test_worked_example(self, toy_lexicon):
        a = sentence_meaning(["bananas", "are", "fruit"], toy_lexicon,
                             toy_lexicon.functor_assignment())
        assert a.meaning.item() == 1074
        assert a.chosen.sorted_cups == ((0, 1), (3, 4))
        assert a.concat_type == parse_type_expr("n n^r s n^l n")

    def test_identity_adjective_fixes_noun(self, toy_lexicon):
        a = sentence_meaning(["yellow", "banana"], toy_lexicon,
                             toy_lexicon.functor_assignment(), target="n")
        assert a.meaning.flat == [21, 9, 0]

    def test_single_noun_identity_reduction(self, toy_lexicon):
        a = sentence_meaning(["bananas"], toy_lexicon,
                             toy_lexicon.functor_assignment(), target="n")
        assert a.meaning.flat == [21, 9, 0]
        assert a.chosen.cups == frozenset()

    def test_unknown_word_names_it(self, toy_lexicon):
        with pytest.raises(UnknownWordError, match="xylophone"):
            sentence_meaning(["bananas", "xylophone"], toy_lexicon,
                             toy_lexicon.functor_assignment())

    def test_no_parse(self, toy_lexicon):
        with pytest.raises(NoParseError):
            sentence_meaning(["bananas", "fruit"], toy_lexicon,
                             toy_lexicon.functor_assignment())

    def test_parse_index_out_of_range(self, toy_lexicon):
        with pytest.raises(IndexError, match="1 parse"):
            sentence_meaning(["bananas", "are", "fruit"], toy_lexicon,
                             toy_lexicon.functor_assignment(), parse_index=1)

    def test_identity_verb_builder(self, toy_lexicon):
        t = identity_verb(N, S)
        assert t.dims == (3, 1, 3)
        assert t.flat == toy_lexicon.entries_for("are")[0].state.flat
        with pytest.raises(ValueError):
            identity_verb(N, VectorSpace("s", 2))


class TestAmbiguity:
    def test_two_distinct_parses_match_oracle_output(
            self, ambiguous_lexicon, ambiguous_expected):
        words = ambiguous_expected["sentence"]
        assignment = ambiguous_lexicon.functor_assignment()
        analyses = enumerate_analyses(words, ambiguous_lexicon, assignment,
                                      ambiguous_expected["target"])
        assert len(analyses) == len(ambiguous_expected["parses"]) >= 2
        for analysis, expected in zip(analyses, ambiguous_expected["parses"]):
            assert [str(e.gtype) for e in analysis.words] == expected["types"]
            assert [list(c) for c in analysis.chosen.sorted_cups] == \
                expected["cups"]
            assert list(analysis.meaning.dims) == expected["meaning"]["dims"]
            assert analysis.meaning.flat == [
                float(x) for x in expected["meaning"]["data"]]
        meanings = {tuple(a.meaning.flat) for a in analyses}
        assert len(meanings) >= 2

    def test_parse_index_selects_readings(self, ambiguous_lexicon,
                                          ambiguous_expected):
        words = ambiguous_expected["sentence"]
        assignment = ambiguous_lexicon.functor_assignment()
        first = sentence_meaning(words, ambiguous_lexicon, assignment, 0)
        second = sentence_meaning(words, ambiguous_lexicon, assignment, 1)
        assert first.meaning != second.meaning


class TestPrellerObstruction:
    def test_dim1_lift_is_identity(self):
        w = preller_obstruction(1)
        assert w.is_identity and w.zero_witness is None

    @pytest.mark.parametrize("dim", range(2, 9))
    def test_higher_dims_fail_injectivity(self, dim):
        w = preller_obstruction(dim)
        assert not w.is_identity
        assert w.zero_witness == (0, 1, 0)

    def test_dim3_image_of_e1e1e1(self):
        # composing by hand: the counit keeps e1, the unit appends the
        # diagonal pair, so e1*e1*e1 maps to sum_i e1*ei*ei
        space = VectorSpace("a", 3)
        from gramsem.linalg import ContractionPlan
        basis = np.zeros((3, 3, 3))
        basis[0, 0, 0] = 1.0
        bent = contract(Tensor((space,) * 3, basis),
                        ContractionPlan((space,) * 3, frozenset({(0, 1)})))
        image = tensor_product(bent, Tensor((space, space), np.eye(3)))
        expected = np.zeros((3, 3, 3))
        for i in range(3):
            expected[0, i, i] = 1.0
        assert np.array_equal(image.array, expected)

    def test_rejects_dim_zero(self):
        with pytest.raises(ValueError):
            preller_obstruction(0)
