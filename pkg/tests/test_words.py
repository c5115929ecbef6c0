import pytest
from hypothesis import given, strategies as st

from edgewise.ordinals import (
    OrdinalMap,
    compose,
    degeneracy,
    face,
    identity,
    ordinal_maps,
)
from edgewise.words import (
    BACKWARD,
    C0,
    FORWARD,
    ID,
    NONE,
    OP,
    GeneratorAction,
    MalformedActionError,
    Word,
    WordParseError,
    compose_words,
    decompose,
    eval_map,
    eval_object,
    generator_action,
    interval_of,
    is_we_preserving,
    iter_words,
    sum_words,
)

SEGAL = Word((OP, ID))


def all_maps(a, b):
    return list(ordinal_maps(a, b))


random_words = st.builds(
    Word, st.lists(st.sampled_from((ID, OP, C0)), min_size=1, max_size=6).map(tuple)
)


class TestParsing:
    def test_round_trip(self):
        assert str(Word.parse("Op+Id")) == "Op+Id"

    def test_whitespace_tolerant(self):
        assert Word.parse("  Op +  Id ") == SEGAL

    def test_case_sensitive(self):
        with pytest.raises(WordParseError):
            Word.parse("op+id")

    def test_empty(self):
        with pytest.raises(WordParseError):
            Word.parse("")

    def test_dangling_plus(self):
        with pytest.raises(WordParseError):
            Word.parse("Op++Id")

    def test_needs_a_letter(self):
        with pytest.raises(ValueError):
            Word(())


class TestEvalObject:
    def test_constant_word_collapses_everything(self):
        w = Word((C0,))
        for n in range(6):
            assert eval_object(w, n) == 0

    def test_segal_word(self):
        assert eval_object(SEGAL, 0) == 1
        assert eval_object(SEGAL, 1) == 3

    def test_identity_word(self):
        assert eval_object(Word((ID,)), 7) == 7

    def test_point_value_is_length_minus_one(self):
        for w in iter_words(4):
            assert eval_object(w, 0) == len(w) - 1

    def test_growth(self):
        # k <= w(k) whenever some letter is not C0.
        for w in iter_words(4):
            if all(letter == C0 for letter in w):
                continue
            for k in range(9):
                assert k <= eval_object(w, k)


class TestEvalMap:
    def test_segal_on_the_faces(self):
        assert eval_map(SEGAL, face(1, 0)).values == (0, 3)
        assert eval_map(SEGAL, face(1, 1)).values == (1, 2)

    def test_segal_on_the_degeneracy(self):
        assert eval_map(SEGAL, degeneracy(0, 0)).values == (0, 0, 1, 1)

    def test_identity_word_is_identity(self):
        w = Word((ID,))
        for a in range(3):
            for b in range(3):
                for f in all_maps(a, b):
                    assert eval_map(w, f) == f

    def test_functorial(self):
        words = list(iter_words(3))
        for a in range(3):
            for b in range(3):
                for f in all_maps(a, b):
                    for c in range(3):
                        for g in all_maps(b, c):
                            fg = compose(f, g)
                            for w in words:
                                assert eval_map(w, fg) == compose(
                                    eval_map(w, f), eval_map(w, g)
                                )

    def test_objects_match_maps(self):
        for w in iter_words(3):
            for n in range(3):
                assert eval_map(w, identity(n)) == identity(eval_object(w, n))


class TestSumAndCompose:
    def test_sum_is_concatenation(self):
        assert sum_words(Word((OP,)), Word((ID,))) == SEGAL
        assert Word((ID,)) + Word((ID,)) == Word((ID, ID))

    def test_sum_associative(self):
        a, b, c = Word((OP,)), Word((ID,)), Word((C0,))
        assert (a + b) + c == a + (b + c) == Word((OP, ID, C0))

    def test_sum_adds_object_values(self):
        for w1 in iter_words(2):
            for w2 in iter_words(2):
                for n in range(4):
                    assert eval_object(sum_words(w1, w2), n) == eval_object(
                        w1, n
                    ) + eval_object(w2, n) + 1

    def test_segal_squared(self):
        assert compose_words(SEGAL, SEGAL) == Word((OP, ID, OP, ID))

    def test_op_squared_is_identity(self):
        assert compose_words(Word((OP,)), Word((OP,))) == Word((ID,))

    def test_constant_absorbs(self):
        for w in iter_words(3):
            assert compose_words(Word((C0,)), w) == Word((C0,))

    def test_compose_matches_pointwise_composition(self):
        maps = [f for a in range(3) for b in range(3) for f in all_maps(a, b)]
        words = list(iter_words(3))
        for outer in words:
            for inner in words:
                composed = compose_words(outer, inner)
                for n in range(3):
                    assert eval_object(composed, n) == eval_object(
                        outer, eval_object(inner, n)
                    )
                for f in maps:
                    assert eval_map(composed, f) == eval_map(
                        outer, eval_map(inner, f)
                    )

    def test_distribution(self):
        # Composition distributes over the sum from the right.
        maps = [f for a in range(4) for b in range(4) for f in all_maps(a, b)]
        words = list(iter_words(2))
        for w1 in words:
            for w2 in words:
                for w3 in words:
                    lhs = compose_words(sum_words(w1, w2), w3)
                    rhs = sum_words(compose_words(w1, w3), compose_words(w2, w3))
                    assert lhs == rhs
                    for f in maps:
                        assert eval_map(lhs, f) == eval_map(rhs, f)


class TestInterval:
    def test_segal(self):
        interval = interval_of(SEGAL)
        assert interval.vertex_count == 3
        assert interval.gaps == (FORWARD, BACKWARD)

    def test_identity(self):
        assert interval_of(Word((ID,))).gaps == (FORWARD,)

    def test_constant_then_identity(self):
        assert interval_of(Word((C0, ID))).gaps == (FORWARD, NONE)

    def test_vertex_count(self):
        for w in iter_words(4):
            assert interval_of(w).vertex_count == eval_object(w, 0) + 2

    def test_wedge_gap_law(self):
        # Ascending vertex order places the second summand's block first,
        # so the sum's gaps are the concatenation in reversed word order.
        for w1 in iter_words(3):
            i1 = interval_of(w1)
            for w2 in iter_words(3):
                i2 = interval_of(w2)
                glued = interval_of(sum_words(w1, w2))
                assert glued.gaps == i2.gaps + i1.gaps
                assert glued.vertex_count == i1.vertex_count + i2.vertex_count - 1

    def test_connectivity_matches_letter_criterion(self):
        for w in iter_words(5):
            assert interval_of(w).connected == is_we_preserving(w)
            assert (NONE not in interval_of(w).gaps) == is_we_preserving(w)


class TestGeneratorAction:
    def test_segal(self):
        action = generator_action(SEGAL)
        assert (action.obj0, action.obj1) == (1, 3)
        assert action.face0.values == (0, 3)
        assert action.face1.values == (1, 2)
        assert action.degeneracy.values == (0, 0, 1, 1)

    def test_identity_word(self):
        action = generator_action(Word((ID,)))
        assert (action.obj0, action.obj1) == (0, 1)
        assert action.face0.values == (1,)
        assert action.face1.values == (0,)
        assert action.degeneracy.values == (0, 0)

    def test_constant_word(self):
        action = generator_action(Word((C0,)))
        assert (action.obj0, action.obj1) == (0, 0)
        assert action.face0.values == (0,)
        assert action.face1.values == (0,)
        assert action.degeneracy.values == (0,)

    def test_validate_passes_for_words(self):
        for w in iter_words(3):
            generator_action(w).validate()


class TestDecompose:
    def test_segal_comes_back(self):
        assert decompose(generator_action(SEGAL)) == SEGAL

    def test_segal_nondegenerate_edges(self):
        # The two edges of the Segal zigzag, in ascending label order.
        action = generator_action(SEGAL)
        vertices = [h for h in ordinal_maps(action.obj0, 1)]
        edges = [
            e.values
            for e in ordinal_maps(action.obj1, 1)
            if not any(compose(action.degeneracy, v) == e for v in vertices)
        ]
        assert edges == [(0, 0, 0, 1), (0, 1, 1, 1)]

    def test_constant_comes_back(self):
        assert decompose(generator_action(Word((C0,)))) == Word((C0,))

    def test_round_trip_exhaustive(self):
        for w in iter_words(4):
            assert decompose(generator_action(w)) == w

    @given(random_words)
    def test_round_trip_random(self, w):
        assert decompose(generator_action(w)) == w

    def test_rejects_nonsplitting_degeneracy(self):
        action = GeneratorAction(
            obj0=1,
            obj1=1,
            face0=identity(1),
            face1=identity(1),
            degeneracy=OrdinalMap(1, 1, (0, 0)),
        )
        with pytest.raises(MalformedActionError):
            decompose(action)

    def test_rejects_wrong_shapes(self):
        action = GeneratorAction(
            obj0=1,
            obj1=3,
            face0=OrdinalMap(1, 3, (0, 3)),
            face1=OrdinalMap(1, 3, (1, 2)),
            degeneracy=OrdinalMap(3, 0, (0, 0, 0, 0)),
        )
        with pytest.raises(MalformedActionError):
            decompose(action)

    def test_rejects_crowded_gap(self):
        # Valid generator identities, but two nondegenerate edges cross the
        # single gap.
        action = GeneratorAction(
            obj0=0,
            obj1=2,
            face0=OrdinalMap(0, 2, (0,)),
            face1=OrdinalMap(0, 2, (2,)),
            degeneracy=OrdinalMap(2, 0, (0, 0, 0)),
        )
        action.validate()
        with pytest.raises(MalformedActionError):
            decompose(action)


class TestWePreserving:
    def test_examples(self):
        assert is_we_preserving(SEGAL)
        assert not is_we_preserving(Word((C0,)))
        assert not is_we_preserving(Word((ID, C0, OP)))
