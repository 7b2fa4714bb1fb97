import pytest
from hypothesis import given, strategies as st

from mixedbraid.braid import (
    BraidWord,
    MixedBraidSpec,
    Permutation,
    Sigma,
    Twist,
    expand_A,
    is_mixed,
    parse_word,
    relations_general,
    relations_m2,
    tau_word,
    underlying_permutation,
    word,
)

S, A = Sigma, Twist


class TestSpec:
    def test_boundaries_and_colors(self):
        spec = MixedBraidSpec((2, 3, 1))
        assert spec.n == 6 and spec.m == 3
        assert spec.h == (0, 2, 5, 6)
        assert spec.colors() == (1, 1, 2, 2, 2, 3)

    @pytest.mark.parametrize("parts", [(), (0, 2), (-1,)])
    def test_invalid_parts(self, parts):
        with pytest.raises(ValueError):
            MixedBraidSpec(parts)

    def test_mixed_generators(self):
        gens = MixedBraidSpec((2, 2)).mixed_generators()
        assert set(gens) == {S(1), S(3), A(1, 2)}


class TestPermutation:
    def test_sigma1(self):
        spec = MixedBraidSpec((3,))
        assert underlying_permutation(word(S(1)), spec) == Permutation((2, 1, 3))

    def test_twist_is_pure(self):
        spec = MixedBraidSpec((2, 1, 3))
        assert underlying_permutation(word(A(1, 2), A(2, 3), A(1, 3)), spec).is_identity()

    def test_braid_relation_image(self):
        spec = MixedBraidSpec((3,))
        a = underlying_permutation(word(S(1), S(2), S(1)), spec)
        b = underlying_permutation(word(S(2), S(1), S(2)), spec)
        assert a == b

    def test_not_a_bijection(self):
        with pytest.raises(ValueError):
            Permutation((1, 1, 2))


class TestIsMixed:
    spec = MixedBraidSpec((2, 2))

    def test_boundary_crossing(self):
        assert not is_mixed(word(S(2), raw=True), self.spec)

    def test_boundary_square(self):
        assert is_mixed(word(S(2), S(2), raw=True), self.spec)

    def test_generators(self):
        assert is_mixed(word(S(1), A(1, 2), (S(3), -1)), self.spec)


class TestExpandA:
    def test_adjacent_blocks(self):
        assert expand_A(1, 2, MixedBraidSpec((2, 2))) == word(S(2), S(2), raw=True)

    def test_conjugated(self):
        got = expand_A(1, 3, MixedBraidSpec((1, 1, 1)))
        assert got == word(S(2), S(1), S(1), (S(2), -1), raw=True)

    @pytest.mark.parametrize("parts", [(1, 1, 1), (2, 1, 2), (1, 2, 1, 2)])
    def test_pure_and_mixed(self, parts):
        spec = MixedBraidSpec(parts)
        for j in range(1, spec.m):
            for k in range(j + 1, spec.m + 1):
                w = expand_A(j, k, spec)
                assert underlying_permutation(w, spec).is_identity()
                assert is_mixed(w, spec)

    def test_bad_indices(self):
        with pytest.raises(ValueError):
            expand_A(2, 2, MixedBraidSpec((1, 1)))


class TestTau:
    def test_two_strands(self):
        assert tau_word(MixedBraidSpec((2,))) == word(S(1), S(1), raw=True)

    def test_three_strands(self):
        assert tau_word(MixedBraidSpec((3,))) == word(S(1), S(2), raw=True) ** 3

    def test_pure(self):
        spec = MixedBraidSpec((2, 3))
        w = tau_word(spec)
        assert len(w) == spec.n * (spec.n - 1)
        assert underlying_permutation(w, spec).is_identity()


class TestRelations:
    def test_length_eight_relation_present(self):
        rels = relations_m2(MixedBraidSpec((2, 2)))
        assert (word(S(1), A(1, 2), S(1), A(1, 2)), word(A(1, 2), S(1), A(1, 2), S(1))) in rels

    def test_no_sigma_relations_for_singletons(self):
        assert relations_m2(MixedBraidSpec((1, 1))) == []

    def test_braid_relation_present(self):
        rels = relations_m2(MixedBraidSpec((3, 3)))
        assert (word(S(1), S(2), S(1)), word(S(2), S(1), S(2))) in rels

    def test_commuting_conjugates_present(self):
        rels = relations_m2(MixedBraidSpec((2, 2)))
        left = word(S(1), A(1, 2), (S(1), -1))
        right = word(S(3), A(1, 2), (S(3), -1))
        assert (left * right, right * left) in rels

    def test_m2_only(self):
        with pytest.raises(ValueError):
            relations_m2(MixedBraidSpec((1, 1, 1)))

    def test_general_contains_embedded_pairs(self):
        spec = MixedBraidSpec((2, 1, 2))
        rels = relations_general(spec)
        assert (word(S(1), A(1, 2), S(1), A(1, 2)), word(A(1, 2), S(1), A(1, 2), S(1))) in rels
        assert (word(S(1), S(4)), word(S(4), S(1))) in rels

    def test_all_relation_words_are_mixed(self):
        spec = MixedBraidSpec((2, 2, 3))
        for a, b in relations_general(spec):
            a.validate(spec)
            b.validate(spec)


class TestWordText:
    def test_parse(self):
        w = parse_word("s3 s3^-1 A1,2 A1,2^-1")
        assert w == word(S(3), (S(3), -1), A(1, 2), (A(1, 2), -1))
        assert str(w) == "s3 s3^-1 A1,2 A1,2^-1"

    def test_bad_token(self):
        with pytest.raises(ValueError):
            parse_word("x1")

    def test_raw_rejects_twist(self):
        with pytest.raises(ValueError):
            parse_word("A1,2", raw=True)

    def test_validate_rejects_boundary_sigma(self):
        with pytest.raises(ValueError):
            word(S(2)).validate(MixedBraidSpec((2, 2)))


# --- properties -------------------------------------------------------------

N = 6
letters = st.tuples(st.integers(1, N - 1).map(Sigma), st.sampled_from((1, -1)))
raw_words = st.lists(letters, max_size=12).map(lambda ls: BraidWord(tuple(ls), raw=True))
SPEC6 = MixedBraidSpec((N,))


@given(raw_words, raw_words)
def test_permutation_homomorphism(u, v):
    phi = lambda w: underlying_permutation(w, SPEC6)  # noqa: E731
    assert phi(u * v) == phi(u) * phi(v)


@given(raw_words)
def test_free_reduction_keeps_permutation(w):
    r = w.free_reduce()
    assert len(r) <= len(w)
    assert underlying_permutation(r, SPEC6) == underlying_permutation(w, SPEC6)


@given(raw_words)
def test_inverse_cancels(w):
    assert (w * w.inverse()).free_reduce() == BraidWord((), raw=True)
