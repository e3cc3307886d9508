"""Lyndon predicates, Duval factorization, prenecklace machinery.

Expected factorizations tagged as derived are recomputed through the
greedy oracle inside the test, then compared against the frozen values,
so a drifting oracle or fast path both trip the assertion.
"""

from itertools import product

import pytest

from lynfac.alphabet import Order, Word
from lynfac.errors import EmptyWordError
from lynfac.lyndon import (
    Factorization,
    FactorizationKind,
    cfl,
    is_inverse_lyndon,
    is_lyndon,
    is_prenecklace,
    longest_lyndon_prefix,
    sesquipower_form,
)
from lynfac.oracle import (
    naive_borders,
    naive_cfl,
    naive_sesquipower_candidates,
    naive_suffix_sort,
)

from conftest import AB, ABC, ABCD


def words(alpha, max_len, min_len=1):
    letters = bytes(alpha.symbols)
    for n in range(min_len, max_len + 1):
        for t in product(letters, repeat=n):
            yield Word(bytes(t), alpha)


class TestIsLyndon:
    @pytest.mark.parametrize("text", ["a", "b", "aaab", "abbb", "aabab", "aababaabb"])
    def test_known_lyndon_words(self, text):
        assert is_lyndon(Word(text, AB))

    @pytest.mark.parametrize("text", ["abab", "aba", "abaab"])
    def test_known_non_lyndon_words(self, text):
        assert not is_lyndon(Word(text, AB))

    def test_bordered_word_is_not_anti_lyndon(self):
        assert not is_lyndon(Word("bab", AB), Order.INVERSE)

    def test_single_letter(self):
        assert is_lyndon(Word("a", AB))

    def test_empty_rejected(self):
        with pytest.raises(EmptyWordError):
            is_lyndon(Word("", AB))


class TestIsInverseLyndon:
    @pytest.mark.parametrize("text", ["a", "b", "aaaaa", "bbba", "baaab", "bbaba",
                                      "bbababbaa"])
    def test_known_inverse_lyndon_words(self, text):
        assert is_inverse_lyndon(Word(text, AB))

    @pytest.mark.parametrize("text", ["aaba", "aabba"])
    def test_suffix_dominates(self, text):
        assert not is_inverse_lyndon(Word(text, AB))

    def test_agrees_with_anti_prenecklace(self):
        for w in words(AB, 10):
            assert is_inverse_lyndon(w) == is_prenecklace(w, Order.INVERSE)


class TestCfl:
    def test_lyndon_word_is_a_single_factor(self):
        f = cfl(Word("aababaabb", AB))
        assert [x.to_text() for x in f.factors] == ["aababaabb"]

    def test_inverse_factorization_d_example(self):
        w = Word("dabadabdabdadac", ABCD)
        expected = ["daba", "dab", "dab", "dadac"]
        assert [x.to_text() for x in naive_cfl(w, Order.INVERSE).factors] == expected
        assert [x.to_text() for x in cfl(w, Order.INVERSE).factors] == expected

    def test_inverse_factorization_binary_example(self):
        w = Word("a" * 12 + "bbab", AB)
        expected = ["a"] * 12 + ["bba", "b"]
        assert [x.to_text() for x in naive_cfl(w, Order.INVERSE).factors] == expected
        assert [x.to_text() for x in cfl(w, Order.INVERSE).factors] == expected

    def test_banana(self):
        # anan is a square, hence not Lyndon: the factors stay atomic
        w = Word("banana")
        expected = ["b", "an", "an", "a"]
        assert [x.to_text() for x in naive_cfl(w).factors] == expected
        assert [x.to_text() for x in cfl(w).factors] == expected

    def test_matches_oracle_small(self):
        for w in words(AB, 10):
            for order in (Order.NORMAL, Order.INVERSE):
                assert cfl(w, order).cuts == naive_cfl(w, order).cuts

    def test_factors_validate(self):
        for w in words(ABC, 6):
            assert cfl(w).validate() == []
            assert cfl(w, Order.INVERSE).validate() == []

    def test_slice_of_factors_refactors_to_itself(self):
        for w in words(AB, 10):
            f = cfl(w)
            k = f.factor_count
            for i in range(1, k + 1):
                for j in range(i, k + 1):
                    piece = w.slice(f.bounds[i - 1][0], f.bounds[j - 1][1])
                    assert cfl(piece).factors == f.factors[i - 1:j]

    def test_last_factor_is_smallest_suffix(self):
        for w in words(AB, 10):
            f = cfl(w)
            smallest = naive_suffix_sort(w)[0]
            assert f.factors[-1].data == w.data[smallest - 1:]

    def test_lyndon_factors_are_unbordered(self):
        for w in words(AB, 10):
            for factor in cfl(w).factors:
                assert naive_borders(factor) == []

    def test_empty_rejected(self):
        with pytest.raises(EmptyWordError):
            cfl(Word("", AB))


class TestLongestLyndonPrefix:
    def test_abab(self):
        assert longest_lyndon_prefix(Word("abab", AB)).to_text() == "ab"

    def test_lyndon_word_is_its_own_prefix(self):
        w = Word("aabab", AB)
        assert longest_lyndon_prefix(w) == w

    def test_inverse_order(self):
        assert longest_lyndon_prefix(Word("bbab", AB), Order.INVERSE).to_text() == "bba"

    def test_equals_first_cfl_factor(self):
        for w in words(ABC, 7):
            for order in (Order.NORMAL, Order.INVERSE):
                assert longest_lyndon_prefix(w, order) == cfl(w, order).factor(1)


class TestPrenecklace:
    def test_prefix_of_a_power(self):
        assert is_prenecklace(Word("aabaa", AB))

    def test_anti_prenecklace(self):
        assert is_prenecklace(Word("bbaba", AB), Order.INVERSE)

    def test_descending_pair_fails(self):
        assert not is_prenecklace(Word("ba", AB))

    def test_empty_is_prenecklace_by_convention(self):
        assert is_prenecklace(Word("", AB))

    def test_prefix_closure(self):
        for w in words(AB, 10):
            if is_prenecklace(w):
                for i in range(1, len(w)):
                    assert is_prenecklace(w.prefix(i))


class TestSesquipowerForm:
    def test_partial_repetition(self):
        form = sesquipower_form(Word("aabaa", AB))
        assert (form.base.to_text(), form.repetitions, form.residue.to_text()) \
            == ("aab", 1, "aa")

    def test_lyndon_word_trivial_form(self):
        w = Word("aabab", AB)
        form = sesquipower_form(w)
        assert form.base == w and form.repetitions == 1 and form.residue.is_empty()

    def test_inverse_order_form(self):
        form = sesquipower_form(Word("dabdabda", ABCD), Order.INVERSE)
        assert (form.base.to_text(), form.repetitions, form.residue.to_text()) \
            == ("dab", 2, "da")

    def test_non_prenecklace_rejected(self):
        with pytest.raises(ValueError):
            sesquipower_form(Word("ba", AB))

    def test_form_is_the_unique_oracle_candidate(self):
        for w in words(AB, 10):
            for order in (Order.NORMAL, Order.INVERSE):
                if not is_prenecklace(w, order):
                    continue
                form = sesquipower_form(w, order)
                assert form.rebuild() == w
                assert len(form.residue) < len(form.base)
                candidates = naive_sesquipower_candidates(w, order)
                assert (form.base, form.repetitions, form.residue) in candidates
                assert len(candidates) == 1


class TestFactorizationType:
    def test_bounds_and_exponents(self):
        w = Word("dabadabdabdadac", ABCD)
        f = cfl(w, Order.INVERSE)
        assert f.bounds == ((1, 4), (5, 7), (8, 10), (11, 15))
        assert [(b.to_text(), n) for b, n in f.exponent_form()] \
            == [("daba", 1), ("dab", 2), ("dadac", 1)]
        assert f.factor(2).to_text() == "dab"
        with pytest.raises(IndexError):
            f.factor(5)

    def test_validate_flags_noncanonical_splits(self):
        w = Word("ab", AB)
        increasing = Factorization(w, (1, 2), FactorizationKind.CFL)
        assert increasing.validate()  # a before b is increasing, not allowed
        bad_cover = Factorization(w, (1,), FactorizationKind.CFL)
        assert bad_cover.validate()

    def test_anti_lyndon_equivalence(self):
        # anti-Lyndon words are exactly the unbordered inverse Lyndon words
        for w in words(AB, 10):
            anti = is_lyndon(w, Order.INVERSE)
            assert anti == (is_inverse_lyndon(w) and not naive_borders(w))

    def test_anti_lyndon_suffixes_sit_strictly_below(self):
        from lynfac.alphabet import ll_compare

        for w in words(AB, 10):
            if not is_lyndon(w, Order.INVERSE):
                continue
            for i in range(2, len(w) + 1):
                assert ll_compare(w.suffix_from(i), w)
