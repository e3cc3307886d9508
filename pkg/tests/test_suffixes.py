"""Suffix compatibility, global-order prediction, and the LCP bound."""

from itertools import product

import pytest

from lynfac.alphabet import Order, Word, lcp
from lynfac.errors import KindMismatchError, NotApplicableError
from lynfac.icfl import icfl
from lynfac.lyndon import cfl, is_inverse_lyndon
from lynfac.oracle import naive_max_factor_pair_lcp
from lynfac.suffixes import (
    FactorRange,
    GlobalOrder,
    SuffixRef,
    check_cfl_compatibility,
    check_icfl_inverse_compatibility,
    find_cfl_compatibility_violation,
    find_icfl_inverse_compatibility_violation,
    lcp_adjacent_suffix_reduction,
    max_adjacent_length,
    max_adjacent_pair,
    predict_global_order,
    verify_lcp_bound,
)

from conftest import AB, ABCD


def words(alpha, max_len):
    letters = bytes(alpha.symbols)
    for n in range(1, max_len + 1):
        for t in product(letters, repeat=n):
            yield Word(bytes(t), alpha)


class TestFactorRange:
    def test_positions(self):
        w = Word("dabadabdabdadac", ABCD)
        rng = FactorRange(w, icfl(w), 2, 3)
        assert rng.first_position == 5
        assert rng.last_position == 15
        assert rng.text().to_text() == "dabdabdadac"

    def test_bad_indices_rejected(self):
        w = Word("dabadabdabdadac", ABCD)
        with pytest.raises(IndexError):
            FactorRange(w, icfl(w), 2, 4)
        with pytest.raises(ValueError):
            FactorRange(Word("x"), icfl(w), 1, 1)

    def test_suffix_ref_bounds(self):
        w = Word("dabadabdabdadac", ABCD)
        rng = FactorRange(w, icfl(w), 2, 2)
        assert SuffixRef(rng, 8).local_suffix().to_text() == "dab"
        assert SuffixRef(rng, 8).global_suffix().to_text() == "dabdadac"
        with pytest.raises(IndexError):
            SuffixRef(rng, 4)


class TestCompatibility:
    def test_banana_all_ranges(self):
        w = Word("banana")
        f = cfl(w)
        for i in range(1, f.factor_count + 1):
            for h in range(i, f.factor_count + 1):
                assert check_cfl_compatibility(FactorRange(w, f, i, h))

    def test_whole_range_is_trivially_compatible(self):
        for w in (Word("dabadabdabdadac", ABCD), Word("a" * 12 + "bbab", AB)):
            f = cfl(w)
            assert check_cfl_compatibility(FactorRange(w, f, 1, f.factor_count))
            g = icfl(w)
            assert check_icfl_inverse_compatibility(FactorRange(w, g, 1, g.factor_count))

    def test_kind_mismatch_rejected(self):
        w = Word("dabadabdabdadac", ABCD)
        with pytest.raises(KindMismatchError):
            check_cfl_compatibility(FactorRange(w, icfl(w), 1, 1))
        with pytest.raises(KindMismatchError):
            check_icfl_inverse_compatibility(FactorRange(w, cfl(w), 1, 1))

    def test_every_range_in_the_sweep(self):
        for w in words(AB, 10):
            for f, finder in ((cfl(w), find_cfl_compatibility_violation),
                              (icfl(w), find_icfl_inverse_compatibility_violation)):
                for i in range(1, f.factor_count + 1):
                    for h in range(i, f.factor_count + 1):
                        assert finder(FactorRange(w, f, i, h)) is None


class TestPredictGlobalOrder:
    def test_binary_example_prefix_case(self):
        w = Word("a" * 12 + "bbab", AB)
        rng = FactorRange(w, icfl(w), 1, 1)
        # local suffix at 12 ("a") is a proper prefix of the one at 4 (a^9)
        prediction = predict_global_order(SuffixRef(rng, 12), SuffixRef(rng, 4))
        assert prediction is GlobalOrder.J2_BEFORE_J1
        assert w.suffix_from(4).key_bytes() < w.suffix_from(12).key_bytes()

    def test_d_example_prefix_case(self):
        w = Word("dabadabdabdadac", ABCD)
        rng = FactorRange(w, icfl(w), 2, 2)
        prediction = predict_global_order(SuffixRef(rng, 8), SuffixRef(rng, 5))
        assert prediction is GlobalOrder.J2_BEFORE_J1
        assert w.suffix_from(5).key_bytes() < w.suffix_from(8).key_bytes()

    def test_d_example_mismatch_case(self):
        w = Word("dabadabdabdadac", ABCD)
        rng = FactorRange(w, icfl(w), 2, 2)
        prediction = predict_global_order(SuffixRef(rng, 9), SuffixRef(rng, 8))
        assert prediction is GlobalOrder.J1_BEFORE_J2
        assert w.suffix_from(9).key_bytes() < w.suffix_from(8).key_bytes()

    def test_unoriented_pair_rejected(self):
        w = Word("dabadabdabdadac", ABCD)
        rng = FactorRange(w, icfl(w), 2, 2)
        with pytest.raises(ValueError):
            predict_global_order(SuffixRef(rng, 5), SuffixRef(rng, 8))
        with pytest.raises(ValueError):
            predict_global_order(SuffixRef(rng, 5), SuffixRef(rng, 5))

    def test_matches_actual_order_across_the_sweep(self):
        for w in words(AB, 10):
            if is_inverse_lyndon(w):
                continue
            f = icfl(w)
            key = w.key_bytes(Order.NORMAL)
            for i in range(1, f.factor_count + 1):
                for h in range(i, f.factor_count + 1):
                    rng = FactorRange(w, f, i, h)
                    last = rng.last_position
                    positions = list(rng.positions())
                    for x in positions:
                        for y in positions:
                            if x == y or not key[x - 1:last] < key[y - 1:last]:
                                continue
                            predicted = predict_global_order(
                                SuffixRef(rng, x), SuffixRef(rng, y))
                            actual = (GlobalOrder.J1_BEFORE_J2
                                      if key[x - 1:] < key[y - 1:]
                                      else GlobalOrder.J2_BEFORE_J1)
                            assert predicted is actual


class TestMaxAdjacentLength:
    def test_d_example(self):
        f = icfl(Word("dabadabdabdadac", ABCD))
        assert max_adjacent_pair(f) == (11, 2)

    def test_binary_example(self):
        assert max_adjacent_length(icfl(Word("a" * 12 + "bbab", AB))) == 16

    def test_two_single_symbol_factors(self):
        assert max_adjacent_length(icfl(Word("ab", AB))) == 2

    def test_single_factor_rejected(self):
        with pytest.raises(NotApplicableError):
            max_adjacent_length(icfl(Word("bbaba", AB)))


class TestLcpBound:
    def test_d_example_bound(self):
        report = verify_lcp_bound(Word("dabadabdabdadac", ABCD))
        assert report.m_bound == 11
        assert report.method == "exhaustive"
        assert report.holds
        naive_best, _ = naive_max_factor_pair_lcp(Word("dabadabdabdadac", ABCD))
        assert report.max_observed_lcp == naive_best == 5

    def test_binary_example_bound_is_whole_word(self):
        report = verify_lcp_bound(Word("a" * 12 + "bbab", AB))
        assert report.m_bound == 16
        assert report.holds

    def test_equal_factor_occurrences_count(self):
        # "dab" occurs at 5 and 8: a same-string pair with lcp 3 <= M
        w = Word("dabadabdabdadac", ABCD)
        assert lcp(w.slice(5, 7), w.slice(8, 10)).to_text() == "dab"
        assert 3 <= verify_lcp_bound(w).m_bound

    def test_inverse_lyndon_word_rejected(self):
        with pytest.raises(NotApplicableError):
            verify_lcp_bound(Word("bbaba", AB))

    def test_matches_literal_occurrence_enumeration(self):
        for w in words(AB, 9):
            if is_inverse_lyndon(w):
                continue
            report = verify_lcp_bound(w)
            naive_best, witness = naive_max_factor_pair_lcp(w)
            assert report.max_observed_lcp == naive_best, (w, witness)
            assert report.holds

    def test_suffix_pair_method_agrees_with_exhaustive(self):
        base = (b"ab" * 40 + b"aab" * 20)  # length 140 > exhaustive cutoff
        w = Word(base, AB)
        report = verify_lcp_bound(w)
        assert report.method == "suffix-pairs"
        from lynfac.suffixes import _start_pair_max

        n = len(base)
        pairs = ((i1, i2) for i1 in range(1, n + 1) for i2 in range(i1 + 1, n + 1))
        best, _ = _start_pair_max(base, pairs)
        assert report.max_observed_lcp == best
        assert report.holds

    def test_sampled_method_for_large_inputs(self):
        data = (b"aab" * 2000 + b"b")  # length 6001 > suffix-pair cutoff
        report = verify_lcp_bound(Word(data, AB))
        assert report.method == "sampled"
        assert report.holds

    def test_witness_pair_realizes_the_maximum(self):
        for text in ("dabadabdabdadac",):
            w = Word(text, ABCD)
            report = verify_lcp_bound(w)
            (s1, e1), (s2, e2) = report.witness_pair
            assert s1 != s2
            u, v = w.slice(s1, e1), w.slice(s2, e2)
            assert len(lcp(u, v)) == report.max_observed_lcp


class TestSuffixReduction:
    def test_worked_example(self):
        f = icfl(Word("dabadabdabdadac", ABCD))
        x, y = Word("a", ABCD), Word("aba", ABCD)
        assert lcp_adjacent_suffix_reduction(x, y, f, 2).to_text() == "a"

    def test_different_first_symbols_give_empty(self):
        f = icfl(Word("dabadabdabdadac", ABCD))
        x, y = Word("ba", ABCD), Word("aba", ABCD)
        assert lcp_adjacent_suffix_reduction(x, y, f, 2).is_empty()

    def test_argument_validation(self):
        f = icfl(Word("dabadabdabdadac", ABCD))
        a = Word("a", ABCD)
        with pytest.raises(ValueError):
            lcp_adjacent_suffix_reduction(a, a, f, 2)
        with pytest.raises(IndexError):
            lcp_adjacent_suffix_reduction(a, Word("ba", ABCD), f, 4)
        with pytest.raises(ValueError):
            lcp_adjacent_suffix_reduction(Word("d", ABCD), Word("ad", ABCD), f, 2)

    def test_equality_holds_across_the_sweep(self):
        # the reduction asserts the equality internally; exercise it broadly
        for w in words(AB, 10):
            f = icfl(w)
            for i in range(2, f.factor_count + 1):
                prev = f.factor(i - 1)
                suffixes = [prev.suffix_from(t) for t in range(1, len(prev) + 1)]
                for x in suffixes:
                    for y in suffixes:
                        if x != y:
                            lcp_adjacent_suffix_reduction(x, y, f, i)
