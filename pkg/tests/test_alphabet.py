"""Order relations, prefix classification, and word plumbing."""

from itertools import product

import pytest
from hypothesis import given, strategies as st

from lynfac.alphabet import (
    Comparison,
    Order,
    OrderedAlphabet,
    PrefixRelation,
    Word,
    lcp,
    lex_compare,
    ll_compare,
    prefix_relation,
)
from lynfac.errors import AlphabetMismatchError, EmptyWordError

from conftest import AB, ABCD


def w4(text):
    return Word(text, ABCD)


def w2(text):
    return Word(text, AB)


ab_words = st.text(alphabet="ab", max_size=8).map(w2)
ab_nonempty = st.text(alphabet="ab", min_size=1, max_size=8).map(w2)


class TestAlphabet:
    def test_rank_is_bijective(self):
        ranks = [ABCD.rank(c) for c in ABCD.symbols]
        assert sorted(ranks) == list(range(ABCD.size))

    def test_inverse_rank_mirrors_rank(self):
        for c in ABCD.symbols:
            assert ABCD.rank_inverse(c) == ABCD.size - 1 - ABCD.rank(c)

    def test_duplicate_symbol_rejected(self):
        with pytest.raises(ValueError):
            OrderedAlphabet("aba")

    def test_order_string_ranks_unlisted_bytes_after(self):
        alpha = OrderedAlphabet.from_order_string("ba")
        assert alpha.rank(ord("b")) == 0
        assert alpha.rank(ord("a")) == 1
        assert alpha.rank(0) == 2
        assert alpha.size == 256

    def test_word_membership_validated(self):
        with pytest.raises(ValueError):
            Word("abc", AB)

    def test_word_positions_are_one_indexed(self):
        w = w4("dabd")
        assert w.at(1) == ord("d")
        assert w.slice(2, 3).to_text() == "ab"
        assert w.slice(2, 1).is_empty()
        assert w.suffix_from(3).to_text() == "bd"
        with pytest.raises(IndexError):
            w.at(0)

    def test_empty_word_is_distinct(self):
        assert Word("", AB) != w2("a")
        assert len(Word("", AB)) == 0


class TestLexCompare:
    def test_prefix_is_smaller(self):
        assert lex_compare(w4("dab"), w4("dabd")) is Comparison.LESS

    def test_inverse_order_example(self):
        # under the inverse order d ranks below a, so dac comes before dabda
        assert lex_compare(w4("dac"), w4("dabda"), Order.INVERSE) is Comparison.LESS
        assert lex_compare(w4("dab"), w4("dabd"), Order.INVERSE) is Comparison.LESS

    def test_reflexive_equal(self):
        x = w4("dadac")
        assert lex_compare(x, x) is Comparison.EQUAL

    def test_mismatch_example(self):
        assert lex_compare(w2("aab"), w2("aba")) is Comparison.LESS

    def test_alphabet_mismatch_rejected(self):
        with pytest.raises(AlphabetMismatchError):
            lex_compare(w2("a"), w4("a"))


class TestStrictBelow:
    def test_first_symbols_differ(self):
        assert ll_compare(w2("aabba"), w2("ba"))

    def test_proper_prefix_excluded(self):
        assert not ll_compare(w2("a"), w2("ab"))

    def test_mismatch_inside(self):
        assert ll_compare(w4("daba"), w4("dabdab"))

    def test_empty_operand_rejected(self):
        with pytest.raises(EmptyWordError):
            ll_compare(Word("", AB), w2("a"))


class TestPrefixRelation:
    @pytest.mark.parametrize("x, y, expected", [
        ("dab", "dabdab", PrefixRelation.LEFT_PROPER_PREFIX),
        ("ab", "ba", PrefixRelation.INCOMPARABLE),
        ("bba", "b", PrefixRelation.RIGHT_PROPER_PREFIX),
        ("dab", "dab", PrefixRelation.EQUAL),
    ])
    def test_classification(self, x, y, expected):
        assert prefix_relation(w4(x), w4(y)) is expected


class TestLcp:
    def test_scan_example(self):
        assert lcp(w4("dabdab"), w4("dabdadac")).to_text() == "dabda"

    def test_self(self):
        x = w4("dadac")
        assert lcp(x, x) == x

    def test_disjoint_heads(self):
        assert lcp(w2("ab"), w2("ba")).is_empty()


class TestOrderLaws:
    """Exhaustive small-word checks of the order axioms and the inverse flip."""

    POOL = [Word(bytes(t), AB) for n in range(0, 7) for t in product(b"ab", repeat=n)]

    def test_total_order_on_small_words(self):
        for x in self.POOL:
            assert lex_compare(x, x) is Comparison.EQUAL
            for y in self.POOL:
                cmp_xy = lex_compare(x, y)
                assert cmp_xy.value == -lex_compare(y, x).value
                if cmp_xy is Comparison.EQUAL:
                    assert x == y

    def test_inverse_flip_on_incomparable_pairs(self):
        # incomparable pairs swap their order under the inverse ranking
        for x in self.POOL:
            for y in self.POOL:
                if prefix_relation(x, y) is not PrefixRelation.INCOMPARABLE:
                    continue
                normal = lex_compare(x, y)
                assert lex_compare(y, x, Order.INVERSE) is normal
                lo, hi = (x, y) if normal is Comparison.LESS else (y, x)
                assert ll_compare(lo, hi)


@given(ab_words, ab_words, ab_words)
def test_prepend_preserves_order(z, x, y):
    assert (lex_compare(x, y) is Comparison.LESS) == \
        (lex_compare(z + x, z + y) is Comparison.LESS)


@given(ab_nonempty, ab_nonempty, ab_words, ab_words)
def test_strict_below_survives_appends(x, y, u, v):
    if ll_compare(x, y):
        assert ll_compare(x + u, y + v)


@given(ab_nonempty, ab_nonempty)
def test_strict_below_never_reverses(x, y):
    if ll_compare(x, y):
        assert lex_compare(y, x) is not Comparison.LESS
