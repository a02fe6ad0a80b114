from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import nonzero_rationals, surds
from jimm.boundary import (
    PHI_WORD,
    BoundaryWord,
    FareyInterval,
    cf_to_word,
    interval_of_prefix,
    number_to_word,
    rational_two_words,
    word_cmp,
    word_to_cf,
    word_value,
    xor_words,
)
from jimm.cf import ContinuedFraction
from jimm.core import surd_cf
from jimm.surd import INF, QuadSurd


def W(text):
    return BoundaryWord.parse(text)


class TestLiterals:
    @pytest.mark.parametrize("text", ["0110(01)", "-10(011)", "001...", "1...", "-0..."])
    def test_round_trip(self, text):
        assert str(W(text)) == text

    def test_canonical_tail(self):
        assert W("0(10)") == W("(01)")
        assert W("11(1)") == W("1...")
        assert W("(0101)") == W("(01)")

    def test_bad_literal(self):
        with pytest.raises(ValueError):
            W("012")


class TestWordsOfNumbers:
    def test_golden_section(self):
        assert cf_to_word(ContinuedFraction.periodic([], [1])) == PHI_WORD

    def test_sqrt2(self):
        # [1; 2, 2, ...] -> 0 11 00 11 ...
        assert number_to_word(QuadSurd.sqrt(2)) == W("0(1100)")

    def test_negative_uses_s_prefix(self):
        w = number_to_word(-QuadSurd.sqrt(2))
        assert w.neg
        assert word_value(w) == -QuadSurd.sqrt(2)

    def test_two_words_of_two(self):
        below, above = rational_two_words(2)
        assert str(below) == "010..."
        assert str(above) == "001..."
        assert word_value(below) == 2 and word_value(above) == 2

    def test_two_words_of_zero(self):
        below, above = rational_two_words(0)
        assert str(below) == "-0..."
        assert str(above) == "1..."

    @given(nonzero_rationals)
    def test_rational_words_straddle(self, q):
        below, above = rational_two_words(q)
        assert below != above
        assert word_value(below) == q == word_value(above)
        assert word_cmp(below, above) < 0

    @given(surds())
    def test_value_round_trip(self, x):
        w = number_to_word(x)
        assert word_value(w) == x
        assert word_to_cf(w) == surd_cf(x)

    @given(surds(), surds())
    def test_order_matches_values(self, x, y):
        c = word_cmp(number_to_word(x), number_to_word(y))
        assert c == (x > y) - (x < y)


class TestXor:
    def test_xor_is_an_involution(self):
        w = W("0110(001)")
        assert xor_words(xor_words(w, PHI_WORD), PHI_WORD) == w

    def test_xor_with_phi_of_golden_section(self):
        assert xor_words(PHI_WORD, PHI_WORD) == W("0...")
        assert word_value(W("0...")) is INF

    @given(st.lists(st.integers(0, 1), max_size=8), st.lists(st.integers(0, 1), min_size=1, max_size=5))
    def test_xor_period_length(self, head, per):
        w = BoundaryWord(False, tuple(head), tuple(per))
        out = xor_words(w, PHI_WORD)
        for i in range(40):
            assert out.bit(i) == w.bit(i) ^ (i & 1)


class TestFareyIntervals:
    def test_prefix_intervals(self):
        assert interval_of_prefix(()) == FareyInterval(Fraction(0), INF)
        assert interval_of_prefix((1,)) == FareyInterval(Fraction(0), Fraction(1))
        assert interval_of_prefix((1, 0)) == FareyInterval(Fraction(1, 2), Fraction(1))

    def test_non_unimodular_rejected(self):
        with pytest.raises(ValueError):
            FareyInterval(Fraction(0), Fraction(2, 3))

    @given(st.lists(st.integers(0, 1), max_size=14))
    def test_children_split_the_parent(self, head):
        parent = interval_of_prefix(tuple(head))
        upper = interval_of_prefix(tuple(head) + (0,))
        lower = interval_of_prefix(tuple(head) + (1,))
        assert lower.lo == parent.lo and upper.hi == parent.hi
        assert lower.hi == upper.lo  # the mediant

    @given(surds())
    def test_prefix_interval_contains_point(self, x):
        if x <= 0:
            return
        w = number_to_word(x)
        for n in (1, 5, 12):
            assert interval_of_prefix(w.prefix(n)).contains(x)
