import functools
import itertools
import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import unit_surds
from jimm.boundary import is_unimodular_pair, number_to_word
from jimm.core import jimm_surd
from jimm.matrix import mobius_apply
from jimm.surd import INF, QuadSurd
from jimm.tree import (
    box_graph,
    box_graph_csv,
    box_graph_svg,
    compose,
    count_automorphisms,
    jimm_approximant,
    jimm_tree_action,
    shuffle,
    shuffle_set,
    twist,
    vertices_up_to,
)

MAX_BITS = 12
bit_words = st.lists(st.integers(0, 1), max_size=MAX_BITS).map(tuple)
BELOW_ZERO = [(0,) + u for k in range(MAX_BITS) for u in itertools.product((0, 1), repeat=k)]
ODD_VERTICES = [v for v in vertices_up_to(MAX_BITS) if len(v) % 2 == 1]


@functools.lru_cache(maxsize=None)
def approximant(n, merge=True):
    return jimm_approximant(n, merge=merge)


class TestActions:
    def test_shuffle_at_root(self):
        s = shuffle(())
        assert s((0, 1, 1)) == (1, 1, 1)
        assert s((1, 0)) == (0, 0)

    def test_shuffle_elsewhere_is_identity(self):
        s = shuffle((0, 1))
        assert s((1, 1, 0)) == (1, 1, 0)
        assert s((0, 1, 0, 0)) == (0, 1, 1, 0)

    def test_twist_flips_the_branch(self):
        t = twist((1,))
        assert t((1, 0, 0, 1)) == (1, 1, 1, 0)
        assert t((0, 0, 1)) == (0, 0, 1)

    @given(bit_words)
    def test_twist_is_shuffle_of_all_descendants(self, w):
        assert twist((0,))(w) == shuffle_set(BELOW_ZERO)(w)

    @given(bit_words)
    def test_shuffles_are_involutions(self, w):
        for v in [(), (0,), (1, 0)]:
            assert shuffle(v)(shuffle(v)(w)) == w

    @given(bit_words)
    def test_jimm_is_shuffle_at_odd_depths(self, w):
        assert jimm_tree_action(w) == shuffle_set(ODD_VERTICES)(w)

    @given(bit_words)
    def test_jimm_commutes_with_negation(self, w):
        neg = lambda u: tuple(1 - b for b in u)  # noqa: E731
        assert jimm_tree_action(neg(w)) == neg(jimm_tree_action(w))

    def test_compose_order(self):
        f = compose(twist(()), shuffle(()))
        assert f((0, 0)) == twist(())(shuffle(())((0, 0)))


class TestAutomorphismCount:
    @pytest.mark.parametrize("depth", range(1, 9))
    def test_order_is_two_to_the_vertices(self, depth):
        assert count_automorphisms(depth) == 2 ** len(vertices_up_to(depth))

    def test_depth_limit(self):
        with pytest.raises(ValueError):
            count_automorphisms(13)


class TestApproximants:
    def test_piece_counts(self):
        counts = [len(jimm_approximant(n)) for n in range(1, 11)]
        assert counts == [1, 2, 2, 8, 8, 32, 32, 128, 128, 512]

    def test_depth_three_boxes(self):
        assert box_graph(3) == [
            (Fraction(0), Fraction(1, 2), Fraction(1, 2), Fraction(1)),
            (Fraction(1, 2), Fraction(1), Fraction(0), Fraction(1, 2)),
        ]

    def test_sqrt2_minus_one(self):
        x = QuadSurd.sqrt(2) - 1
        piece = jimm_approximant(8).piece_at(x)
        assert piece.image.contains(jimm_surd(x))
        assert (piece.image.lo, piece.image.hi) == (Fraction(12, 17), Fraction(17, 24))

    @pytest.mark.parametrize("n", range(1, 11))
    def test_pieces_are_unimodular_and_tile(self, n):
        pieces = jimm_approximant(n, "0:inf").pieces
        assert pieces[0].domain.lo == 0 and pieces[-1].domain.hi is INF
        for a, b in zip(pieces, pieces[1:]):
            assert a.domain.hi == b.domain.lo
        for p in pieces:
            assert is_unimodular_pair(p.domain.lo, p.domain.hi)
            assert is_unimodular_pair(p.image.lo, p.image.hi)
            assert abs(p.matrix.det()) == 1

    @pytest.mark.parametrize("n", range(1, 11))
    def test_soundness_on_samples(self, n):
        rng = random.Random(f"boxes:{n}")
        approx = jimm_approximant(n)
        for _ in range(1000):
            x = Fraction(rng.getrandbits(40) | 1, 1 << 40)
            piece = approx.piece_at(x)
            assert piece.image.contains(mobius_apply(piece.matrix, x))

    @given(unit_surds())
    def test_soundness_on_surds(self, x):
        if x == 0:
            return
        for n in (2, 5, 9):
            piece = approximant(n).piece_at(x)
            assert piece.image.contains(jimm_surd(x))

    @given(unit_surds())
    def test_piece_matches_xor_prefix(self, x):
        if x == 0:
            return
        # the piece containing x maps x as XOR maps its first 6 bits
        w = number_to_word(x).prefix(6)
        piece = approximant(6, merge=False).piece_at(x)
        y = mobius_apply(piece.matrix, x)
        assert number_to_word(y).prefix(6) == tuple(b ^ (i & 1) for i, b in enumerate(w))


class TestOutput:
    def test_csv_header_and_exact_values(self):
        text = box_graph_csv(4)
        lines = text.strip().splitlines()
        assert lines[0] == "x_lo,x_hi,y_lo,y_hi"
        assert len(lines) == 1 + 8
        assert "/" in text

    def test_csv_unbounded_domain(self):
        assert box_graph_csv(2, "0:inf").strip().splitlines()[-1].split(",")[1] == "inf"

    def test_svg(self):
        svg = box_graph_svg(5)
        assert svg.startswith("<svg") and svg.count("<rect") == 1 + len(box_graph(5))
