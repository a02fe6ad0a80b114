import math
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import unit_surds
from jimm.cf import ContinuedFraction, DomainError
from jimm.core import is_noble, jimm_surd, surd_cf
from jimm.dynamics import (
    cutoff_for,
    density,
    farey_conjugacy_check,
    farey_map,
    gauss_conjugacy_check,
    gauss_map,
    inverse_branch,
    invariant_measure_residual,
    iterate,
    measure_mass,
    t_jimm,
)
from jimm.surd import QuadSurd

SQRT2 = QuadSurd.sqrt(2)


def P(pre, per):
    return ContinuedFraction.periodic(pre, per).value()


class TestMaps:
    def test_gauss_shift(self):
        assert gauss_map(SQRT2 - 1) == SQRT2 - 1
        assert gauss_map(Fraction(3, 7)) == Fraction(1, 3)
        with pytest.raises(DomainError):
            gauss_map(Fraction(0))

    def test_gauss_on_cf(self):
        cf = ContinuedFraction.periodic([0, 3, 5], [2])
        assert gauss_map(cf) == ContinuedFraction.periodic([0, 5], [2])

    def test_farey_branches(self):
        assert farey_map(Fraction(1, 3), with_branch=True) == (Fraction(1, 2), "low")
        assert farey_map(Fraction(2, 3), with_branch=True) == (Fraction(1, 2), "high")
        assert farey_map(Fraction(1, 2), with_branch=True) == (1, "high")

    def test_t_jimm_example(self):
        assert t_jimm(P([0, 1, 1, 3], [2])) == P([0], [2])

    def test_t_jimm_on_stream(self):
        cf = ContinuedFraction.stream(lambda: iter([0, 1, 1, 4, 7, 9, 9, 9]))
        assert t_jimm(cf).prefix(5) == [0, 3, 7, 9, 9]

    def test_t_jimm_refuses_nobles(self):
        with pytest.raises(DomainError):
            t_jimm(P([0], [1]))

    @given(st.integers(0, 12), unit_surds())
    def test_inverse_branches(self, k, y):
        if y == 0 or is_noble(y):
            return
        assert t_jimm(inverse_branch(k, y)) == y

    def test_iterate(self):
        orbit = iterate("gauss", SQRT2 - 1, 3)
        assert orbit == [SQRT2 - 1] * 4


class TestConjugacy:
    def test_example(self):
        assert gauss_conjugacy_check(P([0, 2], [2]))

    @given(unit_surds())
    def test_gauss_conjugacy(self, x):
        if x == 0 or is_noble(x):
            return
        jx = jimm_surd(x)
        if not isinstance(jx, QuadSurd) or not 0 < jx < 1:
            return
        assert gauss_conjugacy_check(x)

    def test_farey_branch_labels_swap(self):
        r = farey_conjugacy_check(SQRT2 - 1)
        assert r.equal
        assert (r.branch_x, r.branch_jx) == ("low", "high")
        r = farey_conjugacy_check(SQRT2 / 2)
        assert (r.branch_x, r.branch_jx) == ("high", "low")

    @given(unit_surds())
    def test_farey_conjugacy(self, x):
        if x == 0:
            return
        r = farey_conjugacy_check(x)
        if r is not None:
            assert r.equal and r.branch_x != r.branch_jx


class TestInvariantMeasure:
    @pytest.mark.parametrize("k", range(1, 51))
    def test_residual(self, k):
        r = invariant_measure_residual(Fraction(k, 51), K=40)
        assert r.total < 1e-10

    def test_tail_bound_dominates_next_terms(self):
        # the omitted terms beyond K really are below the bound
        lo = invariant_measure_residual(Fraction(1, 3), K=10)
        hi = invariant_measure_residual(Fraction(1, 3), K=60)
        assert lo.residual - hi.residual <= lo.tail_bound

    def test_cutoff(self):
        k = cutoff_for(1e-12)
        assert invariant_measure_residual(Fraction(1, 2), K=k).tail_bound < 1e-12

    def test_infinite_mass(self):
        assert measure_mass(Fraction(1, 10)) == pytest.approx(math.log(5.5))
        assert measure_mass(Fraction(1, 10**6)) > measure_mass(Fraction(1, 10**3))

    def test_density(self):
        assert density(Fraction(1)) == Fraction(1, 2)


def test_t_jimm_matches_cf_description():
    x = P([0, 1, 1, 1, 6, 2], [3, 1])
    assert surd_cf(t_jimm(x)) == ContinuedFraction.periodic([0, 5, 2], [3, 1])
