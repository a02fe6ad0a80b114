import random
from fractions import Fraction

import pytest

from jimm.cf import ContinuedFraction, DomainError
from jimm.experiments import (
    ExperimentConfig,
    beatty_duality,
    beatty_set,
    density_of_ones,
    derivative_probe,
    gauss_kuzmin_freq,
    gauss_kuzmin_law,
    gauss_kuzmin_quotient,
    integral_symmetry,
    is_partition,
    ones_density,
)
from jimm.surd import QuadSurd


class TestSampling:
    def test_config_validation(self):
        with pytest.raises(ValueError):
            ExperimentConfig(samples=0)

    def test_deterministic(self):
        cfg = ExperimentConfig(seed=3, samples=20, depth=200)
        assert density_of_ones(cfg) == density_of_ones(cfg)

    def test_gauss_kuzmin_quotients(self):
        rng = random.Random("gk")
        draws = [gauss_kuzmin_quotient(rng) for _ in range(20000)]
        assert min(draws) >= 1
        freq1 = draws.count(1) / len(draws)
        assert abs(freq1 - gauss_kuzmin_law(1)) < 0.02

    def test_law_sums_to_one(self):
        assert sum(gauss_kuzmin_law(k) for k in range(1, 20000)) == pytest.approx(1, abs=1e-4)


class TestDensity:
    def test_counts(self):
        # [2,2,2] -> 1,2,2 and [5,5,5,5] -> 1_4,2,1_3,2,1_3,2,1_3
        assert ones_density([2, 2, 2]) == (1, 3)
        assert ones_density([5, 5, 5, 5]) == (13, 16)

    def test_report_shape(self):
        rep = density_of_ones(ExperimentConfig(samples=10, depth=300))
        assert rep["gate"] == "soft"
        assert rep["ci95"][0] <= rep["mean"] <= rep["ci95"][1]
        assert 0 <= rep["min"] <= rep["mean"] <= rep["max"] <= 1


class TestDerivative:
    def test_probe_fields(self):
        a = ContinuedFraction.periodic([0], [5]).value()
        pr = derivative_probe(a, ks=[4, 8])
        assert len(pr.offsets) == len(pr.slopes) == 4
        assert all(h != 0 for h in pr.offsets)
        assert all(s >= 0 for s in pr.slopes)
        assert pr.N_k[:3] == [5, 10, 15]
        assert pr.mu_k[0] == 5

    def test_slope_shrinks_at_constant_five(self):
        a = ContinuedFraction.periodic([0], [5]).value()
        pr = derivative_probe(a, ks=[4, 12])
        assert max(pr.slopes[2:]) < 1e-3
        assert max(pr.slopes[2:]) < max(pr.slopes[:2])

    def test_rational_refused(self):
        with pytest.raises(DomainError):
            derivative_probe(Fraction(1, 3), ks=[4])

    def test_noble_refused(self):
        with pytest.raises(DomainError):
            derivative_probe(QuadSurd(1, 1, 5, 2), ks=[4])


class TestIntegral:
    def test_antithetic_pairs_are_exact(self):
        rep = integral_symmetry(ExperimentConfig(samples=200))
        assert rep["antithetic_max_pair_error"] < 1e-12
        assert abs(rep["estimate"] - 0.5) < 5 * rep["stderr"] + 1e-9


class TestGaussKuzmin:
    def test_table(self):
        rep = gauss_kuzmin_freq(ExperimentConfig(samples=20, depth=500), kmax=5)
        rows = rep["table"]
        assert [r["k"] for r in rows] == [1, 2, 3, 4, 5]
        assert abs(rows[0]["sample"] - rows[0]["law"]) < 0.03
        assert rows[0]["jimm"] > 0.9


class TestBeatty:
    def test_sets(self):
        assert beatty_set(QuadSurd.sqrt(2), 10) == [1, 2, 4, 5, 7, 8, 9]
        assert is_partition(QuadSurd.sqrt(2), 2 + QuadSurd.sqrt(2), 1000)
        assert not is_partition(QuadSurd.sqrt(2), QuadSurd.sqrt(3), 100)

    @pytest.mark.parametrize("x", [QuadSurd(0, 1, 2), QuadSurd(2, 1, 3), QuadSurd(5, 1, 10, 3)])
    def test_duality(self, x):
        rep = beatty_duality(x, 2000)
        assert rep["partition"] and rep["harmonic"] and rep["dual_partition"]

    def test_sqrt2_dual_pair(self):
        rep = beatty_duality(QuadSurd.sqrt(2), 100)
        assert rep["jimm_x"] == str(1 + QuadSurd.sqrt(2))
        assert rep["jimm_y"] == str((2 + QuadSurd.sqrt(2)) / 2)

    def test_domain(self):
        with pytest.raises(DomainError):
            beatty_duality(QuadSurd(1, 1, 5, 2) + 1, 100)  # noble
        with pytest.raises(DomainError):
            beatty_duality(QuadSurd.sqrt(2) - 1, 100)  # below 1
