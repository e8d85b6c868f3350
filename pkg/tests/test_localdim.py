import math

import numpy as np
import pytest

from wiener_arcs import (CertificateError, CosineDensity, DegenerateSignalError,
                         MeasureValidationError, ball_measure, example_measure,
                         local_dimension, make_provider, parse_measure)
from wiener_arcs.localdim import hypothesis_sum
from wiener_arcs.oracle import oracle_arc


def provider(text):
    return make_provider(parse_measure(text))


def density_ball(coeffs, x, r):
    """Exact antiderivative of 1 + sum a_k cos(2 pi k t) over [x - r, x + r)."""
    return 2 * r + sum(a * (math.sin(2 * math.pi * k * (x + r)) - math.sin(2 * math.pi * k * (x - r)))
                       / (2 * math.pi * k) for k, a in enumerate(coeffs, start=1))


class TestBallMeasure:
    def test_lebesgue(self):
        assert ball_measure(provider("lebesgue"), 0.5, 0.01, 10) == pytest.approx(0.02, abs=1e-16)

    def test_density(self):
        value = ball_measure(provider("density(0.4)"), 0.5, 0.01, 1000)
        exact = density_ball([0.4], 0.5, 0.01)
        assert exact == pytest.approx(0.0120053, abs=1e-7)
        assert value == pytest.approx(exact, abs=1e-12)

    def test_cantor_gap(self):
        assert abs(ball_measure(provider("cantor"), 0.5, 1 / 6, 10**5)) < 5e-3

    def test_against_oracle(self, rng):
        spec = parse_measure("density(0.4, 0.1)")
        p = make_provider(spec)
        for x in rng.uniform(0.1, 0.9, 20):
            r = 0.05
            assert ball_measure(p, x, r, 1000) == pytest.approx(oracle_arc(spec, x - r, x + r), abs=1e-12)

    def test_errors(self):
        with pytest.raises(CertificateError):
            ball_measure(provider("dirac(0.5)"), 0.5, 0.1)
        with pytest.raises(ValueError):
            ball_measure(provider("lebesgue"), 0.1, 0.2)
        with pytest.raises(ValueError):
            ball_measure(provider("lebesgue"), 0.5, 0.0)


class TestLocalDimension:
    def test_lebesgue_slope(self):
        fit = local_dimension(provider("lebesgue"), 0.3, 0.1, 1e-3, 10, 1000)
        assert fit.slope == pytest.approx(1.0, abs=1e-9)
        assert fit.hypothesis_sum == 0.0
        assert fit.hypothesis_met

    def test_density_example(self):
        fit = local_dimension(provider("density(0.4, 0.1)"), 0.3, 0.1, 1e-3, 10, 1000)
        assert 0.97 <= fit.slope <= 1.03
        assert fit.hypothesis_sum == pytest.approx(0.25, abs=1e-15)
        assert fit.hypothesis_met

    @pytest.mark.parametrize("x", [0.2, 0.5, 0.8])
    def test_desk_scale(self, x):
        fit = local_dimension(provider("density(0.4, 0.1)"), x, 0.1, 1e-3, 10, 10**4)
        assert 0.95 <= fit.slope <= 1.05
        assert max(fit.correction_ratios) <= 2 * fit.hypothesis_sum < 1

    @pytest.mark.parametrize("text", ["density(0.4, 0.1)", "density(0.5, 0.3)", "density(0.2, -0.1, 0.05)"])
    @pytest.mark.parametrize("x", [0.2, 0.5, 0.8])
    def test_refinement_invariance(self, text, x):
        coarse = local_dimension(provider(text), x, 0.1, 1e-3, 10, 10**4)
        fine = local_dimension(provider(text), x, 0.1, 1e-3, 20, 10**4)
        assert abs(coarse.slope - fine.slope) < 0.01

    @pytest.mark.parametrize("text", ["density(0.5, 0.3)", "density(0.2, -0.1, 0.05)", "density(0.3)"])
    def test_bound_chain(self, text):
        fit = local_dimension(provider(text), 0.37, 0.1, 1e-3, 10, 10**4)
        assert fit.hypothesis_met
        for ratio in fit.correction_ratios:
            assert ratio <= 2 * fit.hypothesis_sum + 1e-9

    def test_fit_invariants(self):
        fit = local_dimension(provider("density(0.4, 0.1)"), 0.6, 0.2, 1e-3, 7, 1000)
        assert all(a > b for a, b in zip(fit.radii, fit.radii[1:]))
        assert fit.radii[0] == pytest.approx(0.2) and fit.radii[-1] == pytest.approx(1e-3)
        assert len(fit.log_measures) == 7
        assert math.isfinite(fit.slope) and fit.residual >= 0.0
        expected = [math.log(density_ball([0.4, 0.1], 0.6, r)) for r in fit.radii]
        assert np.allclose(fit.log_measures, expected, atol=1e-9)

    def test_cantor_gap_is_degenerate(self):
        with pytest.raises(DegenerateSignalError) as err:
            local_dimension(provider("cantor"), 0.5, 0.1, 1e-3, 10, 10**4)
        assert 1e-3 <= err.value.radius <= 0.1

    def test_non_continuous_rejected(self):
        with pytest.raises(CertificateError):
            local_dimension(provider("dirac(0.5)"), 0.5, 0.1, 1e-3)

    def test_argument_checks(self):
        p = provider("lebesgue")
        with pytest.raises(ValueError):
            local_dimension(p, 0.5, 1e-3, 0.1)
        with pytest.raises(ValueError):
            local_dimension(p, 0.5, 0.1, 1e-3, points=2)

    def test_large_hypothesis_sum_reported(self):
        fit = local_dimension(provider("density(0.9, 0.09)"), 0.3, 0.1, 1e-3, 10, 1000)
        assert fit.hypothesis_sum == pytest.approx(0.495)
        assert fit.hypothesis_met
        fit = local_dimension(provider("mix(0.5: cantor, 0.5: lebesgue)"), 0.3, 0.1, 1e-2, 5, 1000)
        assert not fit.hypothesis_met
        assert "lower bound" in fit.hypothesis_note


class TestExampleMeasure:
    def test_single(self):
        spec = example_measure([0.4])
        assert spec == CosineDensity((0.4,))
        assert make_provider(spec).coefficient(1) == pytest.approx(0.2)

    def test_empty_is_uniform(self):
        p = make_provider(example_measure([]))
        assert p.coefficient(1) == 0.0 and p.coefficient(5) == 0.0
        assert ball_measure(p, 0.5, 0.1, 10) == pytest.approx(0.2, abs=1e-16)

    def test_hypothesis(self):
        p = make_provider(example_measure([0.5, 0.3]))
        total, exact, _ = hypothesis_sum(p)
        assert total == pytest.approx(0.4) and exact

    def test_coefficient_identity(self, rng):
        a = list(rng.uniform(-1, 1, 8) * 0.1)
        p = make_provider(example_measure(a))
        for n, value in enumerate(a, start=1):
            assert p.coefficient(n) == pytest.approx(value / 2, abs=1e-17)
        assert p.coefficient(len(a) + 1) == 0.0

    def test_rejects_large(self):
        with pytest.raises(MeasureValidationError):
            example_measure([0.6, 0.4])
