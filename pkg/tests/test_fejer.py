import math

import numpy as np
import pytest

from wiener_arcs import (fejer_kernel, fejer_mean_aux, fejer_sup_bound_check,
                         make_provider, parse_measure)
from wiener_arcs.fejer import aux_coefficients, fejer_kernel_closed
from wiener_arcs.oracle import oracle_atom, oracle_cdf

ORDERS = [0, 1, 2, 7, 63, 100, 511]


def test_examples():
    assert fejer_kernel(2, 0.0).value_closed == 3.0
    assert fejer_kernel(2, 0.0).value_sum == pytest.approx(3.0, abs=1e-15)
    k = fejer_kernel(1, 0.5)
    assert k.value_sum == pytest.approx(0.0, abs=1e-15)
    assert k.value_closed == pytest.approx(0.0, abs=1e-15)
    k = fejer_kernel(63, 0.3)
    assert abs(k.value_sum - k.value_closed) <= 1e-10


@pytest.mark.parametrize("n", ORDERS)
def test_sum_matches_closed(n, rng):
    for t in rng.uniform(0, 1, 200):
        k = fejer_kernel(n, float(t))
        assert abs(k.value_sum - k.value_closed) <= 1e-10 * (n + 1)


@pytest.mark.parametrize("n", ORDERS)
def test_near_integer_taylor_branch(n):
    for t in (0.0, 1e-9, -3e-9, 1 - 2e-9, 1.0, 2.0):
        k = fejer_kernel(n, t)
        assert abs(k.value_sum - k.value_closed) <= 1e-10 * (n + 1)
    # continuity across the branch switch
    inside = fejer_kernel(n, 0.99e-8).value_closed
    outside = fejer_kernel(n, 1.01e-8).value_closed
    assert abs(inside - outside) <= 1e-10 * (n + 1)


@pytest.mark.parametrize("n", ORDERS)
def test_symmetry_and_sign(n, rng):
    t = rng.uniform(0, 1, 500)
    left = fejer_kernel_closed(n, t)
    right = fejer_kernel_closed(n, 1 - t)
    assert np.max(np.abs(left - right)) <= 1e-12
    assert np.min(left) >= -1e-12


@pytest.mark.parametrize("n", [0, 1, 5, 17, 50, 100])
def test_unit_integral(n):
    t = np.linspace(0, 1, 10**4)
    values = fejer_kernel_closed(n, t)
    trapezoid = getattr(np, "trapezoid", None) or np.trapz
    assert trapezoid(values, t) == pytest.approx(1.0, abs=1e-6)


@pytest.mark.parametrize("n, lam", [(10, 0.25), (100, 0.01), (0, 0.3), (511, 0.05), (7, 0.49)])
def test_sup_bound(n, lam):
    assert fejer_sup_bound_check(n, lam)


def test_sup_bound_domain():
    with pytest.raises(ValueError):
        fejer_sup_bound_check(3, 0.5)
    with pytest.raises(ValueError):
        fejer_kernel(-1, 0.2)


class TestAuxFunction:
    def test_lebesgue_is_zero(self):
        p = make_provider(parse_measure("lebesgue"))
        for n in (1, 10, 1000):
            assert fejer_mean_aux(p, 0.4, n) == 0.0

    def test_dirac_half(self):
        p = make_provider(parse_measure("dirac(1/2)"))
        assert abs(fejer_mean_aux(p, 0.5, 10**4)) < 0.01

    def test_cantor_quarter(self):
        p = make_provider(parse_measure("cantor"))
        assert abs(fejer_mean_aux(p, 0.25, 10**4) - 1 / 12) < 5e-3

    def test_limit_with_atom_at_t(self, fixture_specs, fixture_providers):
        # sigma_n(f, t) -> D(t) + mu{t}/2 - t
        for name in ("dirac", "mix", "atoms"):
            spec, p = fixture_specs[name], fixture_providers[name]
            for t in (0.2, 1 / 3, 0.6):
                target = oracle_cdf(spec, t) + oracle_atom(spec, t) / 2 - t
                assert abs(fejer_mean_aux(p, t, 10**4) - target) < 0.01

    def test_hermitian(self, fixture_providers):
        aux = aux_coefficients(fixture_providers["atoms"], 1000)
        for n in (1, 2, 17):
            assert aux.f_hat(-n) == pytest.approx(aux.f_hat(n).conjugate(), abs=1e-15)
        assert aux.f_hat(0).imag == 0.0

    def test_f_hat0_matches_quadrature(self, fixture_specs, fixture_providers):
        x = (np.arange(10**4) + 0.5) / 10**4
        for name, spec in fixture_specs.items():
            integral = float(np.mean([oracle_cdf(spec, float(v)) - v for v in x]))
            aux = aux_coefficients(fixture_providers[name], 10**5)
            assert abs(aux.f_hat0 - integral) < 1e-3, name

    def test_domain(self, fixture_providers):
        with pytest.raises(ValueError):
            fejer_mean_aux(fixture_providers["cantor"], 0.3, 0)


def test_closed_form_reference():
    # independent evaluation straight from the definition with complex exponentials
    n, t = 9, 0.137
    j = np.arange(-n, n + 1)
    direct = np.sum((1 - np.abs(j) / (n + 1)) * np.exp(2j * math.pi * j * t)).real
    assert fejer_kernel(n, t).value_closed == pytest.approx(direct, abs=1e-13)
