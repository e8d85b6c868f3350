import numpy as np
import pytest

from wiener_arcs import Cantor, CosineDensity, Window, atom_mass, make_provider, parse_measure


def test_lebesgue_symmetric_keeps_only_zero_term():
    est = atom_mass(make_provider(parse_measure("lebesgue")), 0.5, Window.SYMMETRIC, 1000)
    assert est.value == pytest.approx(1 / 2001, abs=1e-18)


@pytest.mark.parametrize("n_terms", [1, 2, 7, 100, 12345])
def test_dirac_phase_cancellation(n_terms):
    est = atom_mass(make_provider(parse_measure("dirac(1/3)")), 1 / 3,
                    Window.ONE_SIDED, n_terms)
    assert est.value == pytest.approx(1.0, abs=1e-12)


def test_mixture_atom_symmetric():
    provider = make_provider(parse_measure("mix(0.5: dirac(1/3), 0.5: lebesgue)"))
    est = atom_mass(provider, 1 / 3, Window.SYMMETRIC, 10_000)
    assert abs(est.value - 0.5) < 0.01
    # the only error is the surviving Lebesgue n = 0 term
    assert abs(est.value - 0.5) <= 0.5 / (2 * 10_000 + 1) + 1e-12


@pytest.mark.parametrize("text, atoms", [
    ("dirac(1/3)", [(1 / 3, 1.0)]),
    ("atoms(0.2:0.5, 0.7:0.5)", [(0.2, 0.5), (0.7, 0.5)]),
    ("atoms(0:1/4, 1/4:1/4, 1/2:1/4, 3/4:1/4)", [(0, .25), (.25, .25), (.5, .25), (.75, .25)]),
    ("atoms(1/5:0.3, 3/7:0.7)", [(0.2, 0.3), (3 / 7, 0.7)]),
])
@pytest.mark.parametrize("n_terms", [10**2, 10**3, 10**4])
def test_atomic_convergence_rate(text, atoms, n_terms):
    provider = make_provider(parse_measure(text))
    c = 2 * len(atoms)
    for p, w in atoms:
        est = atom_mass(provider, p, Window.ONE_SIDED, n_terms)
        assert abs(est.value - w) <= c / n_terms


@pytest.mark.parametrize("spec", [Cantor(), CosineDensity((0.4, 0.1))])
@pytest.mark.parametrize("x", [0.0, 0.1, 0.25, 1 / 3, 0.5, 0.7, 0.9])
def test_continuous_measures_have_no_atoms(spec, x):
    provider = make_provider(spec)
    for window in Window:
        assert abs(atom_mass(provider, x, window, 10_000).value) < 0.02


def test_window_consistency(fixture_providers, rng):
    xs = list(rng.uniform(0, 1, 10)) + [0.0, 1 / 3, 0.2, 0.7]
    for provider in fixture_providers.values():
        for x in xs:
            sym = atom_mass(provider, x, Window.SYMMETRIC, 10_000)
            one = atom_mass(provider, x, Window.ONE_SIDED, 10_000)
            assert abs(sym.value - one.value) <= sym.oscillation + one.oscillation


def test_estimate_range_invariant(fixture_providers, rng):
    for provider in fixture_providers.values():
        for x in rng.uniform(0, 1, 10):
            for window in Window:
                est = atom_mass(provider, x, window, 5000)
                tol = est.oscillation + 1e-9
                assert -tol <= est.value <= 1 + tol


def test_deterministic():
    provider = make_provider(Cantor())
    a = atom_mass(provider, 0.123, Window.SYMMETRIC, 20_000)
    b = atom_mass(provider, 0.123, Window.SYMMETRIC, 20_000)
    assert a == b


def test_requires_positive_terms():
    with pytest.raises(ValueError):
        atom_mass(make_provider(Cantor()), 0.1, Window.ONE_SIDED, 0)
