"""Point-mass estimation by Cesaro averages of mu_hat(n) e(n x)."""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from ._numerics import checkpoints, compensated_cumsum, expi
from .coefficients import CoefficientProvider


class Window(str, enum.Enum):
    SYMMETRIC = "symmetric"   # n = -N..N
    ONE_SIDED = "one-sided"   # n = 1..N


@dataclass(frozen=True)
class AtomEstimate:
    value: float
    window: Window
    terms: int
    oscillation: float


def wiener_terms(provider: CoefficientProvider, x: float, n_terms: int) -> np.ndarray:
    """Re(mu_hat(n) e(n x)) for n = 1..n_terms."""
    coeffs = provider.coefficients(n_terms)
    c, s = expi(np.arange(1, n_terms + 1), x)
    return coeffs.real * c - coeffs.imag * s


def _running_means(partial: np.ndarray, window: Window) -> np.ndarray:
    """Running means for every term count from ceil(N/10) to N."""
    first = int(checkpoints(partial.shape[0])[0])
    n = np.arange(first, partial.shape[0] + 1)
    tail = partial[first - 1:]
    if window is Window.SYMMETRIC:
        return (1.0 + 2.0 * tail) / (2 * n + 1)
    return tail / n


def atom_mass(provider: CoefficientProvider, x: float,
              window: Window | str = Window.ONE_SIDED, n_terms: int = 10_000,
              *, terms: np.ndarray | None = None) -> AtomEstimate:
    """Estimate mu{x} from the first ``n_terms`` coefficients.

    The symmetric window uses hermitian symmetry: the n and -n terms pair
    into twice the real part, plus the n = 0 term.  ``oscillation`` is the
    largest distance between the final mean and the running means for every
    term count from N/10 to N (a superset of the checkpoints N/10, ..., N).

    ``terms`` lets callers that already hold Re(mu_hat(n) e(n x)) skip
    recomputing them.
    """
    if n_terms < 1:
        raise ValueError("n_terms must be >= 1")
    window = Window(window)
    if terms is None:
        terms = wiener_terms(provider, x, n_terms)
    partial = compensated_cumsum(terms)
    total = float(partial[-1])
    if window is Window.SYMMETRIC:
        value = (1.0 + 2.0 * total) / (2 * n_terms + 1)
    else:
        value = total / n_terms
    means = _running_means(partial, window)
    oscillation = float(np.max(np.abs(means - value)))
    return AtomEstimate(value, window, n_terms, oscillation)
