"""Cantor function: exact values and its Fourier series."""

from __future__ import annotations

from dataclasses import dataclass

from .arcs import LimitMethod, cdf
from .coefficients import Cantor, CoefficientProvider, make_provider
from .oracle import cantor_exact

__all__ = ["CantorSeriesPoint", "cantor_exact", "cantor_provider", "cantor_series"]

_PROVIDER = make_provider(Cantor())


def cantor_provider() -> CoefficientProvider:
    """Shared provider for the Cantor measure (memoizes coefficients)."""
    return _PROVIDER


@dataclass(frozen=True)
class CantorSeriesPoint:
    x: float
    partial_sum: float
    N: int
    exact: float
    tail_estimate: float = 0.0

    @property
    def error(self) -> float:
        return self.partial_sum - self.exact


def cantor_series(x: float, n_terms: int, smoothing="auto") -> CantorSeriesPoint:
    """Partial sum of the Fourier series of C at x in (0, 1).

    C(x) = 1/2 + (1/pi) sum (c_hat(n) - 1)/n sin(2 pi n x); the "-1" part is
    the sawtooth and is taken in closed form, so this is the continuous
    fast path of the distribution-function reconstruction.
    """
    if not 0.0 < x < 1.0:
        raise ValueError(f"x = {x!r} outside (0, 1)")
    if n_terms < 1:
        raise ValueError("n_terms must be >= 1")
    res = cdf(_PROVIDER, x, n_terms, LimitMethod.SKIPPED_CONTINUOUS, smoothing)
    return CantorSeriesPoint(x, res.value, n_terms, cantor_exact(x),
                             res.tail_estimate)
