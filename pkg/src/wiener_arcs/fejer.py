"""Fejer kernel and Fejer means of f(x) = D(x) - x.

The closed form used is sin^2((n+1) pi t) / ((n+1) sin^2(pi t)), the one
that agrees with the coefficient-sum definition of the kernel.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ._numerics import compensated_cumsum, expi, frac_mul
from .arcs import _resolve_block, _smoothed
from .coefficients import CoefficientProvider
from .wiener import Window, atom_mass

_TAYLOR_RADIUS = 1e-8


@dataclass(frozen=True)
class KernelSample:
    n: int
    t: float
    value_sum: float
    value_closed: float


def _kernel_sum(n: int, t: float) -> float:
    if n == 0:
        return 1.0
    j = np.arange(1, n + 1)
    c, _ = expi(j, t)
    weights = 1.0 - j / (n + 1)
    return 1.0 + 2.0 * float(compensated_cumsum(weights * c)[-1])


def _kernel_closed(n: int, t: float) -> float:
    m = n + 1
    delta = t - round(t)
    if abs(delta) < _TAYLOR_RADIUS:
        return m * (1.0 - (m * m - 1) * (math.pi * delta) ** 2 / 3.0)
    # sin^2 has period 1 in its argument / pi, so reduce m * delta exactly
    num = math.sin(math.pi * float(frac_mul(np.array([m]), abs(delta))[0]))
    den = math.sin(math.pi * abs(delta))
    return num * num / (m * den * den)


def fejer_kernel(n: int, t: float) -> KernelSample:
    """K_n(t) from the trigonometric sum and from the closed form."""
    if n < 0:
        raise ValueError("order must be nonnegative")
    return KernelSample(n, t, _kernel_sum(n, t), _kernel_closed(n, t))


def fejer_kernel_closed(n: int, t) -> np.ndarray:
    """Vectorized closed form on an array of points."""
    t = np.asarray(t, dtype=np.float64)
    return np.array([_kernel_closed(n, float(v)) for v in t.ravel()]).reshape(t.shape)


def fejer_sup_bound_check(n: int, lam: float, samples: int = 10_000) -> bool:
    """Check sup of K_n on [lam, 1 - lam] against 1/((n+1) sin^2(pi lam))."""
    if not 0.0 < lam < 0.5:
        raise ValueError("lambda must lie in (0, 1/2)")
    bound = 1.0 / ((n + 1) * math.sin(math.pi * lam) ** 2)
    t = np.linspace(lam, 1.0 - lam, samples)
    m = n + 1
    values = np.sin(np.pi * m * t) ** 2 / (m * np.sin(np.pi * t) ** 2)
    return bool(np.all(values <= bound * (1.0 + 1e-12)))


@dataclass(frozen=True)
class AuxFunctionCoefficients:
    """Fourier coefficients of f = D - x built from mu_hat.

    f_hat(n) = mu_hat(n) / (2 pi i n) for n != 0; f_hat(0) comes from the
    atom at 0 and the series sum Im(mu_hat(j)/j), both over ``terms``.
    """

    provider: CoefficientProvider
    terms: int
    f_hat0: float

    def f_hat(self, n: int) -> complex:
        if n == 0:
            return complex(self.f_hat0)
        return self.provider.coefficient(n) / (2j * math.pi * n)


def aux_coefficients(provider: CoefficientProvider, terms: int = 100_000,
                     smoothing="auto") -> AuxFunctionCoefficients:
    block = _resolve_block(provider, terms, smoothing)
    j = np.arange(1, terms + 1)
    series, _ = _smoothed(provider.coefficients(terms).imag / (math.pi * j), block)
    half_atom = atom_mass(provider, 0.0, Window.ONE_SIDED, terms).value / 2.0
    return AuxFunctionCoefficients(provider, terms, half_atom - series)


def fejer_mean_aux(provider: CoefficientProvider, t: float, n: int,
                   aux: AuxFunctionCoefficients | None = None) -> float:
    """sigma_n(f, t) for f = D - x; tends to D(t) + mu{t}/2 - t."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if aux is None:
        aux = aux_coefficients(provider, max(n, 10_000))
    j = np.arange(1, n + 1)
    coeffs = provider.coefficients(n)
    c, s = expi(j, t)
    # f_hat(j) e(jt) + conj = Im(mu_hat(j) e(jt)) / (pi j)
    im = coeffs.real * s + coeffs.imag * c
    terms = (1.0 - j / (n + 1)) * im / (math.pi * j)
    return aux.f_hat0 + float(compensated_cumsum(terms)[-1])
