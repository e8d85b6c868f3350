"""Arc measures and distribution functions recovered from Fourier data.

The numerically summed series carries mu_hat(n) only: the "-1" part of
the arc formula (the Lebesgue measure) is the sawtooth series, which is
handled in closed form.  The Wiener limit term is realized either from
atom estimates at the endpoints, by a direct Cesaro mean, or dropped for
measures certified continuous.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from ._numerics import block_means, checkpoints, compensated_cumsum, expi
from .coefficients import CoefficientProvider
from .errors import CertificateError
from .wiener import Window, atom_mass


class LimitMethod(str, enum.Enum):
    ATOM_DECOMPOSITION = "atoms"
    DIRECT_CESARO = "cesaro"
    SKIPPED_CONTINUOUS = "continuous"


@dataclass(frozen=True)
class CircleArc:
    """Half-open arc [a, b) with 0 <= a < b <= 1."""

    a: float
    b: float

    def __post_init__(self):
        if not (math.isfinite(self.a) and math.isfinite(self.b)
                and 0.0 <= self.a < self.b <= 1.0):
            raise ValueError(f"invalid arc [{self.a!r}, {self.b!r})")


@dataclass(frozen=True)
class SeriesResult:
    value: float
    terms_used: int
    tail_estimate: float
    limit_term: float
    limit_method: LimitMethod
    smoothing: int | None  # block length of block-Cesaro smoothing, None if off
    oscillation: float = 0.0  # part of tail_estimate owed to the limit term
    series: float = 0.0


def sawtooth(x: float) -> float:
    """Closed form of sum_{n>=1} sin(2 pi n x) / n."""
    f = x - math.floor(x)
    if f == 0.0:
        return 0.0
    return math.pi * (0.5 - f)


def sawtooth_series(x: float, n_terms: int, block: int | None = None) -> tuple[float, float]:
    """Numerically summed sawtooth series with block-Cesaro smoothing.

    Returns (value, tail) where tail is the spread of the block means over
    the last tenth of the terms.  ``block`` defaults to n_terms // 10.
    """
    n = np.arange(1, n_terms + 1)
    _, s = expi(n, x)
    if block is None:
        block = max(1, n_terms // 10)
    return _smoothed(s / n, block)


def _uniform_part(a: float, b: float) -> float:
    """Contribution of the "-1" coefficients to mu[a, b): always b - a.

    Evaluated through the sawtooth closed form plus the Wiener limit of
    the Dirac-at-0 part, which is 1/2 at an endpoint equal to 0 mod 1.
    """
    lead = 1.0 if a == 0.0 else 0.0
    ends = (0.5 if b == 1.0 else 0.0) - (0.5 if a == 0.0 else 0.0)
    return lead - (sawtooth(b) - sawtooth(a)) / math.pi + ends


def _smoothed(terms: np.ndarray, block: int | None) -> tuple[float, float]:
    """Final (optionally block-averaged) partial sum and its spread."""
    n_terms = terms.shape[0]
    partial = compensated_cumsum(terms)
    lo = n_terms - max(1, n_terms // 10)
    if block is None or block <= 1:
        value = float(partial[-1])
        window = partial[lo:]
    else:
        means = block_means(partial, block)
        value = float(means[-1])
        window = means[max(lo, block - 1):]
    tail = float(np.max(np.abs(window - value))) if window.size else 0.0
    return value, tail


def _resolve_block(provider: CoefficientProvider, n_terms: int, smoothing) -> int | None:
    if smoothing is None or smoothing == "none":
        return None
    if smoothing == "auto":
        if provider.is_finite_cosine:
            return None
        return max(1, n_terms // 10)
    block = int(smoothing)
    if not 1 <= block <= n_terms:
        raise ValueError(f"block length {block} outside 1..{n_terms}")
    return block


def _cesaro_limit(diff_terms: np.ndarray) -> tuple[float, float]:
    """(1/2N) sum of ``diff_terms`` and its oscillation from N/10 to N."""
    n_terms = diff_terms.shape[0]
    partial = compensated_cumsum(diff_terms)
    value = float(partial[-1]) / (2 * n_terms)
    first = int(checkpoints(n_terms)[0])
    means = partial[first - 1:] / (2 * np.arange(first, n_terms + 1))
    return value, float(np.max(np.abs(means - value)))


def _limit(provider, method, a, b, za, zb, n_terms):
    """Limit term (mu{a} - mu{b}) / 2 and its oscillation diagnostic."""
    if method is LimitMethod.SKIPPED_CONTINUOUS:
        if not provider.is_continuous:
            raise CertificateError(
                "continuous fast path needs a measure without atoms")
        return 0.0, 0.0
    if method is LimitMethod.ATOM_DECOMPOSITION:
        # b = 1 is the point 0 on the circle
        est_a = atom_mass(provider, a, Window.ONE_SIDED, n_terms, terms=za.real)
        est_b = atom_mass(provider, b % 1.0, Window.ONE_SIDED, n_terms,
                          terms=zb.real)
        return ((est_a.value - est_b.value) / 2.0,
                (est_a.oscillation + est_b.oscillation) / 2.0)
    return _cesaro_limit(za.real - zb.real)


def _rotated(provider: CoefficientProvider, x: float, n: np.ndarray) -> np.ndarray:
    """mu_hat(n) e(n x) for n = 1..N."""
    coeffs = provider.coefficients(n.shape[0])
    c, s = expi(n, x)
    return coeffs * (c + 1j * s)


def _reconstruct(provider, a, b, n_terms, limit, smoothing) -> SeriesResult:
    if n_terms < 1:
        raise ValueError("n_terms must be >= 1")
    method = LimitMethod(limit)
    block = _resolve_block(provider, n_terms, smoothing)
    n = np.arange(1, n_terms + 1)
    za = _rotated(provider, a, n)
    zb = _rotated(provider, b, n)
    series, tail = _smoothed((zb.imag - za.imag) / (math.pi * n), block)
    limit_term, osc = _limit(provider, method, a, b, za, zb, n_terms)
    return SeriesResult(
        value=(b - a) + series + limit_term,
        terms_used=n_terms,
        tail_estimate=tail + osc,
        limit_term=limit_term,
        limit_method=method,
        smoothing=block,
        oscillation=osc,
        series=series,
    )


def _exact(value: float, n_terms: int, method, block) -> SeriesResult:
    return SeriesResult(value, n_terms, 0.0, 0.0, LimitMethod(method), block)


def cdf(provider: CoefficientProvider, x: float, n_terms: int = 100_000,
        limit: LimitMethod | str = LimitMethod.ATOM_DECOMPOSITION,
        smoothing="auto") -> SeriesResult:
    """D(x) = mu[0, x) for x in [0, 1]; D(0) = 0 and D(1) = 1 exactly."""
    if not (0.0 <= x <= 1.0):
        raise ValueError(f"x = {x!r} outside [0, 1]")
    if LimitMethod(limit) is LimitMethod.SKIPPED_CONTINUOUS and not provider.is_continuous:
        raise CertificateError("continuous fast path needs a measure without atoms")
    block = _resolve_block(provider, n_terms, smoothing)
    if x == 0.0:
        return _exact(0.0, n_terms, limit, block)
    if x == 1.0:
        return _exact(1.0, n_terms, limit, block)
    return _reconstruct(provider, 0.0, x, n_terms, limit, smoothing)


def arc_measure(provider: CoefficientProvider, arc: CircleArc, n_terms: int = 100_000,
                limit: LimitMethod | str = LimitMethod.ATOM_DECOMPOSITION,
                smoothing="auto") -> SeriesResult:
    """mu[a, b) from the first ``n_terms`` Fourier coefficients.

    ``smoothing`` is "auto" (block-Cesaro with block N/10 unless the
    measure has finitely many nonzero coefficients), "none", or an
    explicit block length.
    """
    if arc.a == 0.0:
        return cdf(provider, arc.b, n_terms, limit, smoothing)
    return _reconstruct(provider, arc.a, arc.b, n_terms, limit, smoothing)


def arc_measure_theorem(provider: CoefficientProvider, arc: CircleArc,
                        n_terms: int = 10_000, smoothing="block") -> SeriesResult:
    """Direct evaluation of the arc formula with (mu_hat(n) - 1) coefficients.

    Both the series and the Cesaro limit are summed numerically, including
    the slowly converging Lebesgue part.  Kept as an independent route for
    cross-checking :func:`arc_measure`.
    """
    if n_terms < 1:
        raise ValueError("n_terms must be >= 1")
    if smoothing == "block":
        block = max(1, n_terms // 10)
    else:
        block = _resolve_block(provider, n_terms, smoothing)
    a, b = arc.a, arc.b
    n = np.arange(1, n_terms + 1)
    shifted = provider.coefficients(n_terms) - 1.0
    ca, sa = expi(n, a)
    cb, sb = expi(n, b)
    za = shifted * (ca + 1j * sa)
    zb = shifted * (cb + 1j * sb)
    series, tail = _smoothed((zb.imag - za.imag) / (math.pi * n), block)
    limit_term, osc = _cesaro_limit(za.real - zb.real)
    lead = 1.0 if a == 0.0 else 0.0
    return SeriesResult(
        value=lead + series + limit_term,
        terms_used=n_terms,
        tail_estimate=tail + osc,
        limit_term=limit_term,
        limit_method=LimitMethod.DIRECT_CESARO,
        smoothing=block,
        oscillation=osc,
        series=series,
    )


def autocorrelation_arc(provider: CoefficientProvider, arc: CircleArc,
                        n_terms: int = 1_000, smoothing="auto") -> SeriesResult:
    """(mu * conj(mu))[a, b) for a continuous measure mu.

    The autocorrelation has coefficients |mu_hat(n)|^2 and no atoms, so no
    limit term survives apart from the sawtooth endpoint halves.
    """
    if not provider.is_continuous:
        raise CertificateError("autocorrelation formula needs a continuous measure")
    if n_terms < 1:
        raise ValueError("n_terms must be >= 1")
    block = _resolve_block(provider, n_terms, smoothing)
    a, b = arc.a, arc.b
    n = np.arange(1, n_terms + 1)
    power = np.abs(provider.coefficients(n_terms)) ** 2
    _, sa = expi(n, a)
    _, sb = expi(n, b)
    series, tail = _smoothed(power * (sb - sa) / (math.pi * n), block)
    return SeriesResult(
        value=_uniform_part(a, b) + series,
        terms_used=n_terms,
        tail_estimate=tail,
        limit_term=0.0,
        limit_method=LimitMethod.SKIPPED_CONTINUOUS,
        smoothing=block,
        series=series,
    )
